#ifndef BOOKBOOST_RNG_HPP
#define BOOKBOOST_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bookboost {

/// mt19937_64 with hand-rolled draw helpers. std::uniform_*_distribution and
/// std::shuffle are implementation-defined, so results would not be stable
/// across standard libraries; these are.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in the open interval (0, 1).
    double uniform_open01() {
        const std::uint64_t bits = engine_() >> 12;  // 52 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-52;
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    void shuffle(std::vector<int>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Splitmix-style mixer for deriving independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace bookboost

#endif
