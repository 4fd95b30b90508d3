#pragma once

#include <cstdint>
#include <random>

namespace twdl {

/// splitmix64 step, used to derive independent per-instance seeds from a
/// master seed so results do not depend on worker scheduling.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    return mix_seed(mix_seed(master ^ (stream * 0x9e3779b97f4a7c15ULL)) + index);
}

/// Deterministic RNG wrapper. Draws use modulo reduction on purpose:
/// std::uniform_int_distribution is implementation-defined and would break
/// the reproducibility contract across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform-ish value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    /// Uniform-ish value in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace twdl
