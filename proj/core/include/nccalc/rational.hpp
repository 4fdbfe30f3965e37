#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nccalc {

/// Exact rational scalar. All coefficient arithmetic in the engine is over Q.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

/// "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// splitmix64: the deterministic mixer behind every seed derivation in the
/// engine (per-trial envs, pivot probes, sample generators).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small deterministic PRNG over splitmix64, used wherever reproducible
/// pseudo-random streams are needed.
class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long next_in(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

  private:
    std::uint64_t state_;
};

}  // namespace nccalc
