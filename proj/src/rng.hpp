#ifndef RM_RNG_HPP
#define RM_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace rm {

// Deterministic splittable generator. Forking derives an independent stream
// from (key, label) without advancing the parent, so retries and parallel
// branches draw reproducible values regardless of evaluation order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    Rng fork(std::uint64_t label) const {
        Rng child(0);
        child.state_ = mix(state_ ^ mix(label + 0x632be59bd9b4e019ull));
        return child;
    }

    Rng fork(const std::string& label) const {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : label) h = (h ^ c) * 1099511628211ull;
        return fork(h);
    }

    // Uniform integer in [lo, hi].
    long draw_int(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Nonzero uniform integer in [-bound, bound].
    long draw_nonzero(long bound) {
        for (;;) {
            long v = draw_int(-bound, bound);
            if (v != 0) return v;
        }
    }

    Rat draw_rat(long bound) { return Rat(draw_int(-bound, bound)); }

    std::vector<Rat> draw_vector(std::size_t n, long bound) {
        std::vector<Rat> v(n);
        for (auto& x : v) x = draw_rat(bound);
        return v;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

// Coefficient box sizes used for the random draws. Separating forms and
// matrices use kCoeffBound; series expansion points use kExpansionBound.
inline constexpr long kCoeffBound = 1L << 16;
inline constexpr long kExpansionBound = 1L << 17;
inline constexpr int kRetryCap = 32;

} // namespace rm

#endif
