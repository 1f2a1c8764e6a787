#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "jetinv/errors.hpp"

namespace jetinv {

/// Exact rational scalar. All core arithmetic in the engine runs on this type;
/// doubles appear only in the eigenframe code paths.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" (arbitrary precision, optional sign).
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (q.get_den() == 0) throw Error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Canonical "p" / "p/q" form (what set_str accepts back).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

/// Deterministic 64-bit RNG. mt19937_64 output is pinned by the standard, so
/// reports seeded through this are reproducible across platforms. Bounded
/// draws go through operator% on purpose: std::uniform_int_distribution is
/// not portable.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Numerators in [-9,9], denominators in [1,9].
    Rat rat_small() { return rat(range(-9, 9), range(1, 9)); }

    /// Small nonzero rational (for samples that must avoid degenerate zeros).
    Rat rat_small_nonzero() {
        for (;;) {
            Rat q = rat_small();
            if (!is_zero(q)) return q;
        }
    }

  private:
    std::mt19937_64 gen_;
};

/// Per-case RNG: seed xor case index, split per case rather than shared.
inline Rng case_rng(std::uint64_t seed, std::uint64_t case_index) {
    return Rng(seed ^ case_index);
}

} // namespace jetinv
