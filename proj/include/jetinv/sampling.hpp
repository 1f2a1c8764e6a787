#pragma once

#include <functional>

#include "jetinv/jetpoint.hpp"
#include "jetinv/motion.hpp"
#include "jetinv/rational.hpp"

namespace jetinv {

/// Random jet with small-rational coefficients at a random base point.
JetPoint random_jet(Rng& rng, int n, int order);

/// Random rational motion: Cayley rotation of a random skew parameter plus a
/// random translation.
Motion random_motion(Rng& rng, int n);

/// Resamples until pred accepts (regular-stratum semantics: degenerate draws
/// are rejected). Throws after max_attempts.
JetPoint random_jet_where(Rng& rng, int n, int order,
                          const std::function<bool(const JetPoint&)>& pred,
                          int max_attempts = 64);

} // namespace jetinv
