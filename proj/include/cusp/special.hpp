#pragma once

#include <complex>
#include <cstdint>

namespace cusp {

using Complex = std::complex<double>;

/// Lanczos (g = 7, 9 terms) with reflection below Re s = 1/2.
/// Relative error about 1e-15 away from the poles; throws std::domain_error at them.
Complex gamma(Complex s);

/// Riemann zeta through the alternating eta series with Borwein's acceleration,
/// zeta(s) = eta(s) / (1 - 2^{1-s}). Error below 1e-10 for Re s >= 1/2, |Im s| <= 50.
/// Throws std::domain_error for Re s <= 0, at s = 1, and where 2^{1-s} = 1.
Complex zeta(Complex s);

/// prod_{p | level} (1 - p^{-s}) zeta(s).
Complex zeta_restricted(std::uint64_t level, Complex s);

}  // namespace cusp
