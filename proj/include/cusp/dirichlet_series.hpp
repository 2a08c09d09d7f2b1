#pragma once

#include <cstdint>
#include <string>

#include "cusp/hecke.hpp"
#include "cusp/special.hpp"

namespace cusp {

/// Truncated Dirichlet series value with a bound on the omitted tail.
struct SeriesPoint {
  Complex s;
  Complex value;
  std::uint64_t terms_used = 0;
  double tail_bound = 0;  // +inf outside absolute convergence
};

enum class SeriesMode { TailBounded, Exploratory };

/// Rigorous bound on sum_{n > X} d(n)^2 n^{-sigma} for sigma > 1, from
/// d(n)^2 <= d_4(n) and sum_{n<=y} d_4(n)/n <= (1 + log y)^4 over dyadic blocks:
///   sum_{i>=0} 2 (2^i X)^{1-sigma} (1 + log(2^{i+1} X))^4.
double rankin_tail_bound(double sigma, std::uint64_t truncation);

/// sum_{n<=X, n = l mod m} lambda_f(n) lambda_g(n) n^{-s}. The normalized series
/// converges absolutely for Re s > 1; raw-coefficient abscissae shift by (k1+k2)/2 - 1.
/// TailBounded mode rejects Re s <= 1 with std::domain_error.
SeriesPoint rankin_partial(const NormalizedCoeffs& f, const NormalizedCoeffs& g, std::uint64_t m,
                           std::int64_t l, Complex s, std::uint64_t truncation,
                           SeriesMode mode = SeriesMode::TailBounded);

/// The four factors of the completed Rankin-Selberg series at level N = 1:
///   (2 pi)^{-2w} Gamma(w) Gamma(w - k2 + 1) zeta_{m^2}(2w - (k1 + k2) + 2) R(w),
/// with w = s + (k1 + k2)/2 - 1 the raw-coefficient variable for the normalized s,
/// so the zeta argument is 2s and R(w) is rankin_partial at s. k2 is the smaller weight.
struct CompletedRankin {
  Complex s;          // normalized variable
  Complex s_raw;      // w
  Complex archimedean;  // (2 pi)^{-2w} Gamma(w) Gamma(w - k2 + 1)
  Complex zeta_factor;
  SeriesPoint rankin;
  Complex value;
};

/// Throws std::domain_error naming the factor whose argument leaves its domain.
CompletedRankin completed_rankin(const NormalizedCoeffs& f, const NormalizedCoeffs& g,
                                 std::uint64_t m, std::int64_t l, int k1, int k2, Complex s,
                                 std::uint64_t truncation);

}  // namespace cusp
