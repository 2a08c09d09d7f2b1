#include "cusp/dirichlet_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cusp/asymptotics.hpp"

namespace cusp {

double rankin_tail_bound(double sigma, std::uint64_t truncation) {
  if (!(sigma > 1.0)) return std::numeric_limits<double>::infinity();
  if (truncation == 0) throw std::invalid_argument("rankin_tail_bound: truncation must be >= 1");
  const double x = static_cast<double>(truncation);
  auto block = [&](int i) {
    const double a = std::ldexp(x, i);
    return 2.0 * std::pow(a, 1.0 - sigma) * std::pow(1.0 + std::log(2.0 * a), 4);
  };
  double total = 0.0;
  for (int i = 0; i < 4000; ++i) {
    const double t = block(i);
    total += t;
    // Block ratios decrease in i, so once below one the rest is geometric.
    const double ratio = block(i + 1) / t;
    if (ratio < 1.0 && t * ratio / (1.0 - ratio) <= 1e-6 * total) {
      return total + t * ratio / (1.0 - ratio);
    }
  }
  return std::numeric_limits<double>::infinity();
}

SeriesPoint rankin_partial(const NormalizedCoeffs& f, const NormalizedCoeffs& g, std::uint64_t m,
                           std::int64_t l, Complex s, std::uint64_t truncation, SeriesMode mode) {
  if (m == 0) throw std::invalid_argument("rankin_partial: modulus must be >= 1");
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = l % mm;
  if (r < 0) r += mm;
  if (std::gcd(static_cast<std::uint64_t>(r), m) != 1) {
    throw std::invalid_argument("rankin_partial: gcd(l, m) != 1");
  }
  if (truncation > f.limit() || truncation > g.limit()) {
    throw std::out_of_range("rankin_partial: truncation exceeds available coefficients");
  }
  const double sigma = s.real(), t = s.imag();
  if (mode == SeriesMode::TailBounded && !(sigma > 1.0)) {
    throw std::domain_error("rankin_partial: Re s <= 1 lies outside absolute convergence");
  }
  SeriesPoint out;
  out.s = s;
  out.terms_used = truncation;
  out.tail_bound = rankin_tail_bound(sigma, truncation);

  NeumaierSum re, im;
  const std::uint64_t start = r == 0 ? m : static_cast<std::uint64_t>(r);
  for (std::uint64_t n = start; n <= truncation; n += m) {
    const double c = f.lambda(n) * g.lambda(n);
    if (c == 0.0) continue;
    const double logn = std::log(static_cast<double>(n));
    const double mag = c * std::exp(-sigma * logn);
    if (t == 0.0) {
      re.add(mag);
    } else {
      re.add(mag * std::cos(t * logn));
      im.add(-mag * std::sin(t * logn));
    }
  }
  out.value = Complex(re.value(), im.value());
  return out;
}

namespace {

bool is_gamma_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

CompletedRankin completed_rankin(const NormalizedCoeffs& f, const NormalizedCoeffs& g,
                                 std::uint64_t m, std::int64_t l, int k1, int k2, Complex s,
                                 std::uint64_t truncation) {
  if (k1 != f.weight() || k2 != g.weight()) {
    throw std::invalid_argument("completed_rankin: weights do not match the coefficient arrays");
  }
  const int k_small = std::min(k1, k2);
  const double shift = 0.5 * (k1 + k2) - 1.0;

  CompletedRankin out;
  out.s = s;
  out.s_raw = s + shift;
  const Complex w = out.s_raw;
  const Complex gamma_arg_2 = w - static_cast<double>(k_small) + 1.0;
  if (is_gamma_pole(w)) throw std::domain_error("completed_rankin: Gamma(s) at a pole");
  if (is_gamma_pole(gamma_arg_2)) {
    throw std::domain_error("completed_rankin: Gamma(s - k2 + 1) at a pole");
  }
  const Complex zeta_arg = 2.0 * w - static_cast<double>(k1 + k2) + 2.0;
  if (!(zeta_arg.real() > 0.0) || zeta_arg == Complex(1.0)) {
    throw std::domain_error("completed_rankin: zeta_{Nm^2}(2s - (k1+k2) + 2) outside Re > 0, s != 1");
  }
  if (!(s.real() > 1.0)) {
    throw std::domain_error("completed_rankin: R(s) requires Re s > 1 (normalized)");
  }

  const Complex two_pi = 2.0 * std::numbers::pi;
  out.archimedean = std::exp(-2.0 * w * std::log(two_pi)) * gamma(w) * gamma(gamma_arg_2);
  out.zeta_factor = zeta_restricted(m * m, zeta_arg);
  out.rankin = rankin_partial(f, g, m, l, s, truncation);
  out.value = out.archimedean * out.zeta_factor * out.rankin.value;
  return out;
}

}  // namespace cusp
