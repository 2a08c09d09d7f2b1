#include "cusp/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cusp {

Complex gamma(Complex s) {
  constexpr double kPi = std::numbers::pi;
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw std::domain_error("gamma: pole at a non-positive integer");
  }
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma(1.0 - s));

  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoeff{
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const Complex z = s - 1.0;
  Complex x = kCoeff[0];
  for (std::size_t i = 1; i < kCoeff.size(); ++i) x += kCoeff[i] / (z + static_cast<double>(i));
  const Complex t = z + kG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

Complex zeta(Complex s) {
  if (!(s.real() > 0.0)) throw std::domain_error("zeta: requires Re s > 0");
  const Complex denom = 1.0 - std::pow(Complex(2.0), 1.0 - s);
  if (std::abs(denom) < 1e-12) {
    throw std::domain_error(s == Complex(1.0) ? "zeta: pole at s = 1"
                                              : "zeta: 2^{1-s} = 1, eta route undefined");
  }
  // Terms needed grow with |t| because the error bound carries e^{pi |t| / 2}.
  const int n = std::min(160, 40 + static_cast<int>(std::ceil(1.2 * std::abs(s.imag()))));
  std::vector<double> d(n + 1);
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= static_cast<double>(n + i - 1) * (n - i + 1) * 4.0 / ((2.0 * i - 1) * (2.0 * i));
    acc += term;
    d[i] = n * acc;
  }
  Complex sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const Complex power = std::exp(-s * std::log(static_cast<double>(k + 1)));
    const double w = (d[k] - d[n]) / d[n];
    sum += (k % 2 == 0 ? w : -w) * power;
  }
  return -sum / denom;
}

Complex zeta_restricted(std::uint64_t level, Complex s) {
  if (level == 0) throw std::invalid_argument("zeta_restricted: level must be >= 1");
  Complex value = zeta(s);
  std::uint64_t rest = level;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    value *= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) value *= 1.0 - std::exp(-s * std::log(static_cast<double>(rest)));
  return value;
}

}  // namespace cusp
