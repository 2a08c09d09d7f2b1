#include "cusp/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "convolution.hpp"
#include "cusp/errors.hpp"

namespace cusp {

IntSeries::IntSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("IntSeries: need at least one coefficient");
}

IntSeries IntSeries::identity(std::size_t truncation) {
  IntSeries s(truncation);
  s.coeffs_[0] = 1;
  return s;
}

std::size_t IntSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; }));
}

IntSeries IntSeries::truncated(std::size_t truncation) const {
  if (truncation > this->truncation()) {
    throw std::invalid_argument("IntSeries::truncated: cannot extend a truncated series");
  }
  return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + truncation + 1));
}

IntSeries IntSeries::shifted(std::size_t k) const {
  IntSeries out(truncation());
  for (std::size_t n = k; n <= truncation(); ++n) out.coeffs_[n] = coeffs_[n - k];
  return out;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) {
  if (a.truncation() != b.truncation()) {
    throw std::invalid_argument("series_mul: truncations differ (" +
                                std::to_string(a.truncation()) + " vs " +
                                std::to_string(b.truncation()) + ")");
  }
  const auto ca = a.coeffs();
  // Same object: pass the same span so the kernel can square.
  const auto cb = &a == &b ? ca : b.coeffs();
  return IntSeries(detail::exact_convolution(ca, cb, a.truncation()));
}

IntSeries series_pow(const IntSeries& a, unsigned e, bool allow_zero_exponent) {
  if (e == 0) {
    if (!allow_zero_exponent) {
      throw std::invalid_argument("series_pow: zero exponent requires allow_zero_exponent");
    }
    return IntSeries::identity(a.truncation());
  }
  IntSeries base = a;
  IntSeries result;
  bool have_result = false;
  while (true) {
    if (e & 1u) {
      result = have_result ? series_mul(result, base) : base;
      have_result = true;
    }
    e >>= 1;
    if (e == 0) break;
    base = series_mul(base, base);
  }
  return result;
}

IntSeries pentagonal_series(std::size_t truncation) {
  std::vector<BigInt> c(truncation + 1);
  c[0] = 1;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;  // k
    const std::size_t g2 = k * (3 * k + 1) / 2;  // -k
    if (g1 > truncation) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[g1] = sign;
    if (g2 <= truncation) c[g2] = sign;
  }
  return IntSeries(std::move(c));
}

IntSeries jacobi_series(std::size_t truncation) {
  std::vector<BigInt> c(truncation + 1);
  for (std::size_t k = 0;; ++k) {
    const std::size_t t = k * (k + 1) / 2;
    if (t > truncation) break;
    const long v = static_cast<long>(2 * k + 1);
    c[t] = (k % 2 == 0) ? v : -v;
  }
  return IntSeries(std::move(c));
}

std::array<IntSeries, 2> delta_routes(std::size_t truncation) {
  if (truncation < 1) throw std::invalid_argument("delta_series: truncation must be >= 1");
  const std::size_t inner = truncation - 1;
  IntSeries via_pentagonal = series_pow(pentagonal_series(inner), 24);
  IntSeries via_jacobi = series_pow(jacobi_series(inner), 8);
  auto lift = [truncation](const IntSeries& s) {
    std::vector<BigInt> c(truncation + 1);
    for (std::size_t n = 1; n <= truncation; ++n) c[n] = s[n - 1];
    return IntSeries(std::move(c));
  };
  return {lift(via_pentagonal), lift(via_jacobi)};
}

IntSeries delta_series(std::size_t truncation) {
  auto routes = delta_routes(truncation);
  const auto a = routes[0].coeffs();
  const auto b = routes[1].coeffs();
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] != b[n]) {
      throw IntegrityError("delta_series: pentagonal and Jacobi routes disagree at n=" +
                           std::to_string(n));
    }
  }
  return std::move(routes[0]);
}

IntSeries eisenstein_series(int weight, std::size_t truncation) {
  if (weight != 4 && weight != 6) {
    throw std::invalid_argument("eisenstein_series: weight must be 4 or 6, got " +
                                std::to_string(weight));
  }
  const unsigned power = static_cast<unsigned>(weight - 1);
  // sigma_5(n) exceeds 64 bits near n = 2^13; 128 bits cover n < 2^25.
  if (truncation >= (std::size_t{1} << 25)) {
    throw std::invalid_argument("eisenstein_series: truncation too large");
  }
  using u128 = unsigned __int128;
  std::vector<u128> sigma(truncation + 1, 0);
  for (std::size_t d = 1; d <= truncation; ++d) {
    u128 dp = 1;
    for (unsigned i = 0; i < power; ++i) dp *= d;
    for (std::size_t n = d; n <= truncation; n += d) sigma[n] += dp;
  }
  const long scale = weight == 4 ? 240 : -504;
  std::vector<BigInt> c(truncation + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= truncation; ++n) {
    BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(sigma[n] >> 64));
    BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(sigma[n]));
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
    c[n] = (hi + lo) * scale;
  }
  return IntSeries(std::move(c));
}

bool EigenformId::in_catalog(int weight) {
  return std::find(kCatalog.begin(), kCatalog.end(), weight) != kCatalog.end();
}

EigenformId::EigenformId(int weight) : weight_(weight) {
  if (!in_catalog(weight)) {
    throw std::invalid_argument("weight " + std::to_string(weight) +
                                " is not in the eigenform catalog {12,16,18,20,22,26}");
  }
}

EigenformFactory::EigenformFactory(std::size_t truncation) : truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("EigenformFactory: truncation must be >= 1");
}

const IntSeries& EigenformFactory::delta() {
  if (!have_delta_) {
    delta_ = delta_series(truncation_);
    have_delta_ = true;
  }
  return delta_;
}

const IntSeries& EigenformFactory::e4() {
  if (!have_e4_) {
    e4_ = eisenstein_series(4, truncation_);
    have_e4_ = true;
  }
  return e4_;
}

const IntSeries& EigenformFactory::e6() {
  if (!have_e6_) {
    e6_ = eisenstein_series(6, truncation_);
    have_e6_ = true;
  }
  return e6_;
}

IntSeries EigenformFactory::eigenform(EigenformId id) {
  switch (id.weight()) {
    case 12:
      return delta();
    case 16:
      return series_mul(delta(), e4());
    case 18:
      return series_mul(delta(), e6());
    case 20:
      return series_mul(delta(), series_mul(e4(), e4()));
    case 22:
      return series_mul(delta(), series_mul(e4(), e6()));
    case 26:
      return series_mul(delta(), series_mul(series_mul(e4(), e4()), e6()));
  }
  throw std::logic_error("unreachable catalog weight");
}

IntSeries eigenform_series(EigenformId id, std::size_t truncation) {
  EigenformFactory factory(truncation);
  return factory.eigenform(id);
}

}  // namespace cusp
