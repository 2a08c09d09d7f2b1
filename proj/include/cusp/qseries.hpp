#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace cusp {

using BigInt = mpz_class;

/// Exact integer q-expansion sum_{n=0}^{X} c(n) q^n, truncated at X.
///
/// Immutable once built; safe to share read-only between threads.
class IntSeries {
 public:
  IntSeries() = default;
  /// Zero series with truncation X.
  explicit IntSeries(std::size_t truncation);
  /// Takes ownership of coefficients 0..X. Throws on an empty vector.
  explicit IntSeries(std::vector<BigInt> coeffs);

  static IntSeries identity(std::size_t truncation);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  const BigInt& at(std::size_t n) const { return coeffs_.at(n); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  std::size_t nonzero_count() const;

  /// Same coefficients cut down to a smaller truncation.
  IntSeries truncated(std::size_t truncation) const;
  /// Multiplies by q^k, dropping terms past the truncation.
  IntSeries shifted(std::size_t k) const;

  friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<BigInt> coeffs_{BigInt(0)};
};

/// Exact Cauchy product truncated at the common truncation.
/// Throws std::invalid_argument when truncations differ.
IntSeries series_mul(const IntSeries& a, const IntSeries& b);

/// a^e by repeated squaring. e = 0 yields the identity series only when
/// allow_zero_exponent is set; otherwise std::invalid_argument.
IntSeries series_pow(const IntSeries& a, unsigned e, bool allow_zero_exponent = false);

/// prod_{n>=1} (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
IntSeries pentagonal_series(std::size_t truncation);

/// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, the cube of the pentagonal series.
IntSeries jacobi_series(std::size_t truncation);

/// Delta = q prod (1 - q^n)^24 via the pentagonal series to the 24th power,
/// cross-checked against the 8th power of the Jacobi series. Coefficient n is tau(n).
/// Throws IntegrityError if the two routes disagree anywhere.
IntSeries delta_series(std::size_t truncation);

/// Both Delta routes, unchecked (pentagonal first, Jacobi second).
std::array<IntSeries, 2> delta_routes(std::size_t truncation);

/// E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n.
IntSeries eisenstein_series(int weight, std::size_t truncation);

/// Handle for the normalized cusp eigenform of a weight with dim S_k = 1.
class EigenformId {
 public:
  static constexpr std::array<int, 6> kCatalog{12, 16, 18, 20, 22, 26};

  /// Throws std::invalid_argument for weights outside the catalog.
  explicit EigenformId(int weight);
  int weight() const { return weight_; }
  static bool in_catalog(int weight);

  friend bool operator==(EigenformId, EigenformId) = default;

 private:
  int weight_;
};

/// Weight 12: Delta; 16: Delta E4; 18: Delta E6; 20: Delta E4^2; 22: Delta E4 E6;
/// 26: Delta E4^2 E6.
IntSeries eigenform_series(EigenformId id, std::size_t truncation);

/// Builds catalog eigenforms at one truncation, sharing Delta, E4 and E6.
class EigenformFactory {
 public:
  explicit EigenformFactory(std::size_t truncation);

  std::size_t truncation() const { return truncation_; }
  const IntSeries& delta();
  IntSeries eigenform(EigenformId id);

 private:
  const IntSeries& e4();
  const IntSeries& e6();

  std::size_t truncation_;
  IntSeries delta_, e4_, e6_;
  bool have_delta_ = false, have_e4_ = false, have_e6_ = false;
};

}  // namespace cusp
