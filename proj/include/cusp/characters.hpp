#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cusp/qseries.hpp"

namespace cusp {

/// exp(2 pi i t / D) held exactly, or the zero value taken off the units.
class CharValue {
 public:
  static CharValue zero() { return CharValue(); }
  static CharValue one() { return CharValue(0, 1); }
  /// Reduces t/D to lowest terms with 0 <= t < D.
  CharValue(std::int64_t t, std::uint32_t denominator);

  bool is_zero() const { return zero_; }
  std::uint32_t numerator() const { return t_; }
  std::uint32_t denominator() const { return d_; }

  CharValue conj() const;
  std::complex<double> to_complex() const;

  friend CharValue operator*(const CharValue& a, const CharValue& b);
  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  CharValue() = default;
  bool zero_ = true;
  std::uint32_t t_ = 0;
  std::uint32_t d_ = 1;
};

/// Reduced fraction with positive denominator.
struct Rational {
  BigInt num;
  BigInt den{1};
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Element of Z[zeta_D] as sum_t c_t zeta_D^t. Equality is decided after reduction
/// modulo the D-th cyclotomic polynomial, so it is exact.
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  void add_root(std::uint32_t t, const BigInt& coeff);
  void add_root(const CharValue& v, const BigInt& coeff);

  /// Coefficients in the basis 1, zeta, ..., zeta^{phi(D)-1}.
  std::vector<BigInt> canonical() const;
  /// True when the element is a rational integer; stores it in *value.
  bool as_integer(BigInt* value) const;

 private:
  std::uint32_t order_;
  std::vector<BigInt> coeffs_;
};

/// Integer coefficients of the D-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order);

/// The group of Dirichlet characters mod m, via a cyclic decomposition of (Z/mZ)^*.
class CharacterTable {
 public:
  struct CyclicFactor {
    std::uint32_t generator;  // residue mod m
    std::uint32_t order;
  };

  explicit CharacterTable(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return order_; }
  /// Exponent of the unit group (lcm of factor orders).
  std::uint32_t exponent() const { return exponent_; }
  const std::vector<CyclicFactor>& factors() const { return factors_; }

  bool is_unit(std::int64_t n) const;
  /// Discrete-log vector of a unit with respect to factors(). Empty for non-units.
  const std::vector<std::uint32_t>& log(std::int64_t n) const;
  /// Exponent tuple of character r (mixed radix over factor orders).
  std::vector<std::uint32_t> character_exponents(std::uint32_t r) const;

  CharValue value(std::uint32_t r, std::int64_t n) const;

 private:
  std::uint32_t reduce(std::int64_t n) const;

  std::uint32_t modulus_;
  std::uint32_t order_ = 1;
  std::uint32_t exponent_ = 1;
  std::vector<CyclicFactor> factors_;
  std::vector<std::vector<std::uint32_t>> log_table_;
};

CharacterTable build_table(std::uint32_t m);

/// psi_r(n). Throws std::out_of_range for r >= phi(m).
CharValue char_eval(const CharacterTable& table, std::uint32_t r, std::int64_t n);

/// (1/phi(m)) sum_r psi_r(n) conj(psi_r(l)), summed exactly: 1 if n = l mod m, else 0.
/// Throws std::invalid_argument if gcd(l, m) != 1 and IntegrityError if the sum fails
/// to be rational.
Rational orthogonality_check(const CharacterTable& table, std::int64_t l, std::int64_t n);

/// psi(n) a(n), kept exact as (root of unity, integer).
struct TwistedCoeff {
  CharValue chi;
  BigInt a;
  std::complex<double> to_complex() const;
};

/// Termwise twist of a coefficient sequence by character r, indices 0..X.
std::vector<TwistedCoeff> twist_coeffs(const IntSeries& series, const CharacterTable& table,
                                       std::uint32_t r);

struct ReconstructionReport {
  std::size_t checked = 0;
  std::vector<std::size_t> mismatches;
};

/// Checks sum_r (conj(psi_r(l)) / phi(m)) (psi_r twist)(n) == I_l(n) a(n) exactly for
/// n = 1..X, where I_l is the indicator of n = l mod m.
ReconstructionReport progression_reconstruction(const IntSeries& series,
                                                const CharacterTable& table, std::int64_t l);

}  // namespace cusp
