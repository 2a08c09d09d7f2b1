#include "cusp/characters.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cusp/errors.hpp"

namespace cusp {

CharValue::CharValue(std::int64_t t, std::uint32_t denominator) : zero_(false) {
  if (denominator == 0) throw std::invalid_argument("CharValue: zero denominator");
  const std::int64_t d = denominator;
  t %= d;
  if (t < 0) t += d;
  const std::int64_t g = std::gcd(t, d);
  t_ = static_cast<std::uint32_t>(t / g);
  d_ = static_cast<std::uint32_t>(d / g);
}

CharValue CharValue::conj() const {
  if (zero_) return *this;
  return CharValue(-static_cast<std::int64_t>(t_), d_);
}

std::complex<double> CharValue::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * t_ / d_);
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  if (a.zero_ || b.zero_) return CharValue::zero();
  const std::uint64_t l = std::lcm<std::uint64_t>(a.d_, b.d_);
  const std::int64_t t = static_cast<std::int64_t>(a.t_ * (l / a.d_) + b.t_ * (l / b.d_));
  return CharValue(t, static_cast<std::uint32_t>(l));
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  // x^D - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (std::uint32_t d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t q = num[i];  // den is monic
      quot[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (num[i] != 0) throw IntegrityError("cyclotomic_polynomial: inexact division");
    }
    num = std::move(quot);
  }
  cache.emplace(order, num);
  return num;
}

CyclotomicInteger::CyclotomicInteger(std::uint32_t order) : order_(order), coeffs_(order) {
  if (order == 0) throw std::invalid_argument("CyclotomicInteger: order must be >= 1");
}

void CyclotomicInteger::add_root(std::uint32_t t, const BigInt& coeff) {
  coeffs_[t % order_] += coeff;
}

void CyclotomicInteger::add_root(const CharValue& v, const BigInt& coeff) {
  if (v.is_zero()) return;
  if (order_ % v.denominator() != 0) {
    throw std::invalid_argument("CyclotomicInteger: root order does not divide field order");
  }
  add_root(v.numerator() * (order_ / v.denominator()), coeff);
}

std::vector<BigInt> CyclotomicInteger::canonical() const {
  const auto phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  std::vector<BigInt> r = coeffs_;
  for (std::size_t i = r.size(); i-- > deg;) {
    if (sgn(r[i]) == 0) continue;
    const BigInt q = r[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) r[i - deg + j] -= q * phi[j];
    }
  }
  r.resize(deg);
  return r;
}

bool CyclotomicInteger::as_integer(BigInt* value) const {
  const auto c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) return false;
  }
  if (value) *value = c.empty() ? BigInt(0) : c[0];
  return true;
}

namespace {

std::uint64_t pow_mod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t multiplicative_order(std::uint32_t g, std::uint32_t m) {
  std::uint64_t x = g % m;
  std::uint32_t k = 1;
  while (x != 1) {
    x = x * g % m;
    ++k;
  }
  return k;
}

// Lift a unit mod q to the residue mod m that is g mod q and 1 mod m/q.
std::uint32_t crt_lift(std::uint32_t g, std::uint32_t q, std::uint32_t m) {
  const std::uint32_t rest = m / q;
  for (std::uint64_t x = g % q; x < m; x += q) {
    if (x % rest == 1 % rest) return static_cast<std::uint32_t>(x);
  }
  throw std::logic_error("crt_lift: no solution");
}

}  // namespace

CharacterTable::CharacterTable(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("CharacterTable: modulus must be >= 1");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers;  // (p, p^a)
  std::uint32_t rest = modulus;
  for (std::uint32_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    std::uint32_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    prime_powers.emplace_back(p, q);
  }
  if (rest > 1) prime_powers.emplace_back(rest, rest);

  for (const auto& [p, q] : prime_powers) {
    std::vector<CyclicFactor> local;
    if (p == 2) {
      if (q == 4) local.push_back({3, 2});
      if (q >= 8) {
        local.push_back({q - 1, 2});
        local.push_back({5, q / 4});
      }
    } else {
      const std::uint32_t phi = q / p * (p - 1);
      std::vector<std::uint32_t> phi_primes;
      for (std::uint32_t x = phi, d = 2; x > 1; ++d) {
        if (x % d == 0) {
          phi_primes.push_back(d);
          while (x % d == 0) x /= d;
        }
      }
      std::uint32_t g = 2;
      for (;; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (std::uint32_t r : phi_primes) {
          if (pow_mod_u64(g, phi / r, q) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) break;
      }
      local.push_back({g, phi});
    }
    for (const auto& f : local) {
      const std::uint32_t lifted = crt_lift(f.generator, q, modulus);
      factors_.push_back({lifted, f.order});
    }
  }

  for (const auto& f : factors_) {
    if (multiplicative_order(f.generator, modulus) != f.order) {
      throw IntegrityError("CharacterTable: generator order mismatch mod " +
                           std::to_string(modulus));
    }
    order_ *= f.order;
    exponent_ = std::lcm(exponent_, f.order);
  }

  log_table_.assign(modulus, {});
  std::vector<bool> seen(modulus, false);
  for (std::uint32_t r = 0; r < order_; ++r) {
    const auto e = character_exponents(r);
    std::uint64_t x = 1 % modulus;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      x = x * pow_mod_u64(factors_[i].generator, e[i], modulus) % modulus;
    }
    if (seen[x]) throw IntegrityError("CharacterTable: decomposition is not injective");
    seen[x] = true;
    log_table_[x] = e;
  }
  for (std::uint32_t x = 0; x < modulus; ++x) {
    if (seen[x] != (std::gcd(x, modulus) == 1)) {
      throw IntegrityError("CharacterTable: decomposition does not cover the units");
    }
  }
}

std::uint32_t CharacterTable::reduce(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  return static_cast<std::uint32_t>(r);
}

bool CharacterTable::is_unit(std::int64_t n) const {
  return std::gcd(reduce(n), modulus_) == 1;
}

const std::vector<std::uint32_t>& CharacterTable::log(std::int64_t n) const {
  return log_table_[reduce(n)];
}

std::vector<std::uint32_t> CharacterTable::character_exponents(std::uint32_t r) const {
  if (r >= order_) {
    throw std::out_of_range("character index " + std::to_string(r) + " >= phi(m) = " +
                            std::to_string(order_));
  }
  std::vector<std::uint32_t> e(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e[i] = r % factors_[i].order;
    r /= factors_[i].order;
  }
  return e;
}

CharValue CharacterTable::value(std::uint32_t r, std::int64_t n) const {
  const auto chi = character_exponents(r);
  if (!is_unit(n)) return CharValue::zero();
  const auto& lg = log(n);
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    t += static_cast<std::uint64_t>(chi[i]) * lg[i] % factors_[i].order *
         (exponent_ / factors_[i].order);
  }
  return CharValue(static_cast<std::int64_t>(t % exponent_), exponent_);
}

CharacterTable build_table(std::uint32_t m) { return CharacterTable(m); }

CharValue char_eval(const CharacterTable& table, std::uint32_t r, std::int64_t n) {
  return table.value(r, n);
}

Rational orthogonality_check(const CharacterTable& table, std::int64_t l, std::int64_t n) {
  if (!table.is_unit(l)) {
    throw std::invalid_argument("orthogonality_check: gcd(l, m) != 1");
  }
  CyclotomicInteger acc(table.exponent());
  const BigInt one = 1;
  for (std::uint32_t r = 0; r < table.order(); ++r) {
    acc.add_root(table.value(r, n) * table.value(r, l).conj(), one);
  }
  BigInt total;
  if (!acc.as_integer(&total)) {
    throw IntegrityError("orthogonality_check: character sum is not rational");
  }
  Rational q{total, BigInt(table.order())};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.num.get_mpz_t(), q.den.get_mpz_t());
  q.num /= g;
  q.den /= g;
  return q;
}

std::complex<double> TwistedCoeff::to_complex() const { return chi.to_complex() * a.get_d(); }

std::vector<TwistedCoeff> twist_coeffs(const IntSeries& series, const CharacterTable& table,
                                       std::uint32_t r) {
  table.character_exponents(r);  // range check
  std::vector<TwistedCoeff> out;
  out.reserve(series.truncation() + 1);
  for (std::size_t n = 0; n <= series.truncation(); ++n) {
    const CharValue chi = table.value(r, static_cast<std::int64_t>(n));
    out.push_back({chi, chi.is_zero() ? BigInt(0) : series[n]});
  }
  return out;
}

ReconstructionReport progression_reconstruction(const IntSeries& series,
                                                const CharacterTable& table, std::int64_t l) {
  if (!table.is_unit(l)) {
    throw std::invalid_argument("progression_reconstruction: gcd(l, m) != 1");
  }
  const std::uint32_t phi = table.order();
  std::vector<std::vector<TwistedCoeff>> twists;
  std::vector<CharValue> weights;  // phi(m) * alpha_r = conj(psi_r(l))
  for (std::uint32_t r = 0; r < phi; ++r) {
    twists.push_back(twist_coeffs(series, table, r));
    weights.push_back(table.value(r, l).conj());
  }
  ReconstructionReport report;
  const std::int64_t m = table.modulus();
  const std::int64_t l_mod = ((l % m) + m) % m;
  for (std::size_t n = 1; n <= series.truncation(); ++n) {
    CyclotomicInteger acc(table.exponent());
    for (std::uint32_t r = 0; r < phi; ++r) {
      const TwistedCoeff& tw = twists[r][n];
      acc.add_root(weights[r] * tw.chi, tw.a);
    }
    const bool in_class = static_cast<std::int64_t>(n) % m == l_mod;
    const BigInt expected = in_class ? BigInt(series[n] * phi) : BigInt(0);
    BigInt got;
    ++report.checked;
    if (!acc.as_integer(&got) || got != expected) report.mismatches.push_back(n);
  }
  return report;
}

}  // namespace cusp
