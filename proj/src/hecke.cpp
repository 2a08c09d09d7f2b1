#include "cusp/hecke.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cusp {

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (limit > 0xFFFFFFFFull) throw std::invalid_argument("build_sieve: limit exceeds 2^32");
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || m > limit) break;
      spf_[m] = p;
    }
  }
}

std::vector<std::pair<std::uint32_t, unsigned>> FactorSieve::factorize(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw std::out_of_range("FactorSieve: n=" + std::to_string(n) + " outside 1.." +
                            std::to_string(limit_));
  }
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::uint64_t FactorSieve::divisor_count(std::uint64_t n) const {
  std::uint64_t d = 1;
  for (const auto& [p, e] : factorize(n)) d *= e + 1;
  return d;
}

FactorSieve build_sieve(std::uint64_t limit) { return FactorSieve(limit); }

BigInt coeff_prime_power(const BigInt& a_p, std::uint32_t p, unsigned r, int weight) {
  if (r == 0) return 1;
  BigInt p_pow;
  mpz_ui_pow_ui(p_pow.get_mpz_t(), p, static_cast<unsigned long>(weight - 1));
  BigInt prev = 1, cur = a_p;
  for (unsigned i = 1; i < r; ++i) {
    BigInt next = a_p * cur - p_pow * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt coeff_at_power(std::uint64_t n, unsigned j, const IntSeries& series,
                      const FactorSieve& sieve, int weight) {
  if (n > sieve.limit()) {
    throw std::out_of_range("coeff_at_power: n=" + std::to_string(n) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));
  }
  BigInt result = 1;
  if (n <= 1) return result;
  for (const auto& [p, e] : sieve.factorize(n)) {
    if (p > series.truncation()) {
      throw std::out_of_range("coeff_at_power: a(" + std::to_string(p) +
                              ") lies beyond the series truncation");
    }
    result *= coeff_prime_power(series[p], p, j * e, weight);
  }
  return result;
}

namespace {

// a / base^{exponent * (k-1)/2}, robust to a or the denominator leaving double range.
double normalized_prime_power(const BigInt& a, std::uint64_t base, unsigned exponent, int weight) {
  if (sgn(a) == 0) return 0.0;
  const double half_weight = 0.5 * (weight - 1) * exponent;
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  const double log_den = half_weight * std::log(static_cast<double>(base));
  if (bits < 1000 && log_den < 650.0) {
    const double den = std::pow(static_cast<double>(base), 0.5 * (weight - 2) * exponent) *
                       std::pow(std::sqrt(static_cast<double>(base)), exponent);
    return a.get_d() / den;
  }
  long e2 = 0;
  const double mant = mpz_get_d_2exp(&e2, a.get_mpz_t());
  return mant * std::exp(static_cast<double>(e2) * std::log(2.0) - log_den);
}

std::int8_t sign_of(const BigInt& a) { return static_cast<std::int8_t>(sgn(a)); }

void check_power(unsigned j) {
  if (j < 1 || j > 4) throw std::invalid_argument("power_sequence: j must lie in 1..4");
}

}  // namespace

double normalized_value(const BigInt& a, std::uint64_t n, int weight) {
  return normalized_prime_power(a, n, 1, weight);
}

NormalizedCoeffs::NormalizedCoeffs(int weight, std::vector<double> lambda,
                                   std::vector<std::int8_t> sign)
    : weight_(weight), lambda_(std::move(lambda)), sign_(std::move(sign)) {
  if (lambda_.size() != sign_.size()) {
    throw std::invalid_argument("NormalizedCoeffs: lambda and sign lengths differ");
  }
}

NormalizedCoeffs normalize(const IntSeries& series, int weight) {
  const std::size_t X = series.truncation();
  std::vector<double> lambda(X + 1, 0.0);
  std::vector<std::int8_t> sign(X + 1, 0);
  for (std::size_t n = 1; n <= X; ++n) {
    sign[n] = sign_of(series[n]);
    lambda[n] = normalized_value(series[n], n, weight);
  }
  return NormalizedCoeffs(weight, std::move(lambda), std::move(sign));
}

std::vector<DeligneViolation> deligne_check(const NormalizedCoeffs& nc, const FactorSieve& sieve) {
  if (nc.limit() > sieve.limit()) {
    throw std::invalid_argument("deligne_check: sieve does not cover the coefficient range");
  }
  // Slack for the rounding in lambda; true values never come this close to the bound.
  constexpr double kSlack = 1e-12;
  std::vector<DeligneViolation> out;
  for (std::uint64_t n = 1; n <= nc.limit(); ++n) {
    const double bound =
        sieve.is_prime(n) ? 2.0 : static_cast<double>(sieve.divisor_count(n));
    const double v = nc.lambda(n);
    if (!(std::abs(v) <= bound * (1.0 + kSlack))) out.push_back({n, v, bound});
  }
  return out;
}

std::vector<std::uint32_t> deligne_check_exact(const IntSeries& series, int weight,
                                               const FactorSieve& sieve, std::uint64_t limit) {
  if (limit > series.truncation() || limit > sieve.limit()) {
    throw std::invalid_argument("deligne_check_exact: limit beyond series or sieve");
  }
  std::vector<std::uint32_t> bad;
  BigInt lhs, rhs;
  for (std::uint32_t p : sieve.primes()) {
    if (p > limit) break;
    lhs = series[p] * series[p];
    mpz_ui_pow_ui(rhs.get_mpz_t(), p, static_cast<unsigned long>(weight - 1));
    rhs *= 4;
    if (lhs > rhs) bad.push_back(p);
  }
  return bad;
}

namespace {

// Per-prime tables of a(p^{j r}) for r = 0..v_max(p), flattened.
struct PrimePowerTable {
  std::vector<std::size_t> offset;  // indexed by prime position
  std::vector<std::int8_t> sign;
  std::vector<double> lambda;
};

template <typename Fill>
PowerSequence assemble(const FactorSieve& sieve, unsigned j, std::uint64_t limit, int weight,
                       Fill&& fill) {
  if (limit > sieve.limit()) {
    throw std::out_of_range("power_sequence: limit exceeds sieve limit");
  }
  const auto& primes = sieve.primes();
  std::vector<std::size_t> index_of(limit + 1, 0);
  PrimePowerTable table;
  for (std::size_t i = 0; i < primes.size() && primes[i] <= limit; ++i) {
    const std::uint32_t p = primes[i];
    index_of[p] = i;
    unsigned vmax = 0;
    for (std::uint64_t q = p; q <= limit; q *= p) ++vmax;
    table.offset.push_back(table.sign.size());
    fill(p, vmax, table);
  }

  PowerSequence seq;
  seq.power = j;
  seq.weight = weight;
  seq.sign.assign(limit + 1, 0);
  seq.lambda.assign(limit + 1, 0.0);
  if (limit >= 1) {
    seq.sign[1] = 1;
    seq.lambda[1] = 1.0;
  }
  for (std::uint64_t n = 2; n <= limit; ++n) {
    std::int8_t s = 1;
    double l = 1.0;
    std::uint64_t m = n;
    while (m > 1) {
      const std::uint32_t p = sieve.spf(m);
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      const std::size_t at = table.offset[index_of[p]] + e;
      s = static_cast<std::int8_t>(s * table.sign[at]);
      l *= table.lambda[at];
    }
    seq.sign[n] = s;
    seq.lambda[n] = l;
  }
  return seq;
}

}  // namespace

PowerSequence power_sequence(const IntSeries& series, int weight, const FactorSieve& sieve,
                             unsigned j, std::uint64_t limit) {
  check_power(j);
  if (limit > series.truncation()) {
    throw std::out_of_range("power_sequence: a(p) needed beyond the series truncation");
  }
  return assemble(sieve, j, limit, weight,
                  [&](std::uint32_t p, unsigned vmax, PrimePowerTable& t) {
                    BigInt p_pow;
                    mpz_ui_pow_ui(p_pow.get_mpz_t(), p, static_cast<unsigned long>(weight - 1));
                    const BigInt& ap = series[p];
                    BigInt prev = 1, cur = ap;
                    t.sign.push_back(1);
                    t.lambda.push_back(1.0);
                    // Walk r = 1..j*vmax, keeping every j-th term.
                    for (unsigned r = 1; r <= j * vmax; ++r) {
                      if (r > 1) {
                        BigInt next = ap * cur - p_pow * prev;
                        prev = std::move(cur);
                        cur = std::move(next);
                      }
                      if (r % j == 0) {
                        t.sign.push_back(sign_of(cur));
                        t.lambda.push_back(normalized_prime_power(cur, p, r, weight));
                      }
                    }
                  });
}

PowerSequence power_sequence(const NormalizedCoeffs& nc, const FactorSieve& sieve, unsigned j,
                             std::uint64_t limit) {
  check_power(j);
  if (limit > nc.limit()) {
    throw std::out_of_range("power_sequence: lambda(p) needed beyond the coefficient range");
  }
  return assemble(sieve, j, limit, nc.weight(),
                  [&](std::uint32_t p, unsigned vmax, PrimePowerTable& t) {
                    const double lp = nc.lambda(p);
                    double prev = 1.0, cur = lp;
                    t.sign.push_back(1);
                    t.lambda.push_back(1.0);
                    for (unsigned r = 1; r <= j * vmax; ++r) {
                      if (r > 1) {
                        const double next = lp * cur - prev;
                        prev = cur;
                        cur = next;
                      }
                      if (r % j == 0) {
                        t.sign.push_back(static_cast<std::int8_t>((cur > 0) - (cur < 0)));
                        t.lambda.push_back(cur);
                      }
                    }
                  });
}

}  // namespace cusp
