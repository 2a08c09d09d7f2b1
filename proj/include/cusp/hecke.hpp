#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cusp/qseries.hpp"

namespace cusp {

/// Smallest-prime-factor table for 2 <= n <= limit.
class FactorSieve {
 public:
  FactorSieve() = default;
  explicit FactorSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t spf(std::uint64_t n) const { return spf_.at(n); }
  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  /// (p, e) pairs in increasing p. Throws std::out_of_range past the limit.
  std::vector<std::pair<std::uint32_t, unsigned>> factorize(std::uint64_t n) const;
  std::uint64_t divisor_count(std::uint64_t n) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Linear sieve. Throws std::invalid_argument for limit < 2.
FactorSieve build_sieve(std::uint64_t limit);

/// a(p^r) from a(p) via a(p^{r+1}) = a(p) a(p^r) - p^{k-1} a(p^{r-1}).
BigInt coeff_prime_power(const BigInt& a_p, std::uint32_t p, unsigned r, int weight);

/// a(n^j) = prod_p a(p^{j v_p(n)}). Needs only a(p) for p | n from the series,
/// so n^j may lie far beyond its truncation.
BigInt coeff_at_power(std::uint64_t n, unsigned j, const IntSeries& series,
                      const FactorSieve& sieve, int weight);

/// Deligne-normalized coefficients lambda(n) = a(n) / n^{(k-1)/2}, n = 1..X, with
/// exact signs taken from the integers before rounding. Index 0 is unused.
class NormalizedCoeffs {
 public:
  NormalizedCoeffs() = default;
  NormalizedCoeffs(int weight, std::vector<double> lambda, std::vector<std::int8_t> sign);

  int weight() const { return weight_; }
  std::size_t limit() const { return lambda_.empty() ? 0 : lambda_.size() - 1; }
  double lambda(std::size_t n) const { return lambda_.at(n); }
  std::int8_t sign(std::size_t n) const { return sign_.at(n); }
  std::span<const double> lambdas() const { return lambda_; }
  std::span<const std::int8_t> signs() const { return sign_; }

  /// Fault injection for tests of deligne_check.
  void overwrite_lambda(std::size_t n, double value) { lambda_.at(n) = value; }

  friend bool operator==(const NormalizedCoeffs&, const NormalizedCoeffs&) = default;

 private:
  int weight_ = 0;
  std::vector<double> lambda_;
  std::vector<std::int8_t> sign_;
};

double normalized_value(const BigInt& a, std::uint64_t n, int weight);
NormalizedCoeffs normalize(const IntSeries& series, int weight);

struct DeligneViolation {
  std::uint64_t n;
  double value;
  double bound;
};

/// |lambda(p)| <= 2 at primes, |lambda(n)| <= d(n) everywhere. Empty on success.
std::vector<DeligneViolation> deligne_check(const NormalizedCoeffs& nc, const FactorSieve& sieve);

/// Exact Deligne check at primes: a(p)^2 <= 4 p^{k-1}. Returns offending primes.
std::vector<std::uint32_t> deligne_check_exact(const IntSeries& series, int weight,
                                               const FactorSieve& sieve, std::uint64_t limit);

/// The subsequence n -> a(n^j) for n = 1..X: exact signs plus normalized values.
/// Index 0 is unused.
struct PowerSequence {
  unsigned power = 1;
  int weight = 0;
  std::vector<std::int8_t> sign;
  std::vector<double> lambda;

  std::size_t limit() const { return sign.empty() ? 0 : sign.size() - 1; }
};

/// Builds a(n^j) for n <= X. Signs come from exact a(p^r) recurrences; lambda
/// values from the normalized recurrence lambda(p^{r+1}) = lambda(p) lambda(p^r) - lambda(p^{r-1}).
PowerSequence power_sequence(const IntSeries& series, int weight, const FactorSieve& sieve,
                             unsigned j, std::uint64_t limit);

/// Same, from normalized coefficients alone (lambda(p) for p <= X). Signs are read
/// off the floating values and are exact only away from zero.
PowerSequence power_sequence(const NormalizedCoeffs& nc, const FactorSieve& sieve, unsigned j,
                             std::uint64_t limit);

}  // namespace cusp
