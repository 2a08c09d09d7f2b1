#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cusp/hecke.hpp"

namespace cusp {

/// Compensated (Neumaier) summation.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Fraction {
  std::int64_t num;
  std::int64_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
};

/// Cancellation exponents for sum a(n^j) and remainder savings for sum a(n^j) b(n^j).
class ExponentTable {
 public:
  /// alpha_j: sum_{n<=x} lambda(n^j) << x^{alpha_j + eps}. j in {2,3,4}.
  Fraction alpha(unsigned j) const;
  /// beta_j: the product sum is C_j x + O(x^{1 - beta_j + eps}).
  Fraction beta(unsigned j) const;
  /// 1 - beta_j > alpha_j, compared exactly.
  bool ordering_holds(unsigned j) const;
};

ExponentTable exponent_table();

/// Throws std::logic_error if 1 - beta_j > alpha_j fails for some j in {2,3,4}.
void verify_exponent_ordering();

struct SumPoint {
  std::uint64_t x;
  double sum;
};

/// S(x) = sum_{n<=x} lambda(n^j) at each checkpoint (strictly increasing, within range).
std::vector<SumPoint> partial_sum_sparse(const PowerSequence& seq,
                                         std::span<const std::uint64_t> checkpoints);

/// S(x) = sum_{n<=x} lambda_f(n^j) lambda_g(n^j).
std::vector<SumPoint> partial_sum_product(const PowerSequence& f, const PowerSequence& g,
                                          std::span<const std::uint64_t> checkpoints);

/// count points geometrically spaced from first to last, rounded and deduplicated.
std::vector<std::uint64_t> log_spaced_checkpoints(double first, double last, std::size_t count);

struct FitResult {
  double slope = 0;            // main-term coefficient C_j
  double slope_stderr = 0;
  /// Log-log slope of |S(x) - slope x|; empty when the residuals vanish.
  std::optional<double> remainder_exponent;
  /// Same regression over running maxima of the residual.
  std::optional<double> envelope_exponent;
  /// Power term fitted jointly with the slope (S ~ slope x + coeff x^power).
  double joint_power = 0;
  double joint_coeff = 0;
  /// Plain least-squares slope of S against x through the origin.
  double origin_slope = 0;
  bool near_zero_slope = false;
  std::vector<std::uint64_t> sample_points;
};

/// Estimates S(x) = C x + O(x^theta). Needs >= 5 strictly increasing points spanning
/// >= 2 decades; std::invalid_argument otherwise.
FitResult fit_main_term(std::span<const SumPoint> points);

}  // namespace cusp
