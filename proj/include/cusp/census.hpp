#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cusp/hecke.hpp"

namespace cusp {

/// Prefix counts at one checkpoint.
struct CensusSample {
  std::uint64_t checkpoint = 0;
  std::uint64_t same = 0;
  std::uint64_t opposite = 0;
  std::uint64_t zero = 0;
  std::optional<std::uint64_t> first_same;
  std::optional<std::uint64_t> first_opposite;
};

/// Simultaneous-sign statistics over the qualifying n <= limit.
struct CensusReport {
  std::uint64_t limit = 0;
  std::string filter;
  std::uint64_t same_sign = 0;
  std::uint64_t opposite_sign = 0;
  std::uint64_t zero = 0;
  std::optional<std::uint64_t> first_same;
  std::optional<std::uint64_t> first_opposite;
  std::vector<CensusSample> cumulative;

  std::uint64_t total() const { return same_sign + opposite_sign + zero; }
  bool both_signs() const { return same_sign > 0 && opposite_sign > 0; }
};

/// Checkpoints 1, 2, 4, ... below limit, then limit itself.
std::vector<std::uint64_t> power_of_two_checkpoints(std::uint64_t limit);

/// Classifies sign(a(n)) sign(b(n)) over n = l, l + m, ... <= X.
/// Sign arrays are indexed by n and must cover 1..X.
/// Throws std::invalid_argument unless gcd(l, m) = 1.
CensusReport progression_census(std::span<const std::int8_t> f, std::span<const std::int8_t> g,
                                std::uint64_t m, std::int64_t l, std::uint64_t limit,
                                bool cumulative = false);

/// Classifies sign(a(n^j)) sign(b(n^j)) for n <= X from exact coefficients.
/// j must lie in {2,3,4}; j = 1 is accepted only with allow_linear.
CensusReport sparse_census(const IntSeries& f_series, int f_weight, const IntSeries& g_series,
                           int g_weight, const FactorSieve& sieve, unsigned j, std::uint64_t limit,
                           bool cumulative = false, bool allow_linear = false);

/// Same classification over precomputed power sequences.
CensusReport sparse_census(const PowerSequence& f, const PowerSequence& g, std::uint64_t limit,
                           bool cumulative = false);

struct WindowReport {
  double x = 0;
  double h = 0;                  // x^{1 - beta_j + 2 eps}
  std::uint64_t first = 0;       // window is the integers first..last
  std::uint64_t last = 0;
  bool degenerate = false;       // h < 1
  std::uint64_t same_sign = 0;
  std::uint64_t opposite_sign = 0;
  std::uint64_t zero = 0;
  double product_sum = 0;        // sum lambda_f(n^j) lambda_g(n^j)
  double g_sum = 0;              // sum lambda_g(n^j)
  bool both_signs() const { return same_sign > 0 && opposite_sign > 0; }
};

inline constexpr double kDefaultEpsilon = 0.05;

/// Censuses (x, x + h] with h = x^{1 - beta_j + 2 eps} for each x in the grid.
/// Throws std::invalid_argument for eps <= 0 or j outside {2,3,4}, and
/// std::out_of_range when a window runs past the sequences.
std::vector<WindowReport> window_scan(const PowerSequence& f, const PowerSequence& g,
                                      std::span<const double> x_grid,
                                      double epsilon = kDefaultEpsilon);

}  // namespace cusp
