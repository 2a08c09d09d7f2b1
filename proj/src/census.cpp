#include "cusp/census.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cusp/asymptotics.hpp"

namespace cusp {
namespace {

class Tally {
 public:
  void add(std::uint64_t n, int product) {
    if (product > 0) {
      ++same_;
      if (!first_same_) first_same_ = n;
    } else if (product < 0) {
      ++opposite_;
      if (!first_opposite_) first_opposite_ = n;
    } else {
      ++zero_;
    }
  }

  CensusSample sample(std::uint64_t checkpoint) const {
    return {checkpoint, same_, opposite_, zero_, first_same_, first_opposite_};
  }

  void fill(CensusReport& r) const {
    r.same_sign = same_;
    r.opposite_sign = opposite_;
    r.zero = zero_;
    r.first_same = first_same_;
    r.first_opposite = first_opposite_;
  }

 private:
  std::uint64_t same_ = 0, opposite_ = 0, zero_ = 0;
  std::optional<std::uint64_t> first_same_, first_opposite_;
};

void require_cover(std::size_t size, std::uint64_t limit, const char* what) {
  if (size == 0 || size - 1 < limit) {
    throw std::out_of_range(std::string(what) + ": sign array does not cover 1.." +
                            std::to_string(limit));
  }
}

template <typename Product>
CensusReport run(std::string filter, std::uint64_t limit, std::uint64_t start, std::uint64_t step,
                 bool cumulative, Product&& product) {
  CensusReport report;
  report.limit = limit;
  report.filter = std::move(filter);
  Tally tally;
  const auto checkpoints = cumulative ? power_of_two_checkpoints(limit)
                                      : std::vector<std::uint64_t>{};
  std::size_t next = 0;
  auto flush_until = [&](std::uint64_t n) {
    while (next < checkpoints.size() && checkpoints[next] < n) {
      report.cumulative.push_back(tally.sample(checkpoints[next]));
      ++next;
    }
  };
  for (std::uint64_t n = start; n <= limit; n += step) {
    flush_until(n);
    tally.add(n, product(n));
  }
  flush_until(limit + 1);
  tally.fill(report);
  return report;
}

}  // namespace

std::vector<std::uint64_t> power_of_two_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1; c < limit; c *= 2) out.push_back(c);
  if (limit >= 1) out.push_back(limit);
  return out;
}

CensusReport progression_census(std::span<const std::int8_t> f, std::span<const std::int8_t> g,
                                std::uint64_t m, std::int64_t l, std::uint64_t limit,
                                bool cumulative) {
  if (m == 0) throw std::invalid_argument("progression_census: modulus must be >= 1");
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = l % mm;
  if (r < 0) r += mm;
  if (std::gcd(static_cast<std::uint64_t>(r), m) != 1) {
    throw std::invalid_argument("progression_census: gcd(" + std::to_string(l) + ", " +
                                std::to_string(m) + ") != 1");
  }
  require_cover(f.size(), limit, "progression_census");
  require_cover(g.size(), limit, "progression_census");
  const std::uint64_t start = r == 0 ? m : static_cast<std::uint64_t>(r);
  return run("progression m=" + std::to_string(m) + " l=" + std::to_string(l), limit, start, m,
             cumulative, [&](std::uint64_t n) { return f[n] * g[n]; });
}

CensusReport sparse_census(const PowerSequence& f, const PowerSequence& g, std::uint64_t limit,
                           bool cumulative) {
  if (f.power != g.power) throw std::invalid_argument("sparse_census: powers differ");
  require_cover(f.sign.size(), limit, "sparse_census");
  require_cover(g.sign.size(), limit, "sparse_census");
  return run("power j=" + std::to_string(f.power), limit, 1, 1, cumulative,
             [&](std::uint64_t n) { return f.sign[n] * g.sign[n]; });
}

CensusReport sparse_census(const IntSeries& f_series, int f_weight, const IntSeries& g_series,
                           int g_weight, const FactorSieve& sieve, unsigned j, std::uint64_t limit,
                           bool cumulative, bool allow_linear) {
  const bool ok = (j >= 2 && j <= 4) || (j == 1 && allow_linear);
  if (!ok) {
    throw std::invalid_argument("sparse_census: power j=" + std::to_string(j) +
                                " outside {2,3,4}");
  }
  if (limit > sieve.limit()) throw std::out_of_range("sparse_census: limit exceeds sieve");
  const auto f = power_sequence(f_series, f_weight, sieve, j, limit);
  const auto g = power_sequence(g_series, g_weight, sieve, j, limit);
  return sparse_census(f, g, limit, cumulative);
}

std::vector<WindowReport> window_scan(const PowerSequence& f, const PowerSequence& g,
                                      std::span<const double> x_grid, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("window_scan: epsilon must be positive");
  if (f.power != g.power) throw std::invalid_argument("window_scan: powers differ");
  const unsigned j = f.power;
  const ExponentTable table = exponent_table();
  const double beta = table.beta(j).value();
  const std::uint64_t available = std::min(f.limit(), g.limit());

  std::vector<WindowReport> out;
  for (double x : x_grid) {
    if (!(x >= 1)) throw std::invalid_argument("window_scan: x must be >= 1");
    WindowReport w;
    w.x = x;
    w.h = std::pow(x, 1.0 - beta + 2.0 * epsilon);
    w.first = static_cast<std::uint64_t>(std::floor(x)) + 1;
    w.last = static_cast<std::uint64_t>(std::floor(x + w.h));
    w.degenerate = w.h < 1.0;
    if (w.last > available) {
      throw std::out_of_range("window_scan: window (" + std::to_string(x) + ", " +
                              std::to_string(x + w.h) + "] exceeds coefficient range " +
                              std::to_string(available));
    }
    NeumaierSum prod, gs;
    for (std::uint64_t n = w.first; n <= w.last; ++n) {
      const int s = f.sign[n] * g.sign[n];
      if (s > 0) {
        ++w.same_sign;
      } else if (s < 0) {
        ++w.opposite_sign;
      } else {
        ++w.zero;
      }
      prod.add(f.lambda[n] * g.lambda[n]);
      gs.add(g.lambda[n]);
    }
    w.product_sum = prod.value();
    w.g_sum = gs.value();
    out.push_back(w);
  }
  return out;
}

}  // namespace cusp
