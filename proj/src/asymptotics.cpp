#include "cusp/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cusp {
namespace {

void check_j(unsigned j) {
  if (j < 2 || j > 4) {
    throw std::invalid_argument("exponent table covers j in {2,3,4}, got " + std::to_string(j));
  }
}

void check_checkpoints(std::span<const std::uint64_t> checkpoints, std::uint64_t limit) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > limit) {
      throw std::out_of_range("checkpoint " + std::to_string(checkpoints[i]) +
                              " outside 1.." + std::to_string(limit));
    }
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
      throw std::invalid_argument("checkpoints must be strictly increasing");
    }
  }
}

template <typename Term>
std::vector<SumPoint> prefix_sums(std::span<const std::uint64_t> checkpoints, Term&& term) {
  std::vector<SumPoint> out;
  NeumaierSum acc;
  std::uint64_t n = 1;
  for (std::uint64_t x : checkpoints) {
    for (; n <= x; ++n) acc.add(term(n));
    out.push_back({x, acc.value()});
  }
  return out;
}

struct LinearFit {
  double intercept;
  double slope;
};

LinearFit ordinary_least_squares(std::span<const double> u, std::span<const double> v) {
  const double n = static_cast<double>(u.size());
  double su = 0, sv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    su += u[i];
    sv += v[i];
  }
  const double mu = su / n, mv = sv / n;
  double suu = 0, suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  const double slope = suv / suu;
  return {mv - slope * mu, slope};
}

// Fit y = c + d z by least squares; returns residual sum of squares.
struct TwoTermFit {
  double c = 0, d = 0, rss = 0;
  double inv00 = 0;  // (A^T A)^{-1}[0][0]
};

TwoTermFit fit_two_term(std::span<const double> y, std::span<const double> z) {
  double n = 0, sz = 0, szz = 0, sy = 0, szy = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    n += 1;
    sz += z[i];
    szz += z[i] * z[i];
    sy += y[i];
    szy += z[i] * y[i];
  }
  const double det = n * szz - sz * sz;
  TwoTermFit f;
  if (!(std::abs(det) > 1e-300)) {
    f.c = sy / n;
    f.inv00 = 1.0 / n;
  } else {
    f.c = (szz * sy - sz * szy) / det;
    f.d = (n * szy - sz * sy) / det;
    f.inv00 = szz / det;
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double e = y[i] - f.c - f.d * z[i];
    f.rss += e * e;
  }
  return f;
}

std::optional<double> loglog_slope(std::span<const SumPoint> points,
                                   std::span<const double> magnitude) {
  std::vector<double> u, v;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double floor = 1e-12 * std::abs(points[i].sum);
    if (magnitude[i] > floor && magnitude[i] > 0) {
      u.push_back(std::log(static_cast<double>(points[i].x)));
      v.push_back(std::log(magnitude[i]));
    }
  }
  if (u.size() < 3) return std::nullopt;
  return ordinary_least_squares(u, v).slope;
}

}  // namespace

Fraction ExponentTable::alpha(unsigned j) const {
  check_j(j);
  static constexpr std::array<Fraction, 3> kAlpha{{{1, 2}, {3, 4}, {7, 9}}};
  return kAlpha[j - 2];
}

Fraction ExponentTable::beta(unsigned j) const {
  check_j(j);
  static constexpr std::array<Fraction, 3> kBeta{{{2, 11}, {1, 9}, {2, 27}}};
  return kBeta[j - 2];
}

bool ExponentTable::ordering_holds(unsigned j) const {
  const Fraction b = beta(j);
  const Fraction one_minus_beta{b.den - b.num, b.den};
  return alpha(j) < one_minus_beta;
}

ExponentTable exponent_table() { return ExponentTable{}; }

void verify_exponent_ordering() {
  const ExponentTable t;
  for (unsigned j = 2; j <= 4; ++j) {
    if (!t.ordering_holds(j)) {
      throw std::logic_error("exponent table: 1 - beta_j > alpha_j fails at j=" +
                             std::to_string(j));
    }
  }
}

std::vector<SumPoint> partial_sum_sparse(const PowerSequence& seq,
                                         std::span<const std::uint64_t> checkpoints) {
  check_checkpoints(checkpoints, seq.limit());
  return prefix_sums(checkpoints, [&](std::uint64_t n) { return seq.lambda[n]; });
}

std::vector<SumPoint> partial_sum_product(const PowerSequence& f, const PowerSequence& g,
                                          std::span<const std::uint64_t> checkpoints) {
  if (f.power != g.power) throw std::invalid_argument("partial_sum_product: powers differ");
  check_checkpoints(checkpoints, std::min(f.limit(), g.limit()));
  return prefix_sums(checkpoints,
                     [&](std::uint64_t n) { return f.lambda[n] * g.lambda[n]; });
}

std::vector<std::uint64_t> log_spaced_checkpoints(double first, double last, std::size_t count) {
  if (count < 2 || !(first >= 1) || !(last > first)) {
    throw std::invalid_argument("log_spaced_checkpoints: need count >= 2 and 1 <= first < last");
  }
  std::vector<std::uint64_t> out;
  const double a = std::log10(first), b = std::log10(last);
  for (std::size_t i = 0; i < count; ++i) {
    const double e = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    const auto x = static_cast<std::uint64_t>(std::llround(std::pow(10.0, e)));
    if (out.empty() || x > out.back()) out.push_back(x);
  }
  return out;
}

FitResult fit_main_term(std::span<const SumPoint> points) {
  if (points.size() < 5) throw std::invalid_argument("fit_main_term: need at least 5 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].x == 0 || (i > 0 && points[i].x <= points[i - 1].x)) {
      throw std::invalid_argument("fit_main_term: sample points must be positive and increasing");
    }
  }
  const double span = std::log10(static_cast<double>(points.back().x) /
                                 static_cast<double>(points.front().x));
  if (span < 2.0 - 1e-9) {
    throw std::invalid_argument("fit_main_term: sample points must span at least two decades");
  }

  FitResult fit;
  const std::size_t n = points.size();
  std::vector<double> x(n), y(n);
  double sxs = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<double>(points[i].x);
    y[i] = points[i].sum / x[i];
    sxs += x[i] * points[i].sum;
    sxx += x[i] * x[i];
    fit.sample_points.push_back(points[i].x);
  }
  fit.origin_slope = sxs / sxx;

  // S/x = C + D x^{theta-1}: linear in (C, D) for fixed theta; profile theta.
  std::vector<double> z(n);
  auto profile = [&](double theta) {
    for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(x[i], theta - 1.0);
    return fit_two_term(y, z);
  };
  constexpr double kThetaMax = 0.995;
  constexpr int kGrid = 200;
  double best_theta = 0, best_rss = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double theta = kThetaMax * i / kGrid;
    const double rss = profile(theta).rss;
    if (rss < best_rss) {
      best_rss = rss;
      best_theta = theta;
    }
  }
  double lo = std::max(0.0, best_theta - kThetaMax / kGrid);
  double hi = std::min(kThetaMax, best_theta + kThetaMax / kGrid);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - golden * (hi - lo), b = lo + golden * (hi - lo);
  double fa = profile(a).rss, fb = profile(b).rss;
  for (int it = 0; it < 80; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - golden * (hi - lo);
      fa = profile(a).rss;
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + golden * (hi - lo);
      fb = profile(b).rss;
    }
  }
  double theta = fa < fb ? a : b;
  if (profile(theta).rss > best_rss) theta = best_theta;
  const TwoTermFit best = profile(theta);
  fit.joint_power = theta;
  fit.slope = best.c;
  fit.joint_coeff = best.d;
  const double dof = n > 3 ? static_cast<double>(n - 3) : 1.0;
  fit.slope_stderr = std::sqrt(best.rss / dof * best.inv00);

  std::vector<double> resid(n), envelope(n);
  double running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    resid[i] = std::abs(points[i].sum - fit.slope * x[i]);
    running = std::max(running, resid[i]);
    envelope[i] = running;
  }
  fit.remainder_exponent = loglog_slope(points, resid);
  fit.envelope_exponent = loglog_slope(points, envelope);
  fit.near_zero_slope = std::abs(fit.slope) <= 2.0 * fit.slope_stderr;
  return fit;
}

}  // namespace cusp
