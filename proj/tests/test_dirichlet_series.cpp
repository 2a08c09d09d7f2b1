#include <cmath>
#include <numeric>
#include <numbers>

#include "cusp/dirichlet_series.hpp"
#include "doctest.h"

using cusp::Complex;

namespace {
struct Fixture {
  std::size_t X = 4000;
  cusp::NormalizedCoeffs d;
  cusp::NormalizedCoeffs e16;
  Fixture() {
    cusp::EigenformFactory factory(X);
    d = cusp::normalize(factory.delta(), 12);
    e16 = cusp::normalize(factory.eigenform(cusp::EigenformId(16)), 16);
  }
};
const Fixture& fx() {
  static const Fixture f;
  return f;
}
}  // namespace

TEST_CASE("rankin_partial elementary values") {
  const auto& f = fx();
  const auto one = cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(2.0, 0.0), 1);
  CHECK(one.value == Complex(1.0, 0.0));
  CHECK(one.terms_used == 1);

  const auto real = cusp::rankin_partial(f.d, f.e16, 3, 1, Complex(1.7, 0.0), f.X);
  CHECK(real.value.imag() == 0.0);

  const auto two = cusp::rankin_partial(f.d, f.d, 1, 1, Complex(2.0, 0.0), 2);
  CHECK(two.value.real() == doctest::Approx(1.0 + f.d.lambda(2) * f.d.lambda(2) / 4.0));
}

TEST_CASE("rankin_partial tail bound and monotonicity") {
  const auto& f = fx();
  double prev = 0;
  for (std::uint64_t x : {10u, 100u, 1000u, 4000u}) {
    const auto p = cusp::rankin_partial(f.d, f.d, 1, 1, Complex(2.0, 0.0), x);
    CHECK(p.value.real() >= prev);
    prev = p.value.real();
    CHECK(std::isfinite(p.tail_bound));
  }
  const auto lo = cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(2.5, 1.0), 500);
  const auto hi = cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(2.5, 1.0), 4000);
  CHECK(std::abs(hi.value - lo.value) <= lo.tail_bound);
  CHECK(cusp::rankin_tail_bound(2.0, 1000) > cusp::rankin_tail_bound(2.0, 10000));
  CHECK(cusp::rankin_tail_bound(3.0, 1000) < cusp::rankin_tail_bound(2.0, 1000));
}

TEST_CASE("progressions partition the series") {
  const auto& f = fx();
  const Complex s(2.2, -0.4);
  const auto full = cusp::rankin_partial(f.d, f.e16, 1, 0, s, f.X);
  Complex units{0, 0};
  for (std::int64_t l : {1, 5, 7, 11}) {
    units += cusp::rankin_partial(f.d, f.e16, 12, l, s, f.X).value;
  }
  Complex direct{0, 0};
  for (std::uint64_t n = 1; n <= f.X; ++n) {
    if (std::gcd<std::uint64_t>(n, 12) == 1) {
      direct += f.d.lambda(n) * f.e16.lambda(n) * std::pow(static_cast<double>(n), -s);
    }
  }
  CHECK(std::abs(units - direct) < 1e-12);
  CHECK(std::abs(full.value) > 0);
}

TEST_CASE("rankin_partial domain") {
  const auto& f = fx();
  CHECK_THROWS_AS(cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(1.0, 0.0), 100),
                  std::domain_error);
  const auto ex = cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(0.8, 0.0), 100,
                                       cusp::SeriesMode::Exploratory);
  CHECK(std::isinf(ex.tail_bound));
  CHECK_THROWS_AS(cusp::rankin_partial(f.d, f.e16, 4, 2, Complex(2.0, 0.0), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(cusp::rankin_partial(f.d, f.e16, 1, 1, Complex(2.0, 0.0), f.X + 1),
                  std::out_of_range);
}

TEST_CASE("completed_rankin factors") {
  const auto& f = fx();
  const Complex s(2.0, 0.5);
  const auto c = cusp::completed_rankin(f.d, f.e16, 3, 2, 12, 16, s, 2000);
  const Complex w = s + 13.0;
  CHECK(std::abs(c.s_raw - w) < 1e-15);
  const Complex arch = std::pow(2.0 * std::numbers::pi, -2.0 * w) * cusp::gamma(w) *
                       cusp::gamma(w - 12.0 + 1.0);
  CHECK(std::abs(c.archimedean - arch) <= 1e-12 * std::abs(arch));
  const Complex z = cusp::zeta(2.0 * s) * (1.0 - std::pow(3.0, -2.0 * s));
  CHECK(std::abs(c.zeta_factor - z) <= 1e-12 * std::abs(z));
  const Complex r = cusp::rankin_partial(f.d, f.e16, 3, 2, s, 2000).value;
  CHECK(std::abs(c.value - arch * z * r) <= 1e-9 * std::abs(c.value));

  CHECK_THROWS_AS(cusp::completed_rankin(f.d, f.e16, 1, 1, 12, 12, s, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(cusp::completed_rankin(f.d, f.e16, 1, 1, 12, 16, Complex(0.9, 0), 100),
                  std::domain_error);
}
