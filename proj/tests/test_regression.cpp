// Values frozen from the first verified run. A change here means the numerics moved.

#include <cmath>

#include "cusp/asymptotics.hpp"
#include "cusp/census.hpp"
#include "cusp/dirichlet_series.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace {

struct Million {
  static constexpr std::uint64_t X = 1000000;
  cusp::FactorSieve sieve = cusp::build_sieve(X);
  cusp::IntSeries delta, w16;
  cusp::NormalizedCoeffs nd, n16;
  Million() {
    cusp::EigenformFactory factory(X);
    delta = factory.delta();
    w16 = factory.eigenform(cusp::EigenformId(16));
    nd = cusp::normalize(delta, 12);
    n16 = cusp::normalize(w16, 16);
  }
};

const Million& million() {
  static const Million m;
  return m;
}

}  // namespace

TEST_CASE("Delta vs weight 16 on 2 mod 5 up to 10^6") {
  const auto& m = million();
  const auto r = cusp::progression_census(m.nd.signs(), m.n16.signs(), 5, 2, Million::X);
  CHECK(r.same_sign == 100046);
  CHECK(r.opposite_sign == 99954);
  CHECK(r.zero == 0);
  CHECK(r.first_same == 12u);
  CHECK(r.first_opposite == 2u);
}

TEST_CASE("sparse sum of Delta at j=2 for x=10, termwise") {
  const auto tau = oracle::delta(100);
  double expected = 0;
  for (int n = 1; n <= 10; ++n) {
    expected += tau[n * n].get_d() / std::pow(static_cast<double>(n * n), 5.5);
  }
  const auto seq = cusp::power_sequence(million().delta, 12, million().sieve, 2, 10);
  const std::vector<std::uint64_t> cp{10};
  CHECK(cusp::partial_sum_sparse(seq, cp)[0].sum == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("Delta sparse-sum envelope stays bounded") {
  const auto& m = million();
  const auto seq = cusp::power_sequence(m.delta, 12, m.sieve, 2, Million::X);
  const auto cp = cusp::log_spaced_checkpoints(1e3, 1e6, 10);
  double worst = 0;
  for (const auto& p : cusp::partial_sum_sparse(seq, cp)) {
    worst = std::max(worst, std::abs(p.sum) / std::pow(static_cast<double>(p.x), 0.6));
  }
  CHECK(worst == doctest::Approx(0.01967000429581995).epsilon(1e-9));
}

TEST_CASE("Delta x Delta main term at j=2") {
  const auto& m = million();
  const auto f = cusp::power_sequence(m.delta, 12, m.sieve, 2, Million::X);
  const auto sums =
      cusp::partial_sum_product(f, f, cusp::log_spaced_checkpoints(1e4, 1e6, 10));
  const auto fit = cusp::fit_main_term(sums);
  CHECK(fit.slope == doctest::Approx(0.30822636333966574).epsilon(1e-9));
  CHECK_FALSE(fit.near_zero_slope);
  for (std::size_t i = sums.size() - 3; i < sums.size(); ++i) {
    CHECK(sums[i].sum / static_cast<double>(sums[i].x) == doctest::Approx(fit.slope).epsilon(0.01));
  }
}

TEST_CASE("Delta x weight 16 remainder exponent gate") {
  const auto& m = million();
  const auto f = cusp::power_sequence(m.delta, 12, m.sieve, 2, Million::X);
  const auto g = cusp::power_sequence(m.w16, 16, m.sieve, 2, Million::X);
  const auto fit =
      cusp::fit_main_term(cusp::partial_sum_product(f, g, cusp::log_spaced_checkpoints(1e4, 1e6, 10)));
  REQUIRE(fit.remainder_exponent.has_value());
  CHECK(*fit.remainder_exponent <= 1.0 - 2.0 / 11.0 + 0.1);
  // The product sum has no detectable linear term for distinct forms.
  CHECK(fit.near_zero_slope);
}

TEST_CASE("window at x=1000, j=2") {
  const auto& m = million();
  const auto f = cusp::power_sequence(m.delta, 12, m.sieve, 2, 2000);
  const auto g = cusp::power_sequence(m.w16, 16, m.sieve, 2, 2000);
  const std::vector<double> grid{1000.0};
  const auto w = cusp::window_scan(f, g, grid)[0];
  CHECK(w.h == doctest::Approx(568.25786399696176).epsilon(1e-12));
  CHECK(w.last == 1568);
  CHECK(w.same_sign == 292);
  CHECK(w.opposite_sign == 276);
  CHECK(w.zero == 0);
}

TEST_CASE("Rankin series of Delta at s=3 and s=2") {
  const auto& m = million();
  double prev = 0;
  for (std::uint64_t x : {1000u, 10000u, 100000u}) {
    const auto p = cusp::rankin_partial(m.nd, m.nd, 1, 1, cusp::Complex(3.0, 0.0), x);
    CHECK(p.value.real() > prev);
    prev = p.value.real();
  }
  CHECK(prev == doctest::Approx(1.065440513212305).epsilon(1e-12));
  const auto c = cusp::completed_rankin(m.nd, m.nd, 1, 1, 12, 12, cusp::Complex(2.0, 0.0), 100000);
  CHECK(c.value.imag() == 0.0);
  CHECK(c.value.real() > 0);
  CHECK(c.value.real() == doctest::Approx(1.1222130526466957e-12).epsilon(1e-9));
}
