#include <numeric>
#include <random>

#include "cusp/errors.hpp"
#include "cusp/qseries.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cusp::BigInt;
using cusp::IntSeries;

namespace {

IntSeries from(std::initializer_list<long> v) {
  std::vector<BigInt> c;
  for (long x : v) c.emplace_back(x);
  return IntSeries(std::move(c));
}

IntSeries random_series(std::mt19937_64& rng, std::size_t X) {
  std::vector<BigInt> c(X + 1);
  for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
  return IntSeries(std::move(c));
}

}  // namespace

TEST_CASE("series_mul small cases") {
  CHECK(cusp::series_mul(from({1, 1, 0}), from({1, -1, 0})) == from({1, 0, -1}));
  const auto a = from({3, -7, 11, 0, 5});
  CHECK(cusp::series_mul(a, IntSeries::identity(4)) == a);
  CHECK_THROWS_AS(cusp::series_mul(from({1, 2}), from({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("series_mul is commutative and associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t X = 1 + rng() % 60;
    const auto a = random_series(rng, X), b = random_series(rng, X), c = random_series(rng, X);
    CHECK(cusp::series_mul(a, b) == cusp::series_mul(b, a));
    CHECK(cusp::series_mul(cusp::series_mul(a, b), c) ==
          cusp::series_mul(a, cusp::series_mul(b, c)));
  }
}

TEST_CASE("series_pow") {
  CHECK(cusp::series_pow(from({0, 1, 0, 0}), 2) == from({0, 0, 1, 0}));
  std::mt19937_64 rng(9);
  const auto a = random_series(rng, 80);
  CHECK(cusp::series_pow(a, 4) == cusp::series_pow(cusp::series_pow(a, 2), 2));
  CHECK(cusp::series_pow(a, 3) == cusp::series_mul(a, cusp::series_mul(a, a)));
  CHECK_THROWS_AS(cusp::series_pow(a, 0), std::invalid_argument);
  CHECK(cusp::series_pow(a, 0, true) == IntSeries::identity(80));
}

TEST_CASE("pentagonal cubed is the Jacobi series") {
  const std::size_t X = 10000;
  CHECK(cusp::series_pow(cusp::pentagonal_series(X), 3) == cusp::jacobi_series(X));
}

TEST_CASE("pentagonal and Jacobi series are sparse with the right supports") {
  const auto p = cusp::pentagonal_series(40);
  const auto expect = from({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0,
                            0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
  CHECK(p == expect);
  const auto j = cusp::jacobi_series(10);
  CHECK(j == from({1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9}));
}

TEST_CASE("delta_series matches the direct product") {
  const auto d = cusp::delta_series(200);
  const auto o = oracle::delta(200);
  for (std::size_t n = 0; n <= 200; ++n) CHECK(d[n] == o[n]);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d[5] == 4830);
  CHECK(d[6] == -6048);
  CHECK(d[6] == d[2] * d[3]);
  CHECK_THROWS_AS(cusp::delta_series(0), std::invalid_argument);
}

TEST_CASE("delta routes agree at X = 10^4") {
  const auto routes = cusp::delta_routes(10000);
  CHECK(routes[0] == routes[1]);
}

TEST_CASE("eisenstein_series") {
  const auto e4 = cusp::eisenstein_series(4, 30);
  const auto e6 = cusp::eisenstein_series(6, 30);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e6[2] == -16632);
  const auto o4 = oracle::eisenstein(4, 30), o6 = oracle::eisenstein(6, 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(e4[n] == o4[n]);
    CHECK(e6[n] == o6[n]);
  }
  CHECK_THROWS_AS(cusp::eisenstein_series(8, 10), std::invalid_argument);
  // sigma_5 beyond 64 bits
  const auto big = cusp::eisenstein_series(6, 20000);
  CHECK(big[19999] == -504 * oracle::sigma(5, 19999));
  CHECK(big[20000] == -504 * oracle::sigma(5, 20000));
}

TEST_CASE("catalog eigenforms") {
  CHECK_THROWS_AS(cusp::EigenformId(14), std::invalid_argument);
  CHECK_THROWS_AS(cusp::EigenformId(24), std::invalid_argument);
  cusp::EigenformFactory factory(60);
  for (int w : cusp::EigenformId::kCatalog) {
    const auto s = factory.eigenform(cusp::EigenformId(w));
    const auto o = oracle::eigenform(w, 60);
    CAPTURE(w);
    CHECK(s[0] == 0);
    CHECK(s[1] == 1);
    for (std::size_t n = 0; n <= 60; ++n) CHECK(s[n] == o[n]);
  }
  CHECK(cusp::eigenform_series(cusp::EigenformId(16), 5)[2] == 216);
  CHECK(cusp::eigenform_series(cusp::EigenformId(12), 5)[2] == -24);
}

TEST_CASE("raw expansions are multiplicative at coprime pairs") {
  const std::size_t X = 10000;
  cusp::EigenformFactory factory(X);
  for (int w : cusp::EigenformId::kCatalog) {
    const auto s = factory.eigenform(cusp::EigenformId(w));
    std::size_t failures = 0;
    for (std::size_t m = 2; m * m <= X; ++m) {
      for (std::size_t n = m + 1; m * n <= X; ++n) {
        if (std::gcd(m, n) == 1 && s[m * n] != s[m] * s[n]) ++failures;
      }
    }
    CAPTURE(w);
    CHECK(failures == 0);
  }
}
