#include <cmath>

#include "cusp/hecke.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cusp::BigInt;

TEST_CASE("smallest prime factor sieve") {
  const auto s = cusp::build_sieve(1000);
  CHECK(s.spf(12) == 2);
  CHECK(s.spf(97) == 97);
  CHECK(s.spf(91) == 7);
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    CHECK(s.is_prime(n) == oracle::is_prime(n));
    std::uint64_t prod = 1;
    for (const auto& [p, e] : s.factorize(n)) {
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
    CHECK(s.divisor_count(n) == oracle::divisor_count(n));
  }
  CHECK_THROWS_AS(cusp::build_sieve(1), std::invalid_argument);
  CHECK_THROWS_AS(s.factorize(1001), std::out_of_range);
}

TEST_CASE("coeff_prime_power against the expansion") {
  const auto d = cusp::delta_series(200);
  CHECK(cusp::coeff_prime_power(d[2], 2, 0, 12) == 1);
  CHECK(cusp::coeff_prime_power(d[2], 2, 2, 12) == -1472);
  CHECK(cusp::coeff_prime_power(d[2], 2, 3, 12) == d[8]);
  CHECK(d[8] == 84480);
  const auto sieve = cusp::build_sieve(200);
  for (std::uint32_t p : sieve.primes()) {
    std::uint64_t q = p;
    for (unsigned r = 1; q <= 200; ++r, q *= p) {
      CHECK(cusp::coeff_prime_power(d[p], p, r, 12) == d[q]);
    }
  }
}

TEST_CASE("coeff_at_power") {
  const std::size_t X = 2000;
  cusp::EigenformFactory factory(X);
  const auto sieve = cusp::build_sieve(X);
  const auto& d = factory.delta();
  CHECK(cusp::coeff_at_power(1, 3, d, sieve, 12) == 1);
  CHECK(cusp::coeff_at_power(2, 2, d, sieve, 12) == -1472);
  CHECK(cusp::coeff_at_power(6, 2, d, sieve, 12) == d[36]);
  CHECK(d[36] == d[4] * d[9]);
  CHECK(cusp::coeff_at_power(12, 3, d, sieve, 12) == d[1728]);
  for (int w : cusp::EigenformId::kCatalog) {
    const auto s = factory.eigenform(cusp::EigenformId(w));
    for (std::uint64_t n = 1; n <= X; ++n) {
      if (cusp::coeff_at_power(n, 1, s, sieve, w) != s[n]) FAIL("mismatch at n=" << n);
    }
    for (std::uint64_t n = 1; n * n <= X; ++n) {
      CHECK(cusp::coeff_at_power(n, 2, s, sieve, w) == s[n * n]);
    }
  }
  CHECK_THROWS_AS(cusp::coeff_at_power(X + 1, 1, d, sieve, 12), std::out_of_range);
  // n^j far beyond the truncation only needs a(p).
  const auto small = d.truncated(50);
  CHECK(cusp::coeff_at_power(44, 2, small, sieve, 12) == d[1936]);
  CHECK_THROWS_AS(cusp::coeff_at_power(53, 1, small, sieve, 12), std::out_of_range);
}

TEST_CASE("normalize") {
  const auto d = cusp::delta_series(100);
  const auto nc = cusp::normalize(d, 12);
  CHECK(nc.lambda(1) == 1.0);
  CHECK(nc.lambda(2) == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
  CHECK(std::abs(nc.lambda(2) - (-0.530330085889910643)) < 1e-12);
  CHECK(nc.sign(2) == -1);
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(nc.sign(n) == sgn(d[n]));
    CHECK(nc.lambda(n) == doctest::Approx(d[n].get_d() / std::pow(double(n), 5.5)));
  }
}

TEST_CASE("deligne_check") {
  const std::size_t X = 10000;
  cusp::EigenformFactory factory(X);
  const auto sieve = cusp::build_sieve(X);
  for (int w : {12, 16}) {
    const auto s = factory.eigenform(cusp::EigenformId(w));
    auto nc = cusp::normalize(s, w);
    CHECK(cusp::deligne_check(nc, sieve).empty());
    CHECK(cusp::deligne_check_exact(s, w, sieve, X).empty());
    nc.overwrite_lambda(2, 3.0);
    const auto v = cusp::deligne_check(nc, sieve);
    REQUIRE(v.size() == 1);
    CHECK(v[0].n == 2);
    CHECK(v[0].value == 3.0);
    CHECK(v[0].bound == 2.0);
  }
}

TEST_CASE("power sequences agree with exact coefficients") {
  const std::size_t X = 3000;
  cusp::EigenformFactory factory(X);
  const auto sieve = cusp::build_sieve(X);
  for (int w : {12, 18, 26}) {
    const auto s = factory.eigenform(cusp::EigenformId(w));
    const auto nc = cusp::normalize(s, w);
    for (unsigned j = 1; j <= 4; ++j) {
      const auto exact = cusp::power_sequence(s, w, sieve, j, X);
      const auto approx = cusp::power_sequence(nc, sieve, j, X);
      for (std::uint64_t n = 1; n <= X; n += (n < 200 ? 1 : 37)) {
        const BigInt a = cusp::coeff_at_power(n, j, s, sieve, w);
        CAPTURE(w);
        CAPTURE(j);
        CAPTURE(n);
        CHECK(exact.sign[n] == sgn(a));
        const double nj = std::pow(static_cast<double>(n), static_cast<double>(j));
        long e = 0;
        const double mant = mpz_get_d_2exp(&e, a.get_mpz_t());
        const double expect = sgn(a) == 0 ? 0.0
                                          : mant * std::exp(e * std::log(2.0) -
                                                            0.5 * (w - 1) * std::log(nj));
        CHECK(exact.lambda[n] == doctest::Approx(expect).epsilon(1e-9));
        CHECK(approx.lambda[n] == doctest::Approx(exact.lambda[n]).epsilon(1e-7).scale(1.0));
      }
    }
  }
  const auto d = factory.delta();
  CHECK_THROWS_AS(cusp::power_sequence(d, 12, sieve, 5, X), std::invalid_argument);
}
