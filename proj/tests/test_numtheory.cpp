#include <doctest.h>

#include "gspec/errors.hpp"
#include "gspec/numtheory.hpp"
#include "oracles.hpp"

using namespace gspec;

namespace {

Integer pow_int(long b, unsigned e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), e);
  return out;
}

}  // namespace

TEST_CASE("gcd examples") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, -7) == 7);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-4, -6) == 2);
}

TEST_CASE("is_prime on small and 64-bit values") {
  CHECK_FALSE(is_prime(std::uint64_t{0}));
  CHECK_FALSE(is_prime(std::uint64_t{1}));
  CHECK(is_prime(std::uint64_t{2}));
  CHECK(is_prime(std::uint64_t{569759}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));
  CHECK(is_prime(Integer("146237798587879")));
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST_CASE("is_prime agrees with trial division below 10^5") {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    REQUIRE(is_prime(n) == prime);
  }
}

TEST_CASE("factor examples") {
  const auto f12 = factor(12);
  CHECK(f12.prime_powers == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(f12.complete());

  const auto fp = factor(569759);
  CHECK(fp.prime_powers == std::vector<PrimePower>{{569759, 1}});

  const Integer big = pow_int(2, 12) * pow_int(5, 3) * 23 * Integer("91502697363972395639457912547");
  const auto fb = factor(big);
  REQUIRE(fb.prime_powers.size() >= 3);
  CHECK(fb.prime_powers[0] == PrimePower{2, 12});
  CHECK(fb.prime_powers[1] == PrimePower{5, 3});
  CHECK(fb.prime_powers[2] == PrimePower{23, 1});
  CHECK(fb.product() == big);

  CHECK_THROWS_AS(factor(0), ArgumentError);
}

TEST_CASE("factor splits 64-bit semiprimes and perfect powers") {
  const Integer semi = Integer("4294967291") * Integer("4294967279");
  const auto f = factor(semi);
  CHECK(f.complete());
  CHECK(f.prime_powers.size() == 2);

  const Integer cube = pow_int(1000003, 3);
  const auto fc = factor(cube);
  CHECK(fc.prime_powers == std::vector<PrimePower>{{1000003, 3}});

  const Integer mixed = pow_int(65537, 2) * Integer("1000000007") * Integer("998244353");
  const auto fm = factor(mixed);
  CHECK(fm.complete());
  CHECK(fm.product() == mixed);
}

TEST_CASE("a tiny budget leaves a residual but the product is exact") {
  const Integer p = Integer("1000000000000000003");  // prime
  const Integer q = Integer("1000000000000000009");  // prime
  const auto f = factor(p * q * 6, 1);
  CHECK(f.product() == p * q * 6);
  if (!f.complete()) CHECK_FALSE(is_prime(*f.residual));
  CHECK(f.budget_used <= 1);
}

TEST_CASE("factorization reconstructs |n| and matches the trial-division oracle") {
  for (long n = -10000; n <= 10000; ++n) {
    if (n == 0) continue;
    const auto f = factor(n);
    REQUIRE(f.complete());
    REQUIRE(f.product() == (n < 0 ? -n : n));
    for (std::size_t i = 0; i < f.prime_powers.size(); ++i) {
      REQUIRE(is_prime(f.prime_powers[i].prime));
      if (i > 0) REQUIRE(f.prime_powers[i - 1].prime < f.prime_powers[i].prime);
    }
    const auto s = squarefree_status(n);
    const bool has_square = oracle::divisible_square_by_trial(n, 100);
    if (n % 2 == 0) {
      REQUIRE(s.is(SquareFreeStatus::Tag::Even));
    } else {
      REQUIRE(s.is(SquareFreeStatus::Tag::HasSquareFactor) == has_square);
      REQUIRE(s.is(SquareFreeStatus::Tag::OddSquareFree) == !has_square);
    }
  }
}

TEST_CASE("squarefree_status examples") {
  CHECK(squarefree_status(5) == SquareFreeStatus::odd_square_free());
  CHECK(squarefree_status(45) == SquareFreeStatus::square_factor(3));
  CHECK(squarefree_status(10) == SquareFreeStatus::even());
  CHECK(squarefree_status(0) == SquareFreeStatus::zero());
  CHECK(squarefree_status(1) == SquareFreeStatus::odd_square_free());
  const Integer delta = Integer(23) * 7309 * 79967 * 300191 * Integer("146237798587879");
  CHECK(squarefree_status(delta) == SquareFreeStatus::odd_square_free());
}

TEST_CASE("squarefree_status is sign-blind and square witnesses divide") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    Integer n = static_cast<unsigned long>(rng() >> (rng() % 40));
    if (trial % 3 == 0) n *= static_cast<unsigned long>(rng() % 50 + 1) * static_cast<unsigned long>(rng() % 50 + 1);
    const auto s = squarefree_status(n);
    CHECK(s == squarefree_status(-n));
    if (s.is(SquareFreeStatus::Tag::HasSquareFactor)) {
      const Integer p2 = *s.prime() * *s.prime();
      CHECK(mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t()) != 0);
    }
    if (s.is(SquareFreeStatus::Tag::Even)) CHECK(mpz_even_p(n.get_mpz_t()));
  }
}

TEST_CASE("a square of two large primes is found through perfect-power detection") {
  const Integer p = Integer("1000000000000000003");
  const Integer q = Integer("1000000000000000009");
  const Integer r = Integer("1000000000000000031");
  // p^2 * q * r with q*r beyond what a tiny budget can split
  const auto s = squarefree_status(p * p * 3, 1);
  CHECK(s == SquareFreeStatus::square_factor(p));
  const auto u = squarefree_status(q * r * Integer("1000000000000000079") * Integer("1000000000000000177"), 1);
  CHECK(u.is(SquareFreeStatus::Tag::Unknown));
}

TEST_CASE("format_factorization") {
  CHECK(format_factorization(factor(360)) == "2^3 · 3^2 · 5");
  CHECK(format_factorization(factor(1)) == "1");
  Factorization f;
  f.prime_powers = {{3, 1}};
  f.residual = Integer(221);
  CHECK(format_factorization(f) == "3 · (C: 221)");
}

TEST_CASE("early exit on a square still reports clean evidence") {
  const auto a = squarefree_analysis(45);
  CHECK(a.status == SquareFreeStatus::square_factor(3));
  CHECK(a.factorization.complete());
  CHECK(a.factorization.product() == 45);

  const Integer r = Integer(5) * 169 * 569759;
  const auto b = squarefree_analysis(r);
  CHECK(b.status == SquareFreeStatus::square_factor(13));
  CHECK(b.factorization.prime_powers == std::vector<PrimePower>{{5, 1}, {13, 2}, {569759, 1}});
  CHECK(b.factorization.product() == r);
}
