#include "doctest.h"

#include <random>

#include "spinten/fields.hpp"

using namespace spinten;

TEST_CASE("prime field arithmetic satisfies field axioms on random samples") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 101ull, 4611686018427387847ull}) {
    PrimeField f(p);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
      const auto a = rng() % p;
      const auto b = rng() % p;
      const auto c = rng() % p;
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
      }
    }
    CHECK(f.one() == 1 % p);
  }
}

TEST_CASE("prime field rejects composite and oversized moduli") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(std::uint64_t(1) << 62), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
}

TEST_CASE("prime field reduces integers with floor semantics") {
  PrimeField f(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(-14) == 0);
  CHECK(f.from_mpz(mpz_class(-15)) == 6);
  CHECK(f.from_mpz(mpz_class("123456789123456789")) == f.from_int(123456789123456789LL % 7));
}

TEST_CASE("quadratic extensions use irreducible defining polynomials") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    QuadExtField f(p);
    auto [c1, c0] = f.defining_poly();
    // t^2 + c1 t + c0 has no root in F_p.
    PrimeField base(p);
    for (std::uint64_t x = 0; x < p; ++x) {
      const auto v = base.add(base.add(base.mul(x, x), base.mul(c1, x)), c0);
      CHECK(v != 0);
    }
  }
}

TEST_CASE("quadratic extension arithmetic: inverses and multiplicative order") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    QuadExtField f(p);
    // Every nonzero element has an inverse, and x^(p^2-1) = 1.
    const std::uint64_t q = p * p;
    for (std::uint64_t a0 = 0; a0 < p; ++a0)
      for (std::uint64_t a1 = 0; a1 < p; ++a1) {
        QuadExtField::Elem x{a0, a1};
        if (f.is_zero(x)) continue;
        CHECK(f.eq(f.mul(x, f.inv(x)), f.one()));
        auto acc = f.one();
        for (std::uint64_t e = 0; e < q - 1; ++e) acc = f.mul(acc, x);
        CHECK(f.eq(acc, f.one()));
      }
  }
  CHECK_THROWS_AS(QuadExtField(17), std::invalid_argument);
}

TEST_CASE("rational field keeps canonical reduced fractions") {
  RationalField f;
  auto x = f.div(f.from_int(6), f.from_int(-4));
  CHECK(x.get_num() == -3);
  CHECK(x.get_den() == 2);
  CHECK(f.to_string(x) == "-3/2");
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("field spec round-trips through parse and to_string") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("101") == FieldSpec::prime(101));
  CHECK(FieldSpec::parse("3:2") == FieldSpec::quad_ext(3));
  CHECK(FieldSpec::parse("101").to_string() == "101");
  CHECK(FieldSpec::parse("2:2").to_string() == "2:2");
  CHECK(FieldSpec::parse("11:2") == FieldSpec::quad_ext(11));
  CHECK_THROWS_AS(FieldSpec::parse("10"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("17:2"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("3:3"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("abc"), std::invalid_argument);
  bool visited = false;
  with_field(FieldSpec::parse("5:2"), [&](const auto& f) {
    visited = true;
    CHECK(f.characteristic() == 5);
  });
  CHECK(visited);
}
