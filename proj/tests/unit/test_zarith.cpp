#include "doctest.h"

#include <random>

#include "spinten/fields.hpp"
#include "spinten/zarith.hpp"

using namespace spinten;

TEST_CASE("u64 primality on known values") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(4611686018427387847ull));  // largest prime below 2^62
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(561));   // Carmichael
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to first 4 bases
  CHECK(next_prime_u64(50) == 53);
  auto ps = primes_upto(50);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
}

TEST_CASE("content normalization fixes scale and sign") {
  std::vector<mpz_class> v{-6, 9, -3};
  auto d = content_normalize(v);
  CHECK(v == std::vector<mpz_class>{2, -3, 1});
  CHECK(d == -3);

  std::vector<mpz_class> w{0, 0, 4, -6};
  content_normalize(w);
  CHECK(w == std::vector<mpz_class>{0, 0, 2, -3});

  std::vector<mpz_class> z{0, 0};
  CHECK_THROWS_AS(content_normalize(z), NormalizationError);

  // Idempotent and scale invariant on random vectors.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<mpz_class> r(6);
    for (auto& x : r) x = static_cast<long>(rng() % 41) - 20;
    if (content(r) == 0) continue;
    auto a = r;
    content_normalize(a);
    auto b = a;
    content_normalize(b);
    CHECK(a == b);
    auto scaled = r;
    for (auto& x : scaled) x *= -35;
    content_normalize(scaled);
    CHECK(scaled == a);
  }
}

TEST_CASE("rational vectors clear to primitive integer vectors") {
  std::vector<mpq_class> v{mpq_class(1, 2), mpq_class(-2, 3), mpq_class(0)};
  auto w = primitive_integer_vector(v);
  CHECK(w == std::vector<mpz_class>{3, -4, 0});
}

TEST_CASE("hnf is canonical for row-equivalent matrices") {
  // Two bases of the same lattice in Z^3.
  ZMatrix a(2, 3), b(2, 3);
  a.at(0, 0) = 2; a.at(0, 1) = 3; a.at(0, 2) = 6;
  a.at(1, 0) = 4; a.at(1, 1) = 8; a.at(1, 2) = 10;
  b.at(0, 0) = 6; b.at(0, 1) = 11; b.at(0, 2) = 16;  // row0 + row1
  b.at(1, 0) = -4; b.at(1, 1) = -8; b.at(1, 2) = -10;  // -row1
  auto ha = hnf_rows(a);
  auto hb = hnf_rows(b);
  REQUIRE(ha.rows == hb.rows);
  CHECK(ha.a == hb.a);

  // Transform is unimodular and reproduces the HNF.
  ZMatrix u;
  auto h = hnf_rows(a, &u);
  for (std::size_t i = 0; i < h.rows; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += u.at(i, k) * a.at(k, j);
      CHECK(s == h.at(i, j));
    }
}

TEST_CASE("hnf pivots are positive with reduced entries above") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    ZMatrix m(4, 6);
    for (auto& x : m.a) x = static_cast<long>(rng() % 21) - 10;
    auto h = hnf_rows(m);
    std::size_t prev_col = 0;
    bool first = true;
    for (std::size_t i = 0; i < h.rows; ++i) {
      std::size_t c = 0;
      while (c < h.cols && h.at(i, c) == 0) ++c;
      REQUIRE(c < h.cols);
      if (!first) CHECK(c > prev_col);
      first = false;
      prev_col = c;
      CHECK(h.at(i, c) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.at(k, c) >= 0);
        CHECK(h.at(k, c) < h.at(i, c));
      }
    }
  }
}

TEST_CASE("integer kernel is saturated") {
  // Kernel of (2 4) in Z^2 is generated by (2,-1), not (4,-2).
  ZMatrix m(1, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  auto k = integer_kernel(m);
  REQUIRE(k.rows == 1);
  CHECK(k.at(0, 0) == 2);
  CHECK(k.at(0, 1) == -1);

  // Random check: kernel rows annihilate m and the lattice is saturated
  // (content of every HNF row is 1 after saturation in these random cases).
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    ZMatrix a(3, 7);
    for (auto& x : a.a) x = static_cast<long>(rng() % 9) - 4;
    auto ker = integer_kernel(a);
    for (std::size_t i = 0; i < ker.rows; ++i)
      for (std::size_t r = 0; r < a.rows; ++r) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < a.cols; ++j) s += a.at(r, j) * ker.at(i, j);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("rational lift inverts reduction mod p") {
  // 1/2 mod 101 is 51.
  auto q = rational_lift(51, 101);
  REQUIRE(q.has_value());
  CHECK(*q == mpq_class(1, 2));
  CHECK(*rational_lift(0, 101) == 0);
  CHECK(*rational_lift(100, 101) == -1);

  const std::uint64_t p = 2305843009213693951ULL;
  std::mt19937_64 rng(5);
  PrimeField f(p);
  for (int t = 0; t < 200; ++t) {
    const long num = static_cast<long>(rng() % 20001) - 10000;
    const long den = static_cast<long>(rng() % 9999) + 1;
    const auto v = f.mul(f.from_int(num), f.inv(f.from_int(den)));
    auto lifted = rational_lift(v, p);
    REQUIRE(lifted.has_value());
    mpq_class expect(num, den);
    expect.canonicalize();
    CHECK(*lifted == expect);
  }
}

TEST_CASE("fast integer kernel matches the general algorithm") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 2 + rng() % 7;
    ZMatrix a(rows, cols);
    for (auto& x : a.a) x = static_cast<long>(rng() % 11) - 5;
    if (t % 4 == 0) {
      // Duplicate and scale a row to force rank deficiency.
      for (std::size_t j = 0; j < cols && rows > 1; ++j) a.at(rows - 1, j) = 3 * a.at(0, j);
    }
    auto slow = integer_kernel(a);
    auto fast = integer_kernel_fast(a);
    REQUIRE(slow.rows == fast.rows);
    REQUIRE(slow.cols == fast.cols);
    CHECK(slow.a == fast.a);
  }
  ZMatrix zero(2, 4);
  auto k = integer_kernel_fast(zero);
  CHECK(k.rows == 4);  // everything
}

TEST_CASE("factorization recovers prime powers and large factors") {
  auto f = factorize(mpz_class(-720));
  CHECK(f[mpz_class(2)] == 4);
  CHECK(f[mpz_class(3)] == 2);
  CHECK(f[mpz_class(5)] == 1);
  CHECK(f.size() == 3);

  // Product of two 11 digit primes forces the rho path.
  mpz_class p("10000000019"), q("10000000033");
  auto g = factorize(p * q);
  CHECK(g[p] == 1);
  CHECK(g[q] == 1);

  CHECK(squarefree_part(mpz_class(720)) == 5);
  CHECK(squarefree_part(mpz_class(-12)) == -3);
  CHECK(squarefree_part(mpz_class(1)) == 1);
  CHECK_THROWS_AS(factorize(mpz_class(0)), std::invalid_argument);
}
