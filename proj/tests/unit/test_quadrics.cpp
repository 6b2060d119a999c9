#include "doctest.h"

#include <random>

#include "spinten/fields.hpp"
#include "spinten/quadrics.hpp"

using namespace spinten;

namespace {

template <class F>
Matrix<F> random_skew(const F& f, std::mt19937_64& rng) {
  Matrix<F> m(5, 5, f);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      m.at(i, j) = f.from_int(static_cast<long long>(rng() % 7) - 3);
      m.at(j, i) = f.neg(m.at(i, j));
    }
  return m;
}

template <class F>
void check_vanishing(const F& f, Parity parity, std::uint64_t seed) {
  const auto sys = clifford_quadrics(parity);
  REQUIRE(sys.size() == 10);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 25; ++trial) {
    const auto s = pure_spinor(f, random_skew(f, rng), parity);
    std::vector<typename F::Elem> x(s.x.begin(), s.x.end());
    for (const auto& q : sys) CHECK(f.is_zero(eval_quadric(f, q, x)));
  }
}

}  // namespace

TEST_CASE("clifford quadrics vanish on pure spinors over several fields") {
  for (Parity p : {Parity::even, Parity::odd}) {
    check_vanishing(RationalField(), p, 11);
    check_vanishing(PrimeField(2), p, 12);
    check_vanishing(PrimeField(3), p, 13);
    check_vanishing(PrimeField(101), p, 14);
    check_vanishing(QuadExtField(7), p, 15);
  }
}

TEST_CASE("clifford quadrics are ten independent primitive quadrics") {
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto sys = clifford_quadrics(p);
    REQUIRE(sys.size() == 10);
    for (const auto& q : sys) {
      CHECK(q.n == 16);
      CHECK(content(q.c) == 1);
    }
    CHECK(hnf_rows(coefficient_matrix(sys)).rows == 10);
  }
}

TEST_CASE("interpolated quadric basis is seed independent") {
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto a = interpolate_quadrics(p, 2024);
    const auto b = interpolate_quadrics(p, 977);
    REQUIRE(a.size() == 10);
    REQUIRE(b.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(a[i].c == b[i].c);
  }
}

TEST_CASE("interpolated and clifford quadrics span the same saturated lattice") {
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto derived = interpolate_quadrics(p, 5);
    const auto direct = hnf_rows(coefficient_matrix(clifford_quadrics(p)));
    const auto basis = coefficient_matrix(derived);
    REQUIRE(direct.rows == basis.rows);
    CHECK(direct.a == basis.a);
    for (const auto& q : derived) CHECK(content(q.c) == 1);
  }
}

TEST_CASE("integral restriction agrees with substitution") {
  std::mt19937_64 rng(7);
  const auto sys = clifford_quadrics(Parity::even);
  ZMatrix w(4, 16);
  for (auto& v : w.a) v = static_cast<long>(rng() % 5) - 2;
  RationalField f;
  for (const auto& q : sys) {
    const auto res = restrict_integral(q, w);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<mpq_class> y(4);
      for (auto& v : y) v = static_cast<long>(rng() % 9) - 4;
      std::vector<mpq_class> x(16, 0);
      for (int i = 0; i < 16; ++i)
        for (int r = 0; r < 4; ++r) x[i] += y[r] * w.at(r, i);
      CHECK(eval_quadric(f, res, y) == eval_quadric(f, q, x));
    }
  }
}

TEST_CASE("field restriction agrees with substitution") {
  PrimeField f(7);
  std::mt19937_64 rng(8);
  const auto sys = clifford_quadrics(Parity::odd);
  Matrix<PrimeField> w(5, 16, f);
  for (auto& v : w.a) v = f.from_int(static_cast<long long>(rng() % 7));
  for (const auto& q : sys) {
    const auto res = restrict_quadric(f, q, w);
    QuadricZ shape(5);  // index helper for the restricted coefficients
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint64_t> y(5);
      for (auto& v : y) v = rng() % 7;
      std::vector<std::uint64_t> x(16, 0);
      for (int i = 0; i < 16; ++i)
        for (int r = 0; r < 5; ++r) x[i] = f.add(x[i], f.mul(y[r], w.at(r, i)));
      auto direct = eval_quadric(f, q, x);
      auto via = f.zero();
      for (int r = 0; r < 5; ++r)
        for (int s = r; s < 5; ++s)
          via = f.add(via, f.mul(res[QuadricZ::idx(5, r, s)], f.mul(y[r], y[s])));
      CHECK(f.eq(via, direct));
    }
  }
}

TEST_CASE("the distinguished quartic relation exists and is unique") {
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto sys = clifford_quadrics(p);
    const auto rec = recover_quadratic_form(sys);
    REQUIRE(rec.lambda.size() == 55);
    CHECK(content(rec.lambda) == 1);

    // The relation holds identically: check at random non-spinor points.
    RationalField f;
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<mpq_class> x(16);
      for (auto& v : x) v = static_cast<long>(rng() % 11) - 5;
      std::vector<mpq_class> vals(10);
      for (int j = 0; j < 10; ++j) vals[j] = eval_quadric(f, sys[j], x);
      mpq_class acc = 0;
      std::size_t t = 0;
      for (int j = 0; j < 10; ++j)
        for (int k = j; k < 10; ++k, ++t) acc += mpq_class(rec.lambda[t]) * vals[j] * vals[k];
      CHECK(acc == 0);
    }

    // Rank of the recovered form.
    Matrix<RationalField> g(10, 10, f);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) g.at(i, j) = rec.gram[i][j];
    CHECK(rank(f, g) == 10);
  }
}

TEST_CASE("systems without a unique relation are rejected") {
  QuadricSystemZ junk;
  for (int i = 0; i < 10; ++i) {
    QuadricZ q(16);
    q.at(i, i) = 1;
    junk.push_back(q);
  }
  CHECK_THROWS_AS(recover_quadratic_form(junk), NotAMukaiSectionError);
}
