#include "spinten/groebner.hpp"

#include <array>
#include <random>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "spinten/fields.hpp"
#include "spinten/linalg.hpp"

using namespace spinten;

namespace {

Mono mk3(int a, int b, int c) {
  Mono m;
  m.e[0] = static_cast<std::uint8_t>(a);
  m.e[1] = static_cast<std::uint8_t>(b);
  m.e[2] = static_cast<std::uint8_t>(c);
  m.deg = static_cast<std::uint16_t>(a + b + c);
  return m;
}

template <class F>
Poly<F> poly3(const F& f, const std::vector<std::tuple<int, int, int, long long>>& ts) {
  std::vector<Term<F>> terms;
  for (const auto& [a, b, c, v] : ts) terms.push_back({mk3(a, b, c), f.from_int(v)});
  return make_poly(f, std::move(terms));
}

template <class F>
bool poly_equal(const F& f, const Poly<F>& x, const Poly<F>& y) {
  if (x.t.size() != y.t.size()) return false;
  for (std::size_t i = 0; i < x.t.size(); ++i)
    if (x.t[i].m != y.t[i].m || !f.eq(x.t[i].c, y.t[i].c)) return false;
  return true;
}

// The running point-counting oracle: x^2 - yz, y^2 - xz, z^2 - xy.
template <class F>
std::vector<Poly<F>> cyclic_quadrics(const F& f) {
  return {poly3(f, {{2, 0, 0, 1}, {0, 1, 1, -1}}),
          poly3(f, {{0, 2, 0, 1}, {1, 0, 1, -1}}),
          poly3(f, {{0, 0, 2, 1}, {1, 1, 0, -1}})};
}

template <class F>
bool on_cyclic_variety(const F& f, const typename F::Elem& x, const typename F::Elem& y,
                       const typename F::Elem& z) {
  return f.is_zero(f.sub(f.mul(x, x), f.mul(y, z))) &&
         f.is_zero(f.sub(f.mul(y, y), f.mul(x, z))) &&
         f.is_zero(f.sub(f.mul(z, z), f.mul(x, y)));
}

/// Projective points via the standard charts z = 1, then z = 0 with y = 1,
/// then the single point (1 : 0 : 0).
template <class F>
int count_cyclic_points(const F& f, const std::vector<typename F::Elem>& elems) {
  int n = 0;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (on_cyclic_variety(f, x, y, f.one())) ++n;
  for (const auto& x : elems)
    if (on_cyclic_variety(f, x, f.one(), f.zero())) ++n;
  if (on_cyclic_variety(f, f.one(), f.zero(), f.zero())) ++n;
  return n;
}

/// F_{7^3} = F_7[t] / (t^3 + t + 1), used only to probe point counts in a
/// cubic extension. Irreducibility is re-checked in the test body.
struct CubicExtF7 {
  using Elem = std::array<std::uint64_t, 3>;
  PrimeField base{7};

  Elem zero() const { return {0, 0, 0}; }
  Elem one() const { return {1, 0, 0}; }
  bool is_zero(const Elem& a) const { return a == Elem{0, 0, 0}; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const {
    return {base.add(a[0], b[0]), base.add(a[1], b[1]), base.add(a[2], b[2])};
  }
  Elem neg(const Elem& a) const { return {base.neg(a[0]), base.neg(a[1]), base.neg(a[2])}; }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  Elem mul(const Elem& a, const Elem& b) const {
    std::array<std::uint64_t, 5> c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c[i + j] = base.add(c[i + j], base.mul(a[i], b[j]));
    // t^3 = -t - 1 and t^4 = -t^2 - t.
    c[1] = base.sub(c[1], c[3]);
    c[0] = base.sub(c[0], c[3]);
    c[2] = base.sub(c[2], c[4]);
    c[1] = base.sub(c[1], c[4]);
    return {c[0], c[1], c[2]};
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("CubicExtF7::inv: zero");
    return pow(a, 7 * 7 * 7 - 2);
  }
};

}  // namespace

TEST_CASE("grevlex ranks by degree then reverse lexicographic ties") {
  // Degree two in three variables, largest first: x^2, xy, y^2, xz, yz, z^2.
  const std::vector<Mono> desc = {mk3(2, 0, 0), mk3(1, 1, 0), mk3(0, 2, 0),
                                  mk3(1, 0, 1), mk3(0, 1, 1), mk3(0, 0, 2)};
  for (std::size_t i = 0; i < desc.size(); ++i)
    for (std::size_t j = 0; j < desc.size(); ++j) {
      CHECK(grevlex_less(desc[i], desc[j]) == (i > j));
    }
  CHECK(grevlex_less(mk3(0, 0, 3), mk3(2, 0, 0)) == false);  // degree dominates
  CHECK(grevlex_less(mk3(2, 0, 0), mk3(0, 0, 3)) == true);

  CHECK(mono_divides(mk3(1, 1, 0), mk3(2, 1, 3)));
  CHECK(!mono_divides(mk3(1, 1, 0), mk3(2, 0, 3)));
  CHECK(mono_lcm(mk3(2, 0, 1), mk3(1, 1, 0)) == mk3(2, 1, 1));
  CHECK(mono_div(mk3(2, 1, 1), mk3(1, 1, 0)) == mk3(1, 0, 1));
  CHECK(mono_coprime(mk3(2, 0, 0), mk3(0, 2, 0)));
  CHECK(!mono_coprime(mk3(2, 0, 0), mk3(1, 2, 0)));
}

TEST_CASE("a monomial pair that is already a basis passes through unchanged") {
  PrimeField f(5);
  const auto gens = std::vector<Poly<PrimeField>>{poly3(f, {{2, 0, 0, 1}}),
                                                  poly3(f, {{1, 1, 0, 1}})};
  const auto res = buchberger(f, gens);
  REQUIRE(res.basis.size() == 2);
  CHECK(poly_equal(f, res.basis[0], gens[1]));  // xy precedes x^2 in grevlex
  CHECK(poly_equal(f, res.basis[1], gens[0]));
  CHECK(res.stats.pairs_generated == 1);
  CHECK(res.stats.pairs_reduced + res.stats.coprime_skips + res.stats.chain_skips == 1);
  CHECK(res.denominator_primes.empty());
}

TEST_CASE("inhomogeneous generators are rejected") {
  PrimeField f(5);
  const auto bad = poly3(f, {{2, 0, 0, 1}, {1, 0, 0, 1}});
  CHECK_THROWS_AS((void)buchberger(f, {bad}), std::invalid_argument);
}

TEST_CASE("cyclic quadric system: reduced basis, Hilbert data, point oracle") {
  PrimeField f(7);
  const auto gens = cyclic_quadrics(f);
  const auto res = buchberger(f, gens);

  // Hand derivation: lm(z^2 - xy) = xy under grevlex, and all three S-pairs
  // already reduce to zero, so the reduced basis is the generators themselves
  // written as y^2 - xz, xy - z^2, x^2 - yz in ascending leading term order.
  REQUIRE(res.basis.size() == 3);
  CHECK(poly_equal(f, res.basis[0], poly3(f, {{0, 2, 0, 1}, {1, 0, 1, -1}})));
  CHECK(poly_equal(f, res.basis[1], poly3(f, {{1, 1, 0, 1}, {0, 0, 2, -1}})));
  CHECK(poly_equal(f, res.basis[2], poly3(f, {{2, 0, 0, 1}, {0, 1, 1, -1}})));

  // Buchberger criterion, verified directly: every S-polynomial of the
  // returned basis has normal form zero, and every generator reduces to zero.
  for (std::size_t i = 0; i < res.basis.size(); ++i)
    for (std::size_t j = i + 1; j < res.basis.size(); ++j) {
      const Mono l = mono_lcm(res.basis[i].lm(), res.basis[j].lm());
      Poly<PrimeField> s;
      const Mono mi = mono_div(l, res.basis[i].lm());
      for (const auto& tm : res.basis[i].t) s.t.push_back({mono_mul(tm.m, mi), tm.c});
      sub_scaled(f, s, f.one(), mono_div(l, res.basis[j].lm()), res.basis[j]);
      CHECK(normal_form(f, std::move(s), res.basis).zero());
    }
  for (const auto& g : gens) CHECK(normal_form(f, g, res.basis).zero());

  const auto hs = hilbert_summary(res, 3);
  CHECK(hs.proj_dim == 0);
  CHECK(hs.degree == 3);
  // Hilbert function 1, 3, 3, ... of three non-collinear points:
  // N(t) = (1 + 2t)(1 - t)^2.
  CHECK(hs.numerator == std::vector<mpz_class>{1, 0, -3, 2});

  const auto cert = projective_emptiness_certificate(res, 3);
  CHECK(!cert.empty);
  CHECK(cert.witness_variable == 2);  // no pure power of z among xy, y^2, x^2

  // Point oracle over F_7: exactly the orbit (1,1,1), (2,4,1), (4,2,1) of the
  // cube roots of unity, each a smooth point (Jacobian rank 2).
  std::vector<PrimeField::Elem> e7;
  for (int i = 0; i < 7; ++i) e7.push_back(f.from_int(i));
  CHECK(count_cyclic_points(f, e7) == 3);
  const std::array<std::array<std::uint64_t, 3>, 3> pts = {{{1, 1, 1}, {2, 4, 1}, {4, 2, 1}}};
  for (const auto& p : pts) {
    REQUIRE(on_cyclic_variety(f, p[0], p[1], p[2]));
    Matrix<PrimeField> jac(3, 3, f);
    const auto [x, y, z] = p;
    jac.at(0, 0) = f.from_int(2 * static_cast<long long>(x));
    jac.at(0, 1) = f.neg(z);
    jac.at(0, 2) = f.neg(y);
    jac.at(1, 0) = f.neg(z);
    jac.at(1, 1) = f.from_int(2 * static_cast<long long>(y));
    jac.at(1, 2) = f.neg(x);
    jac.at(2, 0) = f.neg(y);
    jac.at(2, 1) = f.neg(x);
    jac.at(2, 2) = f.from_int(2 * static_cast<long long>(z));
    CHECK(rank(f, jac) == 2);
  }

  // The count is stable in the quadratic and cubic extensions, which pins the
  // scheme to those three reduced points and certifies degree 3 (not 4).
  QuadExtField f49(7);
  std::vector<QuadExtField::Elem> e49;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      e49.push_back(f49.add(f49.from_int(a), f49.mul(f49.gen(), f49.from_int(b))));
  CHECK(count_cyclic_points(f49, e49) == 3);

  CubicExtF7 f343;
  for (int r = 0; r < 7; ++r) {  // t^3 + t + 1 has no root, hence irreducible
    const auto v = f343.base.add(
        f343.base.add(f343.base.mul(f343.base.mul(r, r), r), static_cast<std::uint64_t>(r)), 1);
    REQUIRE(v != 0);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CubicExtF7::Elem a = {rng() % 7, rng() % 7, rng() % 7};
    if (f343.is_zero(a)) continue;
    CHECK(f343.eq(f343.mul(a, f343.inv(a)), f343.one()));
    CHECK(f343.eq(f343.pow(a, 342), f343.one()));
  }
  std::vector<CubicExtF7::Elem> e343;
  for (std::uint64_t a = 0; a < 7; ++a)
    for (std::uint64_t b = 0; b < 7; ++b)
      for (std::uint64_t c = 0; c < 7; ++c) e343.push_back({a, b, c});
  CHECK(count_cyclic_points(f343, e343) == 3);
}

TEST_CASE("reduced basis is independent of strategy, criteria, generator order") {
  PrimeField f(7);
  const auto gens = cyclic_quadrics(f);
  const auto ref = buchberger(f, gens);

  const auto fifo = buchberger(f, gens, true, SelectionStrategy::fifo);
  REQUIRE(fifo.basis.size() == ref.basis.size());
  for (std::size_t i = 0; i < ref.basis.size(); ++i)
    CHECK(poly_equal(f, fifo.basis[i], ref.basis[i]));

  const auto plain = buchberger(f, gens, false);
  REQUIRE(plain.basis.size() == ref.basis.size());
  for (std::size_t i = 0; i < ref.basis.size(); ++i)
    CHECK(poly_equal(f, plain.basis[i], ref.basis[i]));
  CHECK(plain.stats.coprime_skips == 0);
  CHECK(plain.stats.chain_skips == 0);
  CHECK(ref.stats.coprime_skips >= 1);  // the x^2, y^2 pair is coprime
  CHECK(plain.stats.pairs_reduced >= ref.stats.pairs_reduced);

  for (std::size_t shift = 1; shift < 3; ++shift) {
    std::vector<Poly<PrimeField>> rot;
    for (std::size_t i = 0; i < gens.size(); ++i) rot.push_back(gens[(i + shift) % gens.size()]);
    const auto res = buchberger(f, rot);
    REQUIRE(res.basis.size() == ref.basis.size());
    for (std::size_t i = 0; i < ref.basis.size(); ++i)
      CHECK(poly_equal(f, res.basis[i], ref.basis[i]));
  }
}

TEST_CASE("random ideal members reduce to zero") {
  PrimeField f(7);
  const auto res = buchberger(f, cyclic_quadrics(f));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    Poly<PrimeField> combo;
    for (const auto& g : res.basis) {
      Mono m = mk3(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                   static_cast<int>(rng() % 3));
      const auto c = f.from_int(static_cast<long long>(rng() % 7));
      sub_scaled(f, combo, c, m, g);
    }
    // The combination is inhomogeneous but still an ideal member.
    CHECK(normal_form(f, std::move(combo), res.basis).zero());
  }
}

TEST_CASE("rational runs record the denominator prime superset") {
  RationalField q;

  // 6 x^2: the content primes of the pre-monic leading coefficient matter,
  // since reduction mod 2 or 3 would change the leading term.
  {
    Poly<RationalField> g = poly3(q, {{2, 0, 0, 6}});
    const auto res = buchberger(q, {g});
    REQUIRE(res.basis.size() == 1);
    CHECK(poly_equal(q, res.basis[0], poly3(q, {{2, 0, 0, 1}})));
    CHECK(res.denominator_primes == std::vector<mpz_class>{2, 3});
  }

  // (3/2) x^2 - y^2 and xy: the S-pair chain introduces y^3 with leading
  // coefficient -2/3, so both 2 and 3 end up recorded.
  {
    std::vector<Term<RationalField>> ts;
    ts.push_back({mk3(2, 0, 0), mpq_class(3, 2)});
    ts.push_back({mk3(0, 2, 0), mpq_class(-1)});
    const auto g1 = make_poly(q, std::move(ts));
    const auto g2 = poly3(q, {{1, 1, 0, 1}});
    const auto res = buchberger(q, {g1, g2});
    REQUIRE(res.basis.size() == 3);
    CHECK(res.denominator_primes == std::vector<mpz_class>{2, 3});
    const auto cert = projective_emptiness_certificate(res, 2);
    CHECK(cert.empty);
  }

  // Unit leading coefficients and integer tails record nothing: the basis
  // transfers to every prime.
  {
    const auto res = buchberger(q, cyclic_quadrics(q));
    CHECK(res.denominator_primes.empty());
    const auto hs = hilbert_summary(res, 3);
    CHECK(hs.proj_dim == 0);
    CHECK(hs.degree == 3);
  }
}

TEST_CASE("emptiness certificates from leading terms") {
  {
    const auto cert = emptiness_from_leading_terms(
        {mk3(0, 0, 1), mk3(0, 1, 0), mk3(1, 0, 0)}, 3);
    REQUIRE(cert.empty);
    REQUIRE(cert.pure_powers.size() == 3);
    CHECK(cert.pure_powers[0] == std::pair<int, int>{1, 2});
    CHECK(cert.pure_powers[1] == std::pair<int, int>{1, 1});
    CHECK(cert.pure_powers[2] == std::pair<int, int>{1, 0});
  }
  {
    const auto cert = emptiness_from_leading_terms({mk3(3, 0, 0), mk3(1, 1, 0)}, 2);
    CHECK(!cert.empty);
    CHECK(cert.witness_variable == 1);
    CHECK(cert.pure_powers.empty());
  }
  {
    // The smallest pure power of each variable is reported.
    const auto cert = emptiness_from_leading_terms({mk3(3, 0, 0), mk3(2, 0, 0)}, 1);
    REQUIRE(cert.empty);
    CHECK(cert.pure_powers[0] == std::pair<int, int>{2, 1});
  }
}

TEST_CASE("Hilbert data for reference ideals") {
  {
    // Zero ideal in six variables: all of P^5.
    const auto hs = hilbert_dimension_degree({}, 6);
    CHECK(hs.proj_dim == 5);
    CHECK(hs.degree == 1);
    CHECK(hs.numerator == std::vector<mpz_class>{1});
  }
  {
    // Irrelevant ideal (x, y, z): projectively empty, quotient = constants.
    const auto hs = hilbert_dimension_degree({mk3(1, 0, 0), mk3(0, 1, 0), mk3(0, 0, 1)}, 3);
    CHECK(hs.proj_dim == -1);
    CHECK(hs.degree == 1);
  }
  {
    // A quadric hypersurface in P^2: a curve of degree two.
    const auto hs = hilbert_dimension_degree({mk3(2, 0, 0)}, 3);
    CHECK(hs.proj_dim == 1);
    CHECK(hs.degree == 2);
    CHECK(hs.numerator == std::vector<mpz_class>{1, 0, -1});
  }
  {
    // (x^2, xy, y^3) in two variables: projectively empty with quotient
    // dimension 1 + 2 + 1 = 4, numerator (1-t)^2 (1+t)^2.
    const auto hs =
        hilbert_dimension_degree({mk3(2, 0, 0), mk3(1, 1, 0), mk3(0, 3, 0)}, 2);
    CHECK(hs.proj_dim == -1);
    CHECK(hs.degree == 4);
    const auto cert =
        emptiness_from_leading_terms({mk3(2, 0, 0), mk3(1, 1, 0), mk3(0, 3, 0)}, 2);
    CHECK(cert.empty);
  }
  {
    // Unit ideal: zero quotient.
    const auto hs = hilbert_dimension_degree({Mono{}}, 2);
    CHECK(hs.proj_dim == -1);
    CHECK(hs.degree == 0);
  }
  Mono beyond;
  beyond.e[5] = 1;
  beyond.deg = 1;
  CHECK_THROWS_AS((void)hilbert_dimension_degree({beyond}, 3), std::invalid_argument);
}

TEST_CASE("double point versus two reduced points in P^1") {
  PrimeField f(7);

  // (x^2): one point with multiplicity two; the degree sees the multiplicity.
  const auto dbl = buchberger(f, std::vector<Poly<PrimeField>>{poly3(f, {{2, 0, 0, 1}})});
  const auto hs_dbl = hilbert_summary(dbl, 2);
  CHECK(hs_dbl.proj_dim == 0);
  CHECK(hs_dbl.degree == 2);

  // (xy): two reduced points; here degree equals the point count.
  const auto red = buchberger(f, std::vector<Poly<PrimeField>>{poly3(f, {{1, 1, 0, 1}})});
  const auto hs_red = hilbert_summary(red, 2);
  CHECK(hs_red.proj_dim == 0);
  CHECK(hs_red.degree == 2);

  int pts_dbl = 0, pts_red = 0;
  for (int x = 0; x < 7; ++x) {  // chart y = 1
    if (f.is_zero(f.mul(f.from_int(x), f.from_int(x)))) ++pts_dbl;
    if (f.is_zero(f.from_int(x))) ++pts_red;
  }
  // chart y = 0, x = 1
  if (f.is_zero(f.one())) ++pts_dbl;  // x^2 = 1 there
  ++pts_red;                          // xy = 0 there
  CHECK(pts_dbl == 1);
  CHECK(pts_red == 2);
}
