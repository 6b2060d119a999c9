#include "spinten/variety.hpp"

#include <array>
#include <random>
#include <vector>

#include "doctest.h"
#include "spinten/clifford.hpp"
#include "spinten/fields.hpp"
#include "spinten/quadrics.hpp"

using namespace spinten;

namespace {

/// Reference enumerator: same representatives and scan order as the library
/// (leading coordinate 1, rightmost digit fastest), but evaluated through the
/// generic exact-arithmetic path instead of packed or table driven code.
EnumerationResult enumerate_generic(const QuadricSystemZ& sys, std::uint64_t q) {
  const PrimeField f(q);
  const int n = sys.front().n;
  EnumerationResult out;
  std::array<int, 16> x{};
  for (int lead = 0; lead < n; ++lead) {
    x.fill(0);
    x[lead] = 1;
    while (true) {
      std::vector<std::uint64_t> coords(n);
      for (int i = 0; i < n; ++i) coords[i] = static_cast<std::uint64_t>(x[i]);
      const auto probe = probe_point(f, sys, coords);
      if (probe.on_variety) {
        out.count += 1;
        if (out.min_tangent_rank < 0 || probe.tangent_rank < out.min_tangent_rank)
          out.min_tangent_rank = probe.tangent_rank;
        if (probe.tangent_rank > out.max_tangent_rank) out.max_tangent_rank = probe.tangent_rank;
        std::array<std::uint8_t, 16> pt{};
        for (int i = 0; i < n; ++i) pt[i] = static_cast<std::uint8_t>(x[i]);
        out.points.push_back(pt);
      }
      int pos = n - 1;
      while (pos > lead && x[pos] == static_cast<int>(q) - 1) x[pos--] = 0;
      if (pos == lead) break;
      ++x[pos];
    }
  }
  return out;
}

Matrix<PrimeField> random_skew5(const PrimeField& f, std::mt19937_64& rng) {
  Matrix<PrimeField> skew(5, 5, f);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const std::uint64_t r = rng() % f.modulus();
      skew.at(i, j) = r;
      skew.at(j, i) = f.neg(r);
    }
  return skew;
}

}  // namespace

TEST_CASE("packed F_2 enumeration matches the generic path and the count formula") {
  for (Parity par : {Parity::even, Parity::odd}) {
    const auto sys = clifford_quadrics(par);
    const auto fast = enumerate_points(sys, 2, true, true);
    const auto ref = enumerate_generic(sys, 2);
    CHECK(fast.count == 2295);
    CHECK(fast.count == predicted_point_count(2));
    CHECK(fast.count == ref.count);
    CHECK(fast.points == ref.points);
    CHECK(fast.min_tangent_rank == 5);
    CHECK(fast.max_tangent_rank == 5);
    CHECK(ref.min_tangent_rank == 5);
    CHECK(ref.max_tangent_rank == 5);
  }
}

TEST_CASE("F_3 enumeration cross-checks on a small system") {
  std::mt19937_64 rng(41);
  QuadricSystemZ sys;
  for (int k = 0; k < 2; ++k) {
    QuadricZ q(5);
    for (auto& c : q.c) c = static_cast<long>(rng() % 7) - 3;
    sys.push_back(q);
  }
  const auto fast = enumerate_points(sys, 3, true, true);
  const auto ref = enumerate_generic(sys, 3);
  CHECK(fast.count == ref.count);
  CHECK(fast.points == ref.points);
  CHECK(fast.min_tangent_rank == ref.min_tangent_rank);
  CHECK(fast.max_tangent_rank == ref.max_tangent_rank);
  CHECK(fast.count > 0);  // a pair of quadrics in P^4 always has F_3 points here
}

TEST_CASE("both spinor varieties have 91840 smooth F_3 points") {
  for (Parity par : {Parity::even, Parity::odd}) {
    const auto res = enumerate_points(clifford_quadrics(par), 3, false, true);
    CHECK(res.count == 91840);
    CHECK(res.count == predicted_point_count(3));
    CHECK(res.min_tangent_rank == 5);
    CHECK(res.max_tangent_rank == 5);
  }
}

TEST_CASE("exhaustive enumeration refuses fields beyond F_3") {
  const auto sys = clifford_quadrics(Parity::even);
  CHECK_THROWS_AS((void)enumerate_points(sys, 5), std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)enumerate_points(sys, 4),
                       doctest::Contains("F_2 and F_3"), std::invalid_argument);
}

TEST_CASE("membership probe accepts chart points and flags perturbations") {
  const auto sys = clifford_quadrics(Parity::even);
  PrimeField f(5);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = pure_spinor(f, random_skew5(f, rng), Parity::even);
    std::vector<std::uint64_t> x(s.x.begin(), s.x.end());
    const auto probe = probe_point(f, sys, x);
    CHECK(probe.on_variety);
    CHECK(probe.tangent_rank == 5);
  }
  // A deliberately twisted chart point: bumping one Pfaffian coordinate of a
  // fixed spinor breaks at least one quadric.
  const auto s = pure_spinor(f, random_skew5(f, rng), Parity::even);
  std::vector<std::uint64_t> x(s.x.begin(), s.x.end());
  x[11] = f.add(x[11], f.one());
  CHECK(!probe_point(f, sys, x).on_variety);
}

TEST_CASE("membership probe works over the rationals") {
  const auto sys = clifford_quadrics(Parity::odd);
  RationalField q;
  Matrix<RationalField> skew(5, 5, q);
  std::mt19937_64 rng(13);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      mpq_class v(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1);
      v.canonicalize();
      skew.at(i, j) = v;
      skew.at(j, i) = -v;
    }
  const auto s = pure_spinor(q, skew, Parity::odd);
  const auto probe = probe_point(q, sys, s.x);
  CHECK(probe.on_variety);
  CHECK(probe.tangent_rank == 5);
}

TEST_CASE("random transverse slices over F_3 have multiplicity twelve") {
  const auto sys = clifford_quadrics(Parity::even);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto slice = random_slice_multiplicity(sys, 3, seed);
    REQUIRE(slice.proj_dim == 0);
    CHECK(slice.degree == 12);
    CHECK(slice.attempts <= 50);
  }
}

TEST_CASE("pairing matrix is orthogonal as a signed permutation") {
  const auto& b = pairing_matrix_int();
  for (int j = 0; j < 16; ++j)
    for (int k = 0; k < 16; ++k) {
      int acc = 0;
      for (int i = 0; i < 16; ++i) acc += b[i][j] * b[i][k];
      CHECK(acc == (j == k ? 1 : 0));
    }
}

TEST_CASE("tangent hyperplane transport lands on the dual variety") {
  const auto rep = dual_transport_test(101, 10, 7);
  CHECK(rep.trials == 10);
  CHECK(rep.tangent_hits == 10);
  CHECK(rep.control_hits == 0);
}
