#pragma once
// Point counting, membership probes, linear slices, and the tangent
// hyperplane transport between the two spinor varieties.

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "spinten/clifford.hpp"
#include "spinten/fields.hpp"
#include "spinten/groebner.hpp"
#include "spinten/linalg.hpp"
#include "spinten/quadrics.hpp"

namespace spinten {

/// Formal Jacobian of the system at x: row per quadric, entry i equal to
/// 2 c_ii x_i + sum_{j != i} c_ij x_j reduced into the field. Over F_2 the
/// diagonal contribution vanishes, as it must for the derivative of x_i^2.
template <class F>
Matrix<F> quadric_jacobian(const F& f, const QuadricSystemZ& sys,
                           const std::vector<typename F::Elem>& x) {
  const int n = sys.empty() ? 0 : sys.front().n;
  Matrix<F> jac(sys.size(), static_cast<std::size_t>(n), f);
  for (std::size_t r = 0; r < sys.size(); ++r) {
    const QuadricZ& q = sys[r];
    for (int i = 0; i < n; ++i) {
      auto acc = f.mul(f.from_mpz(2 * q.at(i, i)), x[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const mpz_class& c = q.at(std::min(i, j), std::max(i, j));
        if (sgn(c) == 0) continue;
        acc = f.add(acc, f.mul(f.from_mpz(c), x[static_cast<std::size_t>(j)]));
      }
      jac.at(r, static_cast<std::size_t>(i)) = acc;
    }
  }
  return jac;
}

struct PointProbe {
  bool on_variety = false;
  int tangent_rank = -1;  // Jacobian rank; 5 at smooth points of the tenfold
};

template <class F>
PointProbe probe_point(const F& f, const QuadricSystemZ& sys,
                       const std::vector<typename F::Elem>& x) {
  PointProbe out;
  out.on_variety = true;
  for (const auto& q : sys)
    if (!f.is_zero(eval_quadric(f, q, x))) {
      out.on_variety = false;
      break;
    }
  out.tangent_rank = static_cast<int>(rank(f, quadric_jacobian(f, sys, x)));
  return out;
}

struct EnumerationResult {
  mpz_class count = 0;
  // Jacobian rank range over all points found; both -1 when rank checks were
  // skipped or no point exists.
  int min_tangent_rank = -1;
  int max_tangent_rank = -1;
  // Canonical representatives (first nonzero coordinate 1) in scan order,
  // filled on request.
  std::vector<std::array<std::uint8_t, 16>> points;
};

/// Exhaustive projective enumeration over F_q, q in {2, 3}. Larger fields are
/// refused: enumerate over F_2 or F_3, or sample charts (pure spinors,
/// section builders) instead of walking p^15 representatives.
EnumerationResult enumerate_points(const QuadricSystemZ& sys, std::uint64_t q,
                                   bool collect_points = false, bool check_smoothness = true);

/// (1+q)(1+q^2)(1+q^3)(1+q^4).
mpz_class predicted_point_count(std::uint64_t q);

struct SliceOutcome {
  int proj_dim = -2;
  mpz_class degree;
  int attempts = 0;  // draws consumed until a zero dimensional slice appeared
};

/// Hilbert data of the system restricted to a random 6-dimensional subspace
/// of k^16 over F_p. Draws that fail to be transverse (positive dimension)
/// are resampled, up to max_attempts.
SliceOutcome random_slice_multiplicity(const QuadricSystemZ& sys, std::uint64_t p,
                                       std::uint64_t seed, int max_attempts = 50);

struct TransportReport {
  int trials = 0;
  int tangent_hits = 0;  // transported tangent hyperplanes on the dual variety
  int control_hits = 0;  // transported generic hyperplanes through the point
};

/// For each trial over F_p: sample a smooth chart point s of the even
/// variety, draw a hyperplane containing its tangent space (a combination of
/// Jacobian rows), transport it through the inverse transpose of the pairing
/// matrix, and test the result against the odd quadrics. The control draws a
/// hyperplane through s that avoids the tangent span, which should transport
/// off the variety.
TransportReport dual_transport_test(std::uint64_t p, int trials, std::uint64_t seed);

}  // namespace spinten
