#pragma once
// The integral side of the construction: the five vectors v_1..v_5, Groebner
// emptiness certificates for the even sections they span, the dual odd
// sections X_i with dimension and smoothness audits, the dimension count
// behind the infinitude argument, the exhaustive F_2 four-independence
// search, the secant bound experiment, and a verifier for candidate
// six-spaces meeting the even variety in twelve rational points.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinten/groebner.hpp"
#include "spinten/linalg.hpp"
#include "spinten/quadrics.hpp"
#include "spinten/zarith.hpp"

namespace spinten {

/// Rows v_1..v_5 in canonical even coordinates: v_1 = xi_{} + xi_{2345},
/// v_2 = xi_{13} + xi_{45}, v_3 = xi_{14} + xi_{25}, v_4 = xi_{15} + xi_{23},
/// v_5 = xi_{12} + xi_{1345}. Entries lie in {0, 1}; the rows are an HNF
/// basis of a saturated rank 5 lattice, so they stay independent over Q and
/// over every F_p.
ZMatrix z_model_vectors();

/// One modular replay of the rational emptiness certificate.
struct ModularEmptiness {
  mpz_class p;
  bool empty = false;
  int witness_variable = -1;  // a variable with no pure power, when not empty
};

struct EmptinessReport {
  int index = 0;  // the even system was restricted to span(v_1..v_index)
  EmptinessCertificate rational;
  std::vector<mpz_class> denominator_primes;  // recorded by the rational run
  std::vector<ModularEmptiness> modular;      // all p <= 50 plus denominator primes
  bool empty = false;                         // rational and every modular branch
};

/// Restricts the even system to span(v_1..v_index) and certifies projective
/// emptiness over Q, then over F_p for every prime p <= 50 and every
/// denominator prime of the rational run. index in [1, 5].
EmptinessReport certify_emptiness(int index);

/// The same certificate for the span of the first index rows of an arbitrary
/// 16-column integer matrix. Control inputs go through here; replacing a row
/// by a pure spinor must defeat the certificate.
EmptinessReport certify_emptiness(const ZMatrix& rows, int index);

struct SectionReport {
  int index = 0;
  mpz_class p;
  std::string field;         // "F2", "F3", ...
  int proj_dim = -2;         // projective dimension found over F_p
  int expected_dim = 0;      // 10 - index
  mpz_class degree;          // Hilbert multiplicity of the section
  long scanned_points = -1;  // exhaustive F_p point count; p in {2, 3} only
  long audited_base = 0;     // points audited over F_p
  long audited_ext = 0;      // points audited over F_{p^2}
  bool all_smooth = false;
  int recovered_rank = -1;   // rank mod p of the recovered form; -1 at p = 2
  bool pass = false;
};

/// Builds the dual section X_index over F_p: transports the annihilator of
/// span(v_1..v_index) into odd coordinates through the pairing, restricts the
/// odd system to the resulting (16 - index)-dimensional subspace, and audits:
/// projective dimension via a Groebner basis (expected 10 - index),
/// smoothness at every F_p and F_{p^2} point found by chart sampling plus,
/// for p in {2, 3}, a full F_p scan (ambient Jacobian rank 5 and section rank
/// 5 + index), and for odd p rank 10 of the recovered quadratic form mod p.
/// The point audit is a partial smoothness certificate by design: it covers
/// exactly the rational points listed in the report, nothing more. p must be
/// a prime <= 13.
SectionReport build_and_verify_section(int index, const mpz_class& p,
                                       int samples = 24, std::uint64_t seed = 1);

/// The dimension count behind the infinitude argument: Spin_10 has dimension
/// 45 and acts on the 48-dimensional Grassmannian Gr(4, S_-) through the
/// 46-dimensional incidence family, so no orbit is dense and the genus 7
/// models cannot all be equivalent.
struct DimensionAudit {
  int dim_variety = 0;       // dim of the spinor tenfold
  int dim_spin_group = 0;    // dim Spin_10 = 45
  int dim_incidence = 0;     // dim of the incidence family W = 46
  int dim_grassmannian = 0;  // dim Gr(4, 16) = 48
  bool orbit_gap = false;    // dim_spin_group < dim_grassmannian
};
DimensionAudit dimension_audit();

/// Exhaustive branch-and-bound result for the largest subset of nonzero
/// vectors of F_2^dim whose 4-element subsets are all linearly independent.
struct FourIndependenceResult {
  int dim = 0;
  int maximum = 0;
  std::vector<std::uint8_t> witness;  // vectors as bit masks, ascending
  std::uint64_t nodes = 0;            // search tree size
  std::uint64_t dead_ends = 0;        // maximal branches; none passed depth maximum
  int deepest = 0;                    // largest feasible set met, equals maximum
};

/// Depth-first search over the nonzero vectors in numeric order. For sets of
/// size >= 4, four-independence is exactly "no element is the sum of two or
/// of three others", which the search maintains incrementally as forbidden
/// sum masks. The first vector is pinned to e_1: GL(dim, F_2) is transitive
/// on nonzero vectors, so some maximum-size set maps to one through e_1 and
/// the restriction keeps the maximum exact. dim in {4, 5, 6}.
FourIndependenceResult f2_max_independent_set(int dim = 6);

/// One draw of the secant bound experiment: the Groebner dimension of the
/// section of the even variety by the row span of w (6 x 16 over F_2, rank 6)
/// and, when the section is zero-dimensional or empty, its F_2 point count.
struct SecantSample {
  int proj_dim = -2;
  int f2_points = -1;  // counted only when proj_dim <= 0
};
SecantSample secant_sample(const Gf2Matrix& w);

struct SecantBoundReport {
  int trials = 0;
  int zero_dimensional = 0;      // sections entering the bound, empty included
  int positive_dimensional = 0;  // outside the lemma hypothesis, logged only
  int max_points = 0;
  std::map<int, int> histogram;  // F_2 point count -> zero-dimensional sections
  bool bound_holds = false;      // every zero-dimensional count <= 8
};

/// Samples random rank 6 subspaces of the even 16-space over F_2 and checks
/// the point bound: a zero-dimensional section has at most 8 rational points.
SecantBoundReport f2_secant_bound_check(int trials, std::uint64_t seed);

enum class PlaneVerdict {
  pass,
  not_zero_dimensional,
  wrong_degree,
  missing_rational_points,
};
const char* plane_verdict_name(PlaneVerdict v);

struct PlaneVerification {
  PlaneVerdict verdict = PlaneVerdict::not_zero_dimensional;
  int proj_dim = -2;
  mpz_class degree;  // 0 when the section is projectively empty
  // Primitive integer representatives of the rational points found, in
  // ambient coordinates, sorted lexicographically.
  std::vector<std::vector<mpz_class>> points;
  bool all_smooth = false;
};

/// Verifies that the 6-space spanned by the given rows meets the even
/// variety in exactly twelve rational points, each smooth in the ambient
/// P^15: requires a zero-dimensional section of Hilbert degree 12, then
/// recovers every rational point exactly through multiplication operators on
/// the quotient ring. Only verification of a supplied candidate; searching
/// for such a plane is out of scope. basis must be 6 rows of 16 rationals,
/// independent over Q.
PlaneVerification verify_twelve_point_plane(const std::vector<std::vector<mpq_class>>& basis);

}  // namespace spinten
