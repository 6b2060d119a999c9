#pragma once
// Arithmetic of nondegenerate quadratic forms over Q: symmetric Gauss
// diagonalization, Hilbert symbols, the local invariant profile (determinant
// and discriminant square classes, Hasse set, real signature), existence of a
// form with prescribed invariants, and the similarity class counts behind the
// classification statements.
//
// Conventions, fixed here for every consumer: square classes are written as
// signed squarefree integers; the Hasse invariant of <a_1,...,a_n> at a place
// v is eps_v = prod_{i<j} (a_i, a_j)_v; the discriminant class is
// disc = (-1)^{n(n-1)/2} det. A place is a rational prime or the real place.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "spinten/fields.hpp"
#include "spinten/linalg.hpp"

namespace spinten {

// Signed squarefree representative of the square class of a nonzero rational.
mpz_class square_class(const mpq_class& a);

// Diagonal form <d_1,...,d_n>; every entry is kept squarefree-normalized.
struct DiagonalForm {
  std::vector<mpz_class> diag;
  int rank() const { return static_cast<int>(diag.size()); }
};

// Normalizes arbitrary nonzero rational entries. Throws on a zero entry.
DiagonalForm diagonal_form(const std::vector<mpq_class>& entries);

// The similarity representative c * f, entry-wise renormalized.
DiagonalForm scale_form(const DiagonalForm& f, const mpq_class& c);

// A finite set of places: strictly ascending primes plus the real place.
struct PlaceSet {
  std::vector<mpz_class> finite;
  bool infinity = false;

  std::size_t size() const { return finite.size() + (infinity ? 1 : 0); }
  bool operator==(const PlaceSet&) const = default;
};

struct LocalInvariantProfile {
  int rank = 0;
  mpz_class det;        // square class of the determinant
  mpz_class disc;       // (-1)^{rank(rank-1)/2} * det, squarefree
  PlaceSet hasse_minus; // places with eps_v = -1; always of even cardinality
  int r_plus = 0;       // real signature
  int r_minus = 0;
};

// Hilbert symbol (a, b)_v in {+1, -1}; p must be a (finite) prime. Zero
// arguments are rejected.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p);
int hilbert_symbol_infinity(const mpq_class& a, const mpq_class& b);

// Whether a is a square in Q_p (resp. in R for the _real variant).
bool is_local_square(const mpq_class& a, const mpz_class& p);
bool is_real_square(const mpq_class& a);

// Symmetric Gauss congruence diagonalization of a symmetric rational matrix.
// Throws SingularMatrixError on a degenerate form and std::invalid_argument
// on a non-symmetric input.
DiagonalForm diagonalize(const Matrix<RationalField>& sym);

// Full local invariant profile; only the places dividing 2 * prod |diag|
// (plus the real place) can carry eps_v = -1, and only those are scanned.
LocalInvariantProfile local_profile(const DiagonalForm& f);

// The paper-facing predicates. For rank 10 fills assumption_a (trivial
// discriminant class) and assumption_b (additionally empty Hasse set); for
// rank 7 fills clifford_m8 (the det-square rescaling has empty Hasse set,
// cross-checked against the real-signature rule s in {0,4}). Other ranks are
// rejected. key_on_det evaluates assumption_a against the determinant class
// instead of the discriminant class; readings_diverge records whether the two
// readings disagree on this form.
struct AssumptionReport {
  std::optional<bool> assumption_a;
  std::optional<bool> assumption_b;
  std::optional<bool> clifford_m8;
  bool readings_diverge = false;
};
AssumptionReport predicate_assumptions(const DiagonalForm& f, bool key_on_det = false);

// Named failures of the existence problem for prescribed invariants.
enum class InvariantClash {
  reciprocity_parity,      // odd number of places with eps_v = -1
  det_signature_sign,      // sign(det) != (-1)^{r_minus}
  real_hasse_signature,    // eps_infty incompatible with (-1)^{C(r_minus,2)}
  low_rank_obstruction,    // rank 1 with nonempty Hasse set, or rank 2 with
                           // -det a square in Q_v at a Hasse place v
};
const char* invariant_clash_name(InvariantClash c);

struct InconsistentInvariants {
  InvariantClash clash;
  std::string detail;
};

// Produces a diagonal form with the requested rank, determinant class, Hasse
// set and signature, or the named inconsistency that rules one out. A
// returned form round-trips through local_profile exactly.
using ConstructedForm = std::variant<DiagonalForm, InconsistentInvariants>;
ConstructedForm construct_with_invariants(int rank, const mpq_class& det_class,
                                          const PlaceSet& hasse_minus,
                                          int r_plus, int r_minus);

// Admissible real-signature data for the two classified families over a
// field with r real places: tenfold forms have s_v in {1,5,9} per real place
// and similarity scaling acts by s -> 10 - s on any subset of places;
// ninefold (rank 7, det-square) forms have s_v in {0,4} and no nontrivial
// scaling action, because 9 - s leaves the admissible set.
enum class FormFamily { tenfold_o1, ninefold };

struct SimilarityCount {
  FormFamily family;
  int real_places = 0;
  mpz_class admissible_vectors; // signature vectors before the action
  mpz_class orbit_count;        // similarity classes; equals 2^r
  // For r = 1: one rational diagonal form per orbit, in canonical order.
  std::vector<DiagonalForm> rational_representatives;
};
// Enumerates the admissible signature vectors for r in 1..12 componentwise,
// canonicalizes each under the sign action, and counts distinct orbits.
SimilarityCount count_similarity_classes(FormFamily family, int r);

// The separating family q_S: for each even-cardinality set S of primes, a
// rank 10 form with trivial discriminant class (det class -1, signature
// (9,1)) whose finite Hasse set is exactly S. Trivial discriminant makes the
// finite Hasse set a similarity invariant, so distinct sets give pairwise
// non-similar forms. Throws std::invalid_argument on an odd-cardinality set
// (Hilbert reciprocity) or a malformed prime list.
struct QsFamilyEntry {
  std::vector<mpz_class> s;
  DiagonalForm form;
  LocalInvariantProfile profile;
};
struct QsFamilyReport {
  std::vector<QsFamilyEntry> entries;
  bool pairwise_distinct = false;
};
QsFamilyReport qS_family(const std::vector<std::vector<mpz_class>>& sets);

}  // namespace spinten
