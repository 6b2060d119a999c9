#include "spinten/qforms.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "spinten/zarith.hpp"

namespace spinten {

namespace {

// Valuation of nonzero z at p; divides the p-power out of z.
long remove_p(mpz_class& z, const mpz_class& p) {
  return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

// Legendre symbol of the unit num/den at an odd prime p.
int legendre_unit(const mpz_class& num, const mpz_class& den, const mpz_class& p) {
  return mpz_legendre(num.get_mpz_t(), p.get_mpz_t()) *
         mpz_legendre(den.get_mpz_t(), p.get_mpz_t());
}

// Residue of the 2-adic unit num/den modulo 8 (odd x is its own inverse mod 8).
unsigned long unit_mod8(const mpz_class& num, const mpz_class& den) {
  return mpz_fdiv_ui(num.get_mpz_t(), 8) * mpz_fdiv_ui(den.get_mpz_t(), 8) % 8;
}

void check_prime_list(const std::vector<mpz_class>& primes, const char* who) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2 || mpz_probab_prime_p(primes[i].get_mpz_t(), 32) == 0)
      throw std::invalid_argument(std::string(who) + ": place list entry is not prime");
    if (i > 0 && primes[i - 1] >= primes[i])
      throw std::invalid_argument(std::string(who) + ": place list not strictly ascending");
  }
}

}  // namespace

mpz_class square_class(const mpq_class& a) {
  if (a == 0) throw std::invalid_argument("square_class: zero input");
  return squarefree_part(a.get_num() * a.get_den());
}

DiagonalForm diagonal_form(const std::vector<mpq_class>& entries) {
  DiagonalForm f;
  f.diag.reserve(entries.size());
  for (const auto& e : entries) f.diag.push_back(square_class(e));
  return f;
}

DiagonalForm scale_form(const DiagonalForm& f, const mpq_class& c) {
  if (c == 0) throw std::invalid_argument("scale_form: zero scalar");
  DiagonalForm g;
  g.diag.reserve(f.diag.size());
  for (const auto& e : f.diag) g.diag.push_back(square_class(c * e));
  return g;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& p) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (p < 2) throw std::invalid_argument("hilbert_symbol: place must be a prime");
  mpz_class an = a.get_num(), ad = a.get_den();
  mpz_class bn = b.get_num(), bd = b.get_den();
  const long alpha = remove_p(an, p) - remove_p(ad, p);
  const long beta = remove_p(bn, p) - remove_p(bd, p);
  const bool aodd = (alpha % 2) != 0, bodd = (beta % 2) != 0;
  if (p == 2) {
    const unsigned long ua = unit_mod8(an, ad), ub = unit_mod8(bn, bd);
    const int eps_a = ua % 4 == 3, eps_b = ub % 4 == 3;
    const int om_a = ua == 3 || ua == 5, om_b = ub == 3 || ub == 5;
    const int e = eps_a * eps_b + (aodd ? om_b : 0) + (bodd ? om_a : 0);
    return e % 2 ? -1 : 1;
  }
  int res = 1;
  if (aodd && bodd && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) res = -res;
  if (bodd) res *= legendre_unit(an, ad, p);
  if (aodd) res *= legendre_unit(bn, bd, p);
  return res;
}

int hilbert_symbol_infinity(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  return (a < 0 && b < 0) ? -1 : 1;
}

bool is_local_square(const mpq_class& a, const mpz_class& p) {
  if (a == 0) throw std::invalid_argument("is_local_square: zero input");
  if (p < 2) throw std::invalid_argument("is_local_square: place must be a prime");
  mpz_class an = a.get_num(), ad = a.get_den();
  const long v = remove_p(an, p) - remove_p(ad, p);
  if (v % 2 != 0) return false;
  if (p == 2) return unit_mod8(an, ad) == 1;
  return legendre_unit(an, ad, p) == 1;
}

bool is_real_square(const mpq_class& a) {
  if (a == 0) throw std::invalid_argument("is_real_square: zero input");
  return a > 0;
}

DiagonalForm diagonalize(const Matrix<RationalField>& sym) {
  const std::size_t n = sym.rows;
  if (n == 0 || sym.cols != n)
    throw std::invalid_argument("diagonalize: matrix must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sym.at(i, j) != sym.at(j, i))
        throw std::invalid_argument("diagonalize: matrix not symmetric");

  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = sym.at(i, j);

  std::vector<mpq_class> d;
  d.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][i] != 0) { j = i; break; }
      if (j < n) {
        for (std::size_t t = 0; t < n; ++t) std::swap(a[k][t], a[j][t]);
        for (std::size_t t = 0; t < n; ++t) std::swap(a[t][k], a[t][j]);
      } else {
        for (std::size_t i = k + 1; i < n; ++i)
          if (a[k][i] != 0) { j = i; break; }
        if (j == n) throw SingularMatrixError("diagonalize: degenerate quadratic form");
        // No nonzero diagonal remains, so a[j][j] = 0 and the scaled row
        // addition makes a[k][k] = 2 c a[k][j] = 1 exactly.
        const mpq_class c = mpq_class(1) / (2 * a[k][j]);
        for (std::size_t t = 0; t < n; ++t) a[k][t] += c * a[j][t];
        for (std::size_t t = 0; t < n; ++t) a[t][k] += c * a[t][j];
      }
    }
    const mpq_class pivot = a[k][k];
    d.push_back(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class c = a[i][k] / pivot;
      for (std::size_t t = k; t < n; ++t) a[i][t] -= c * a[k][t];
      for (std::size_t t = k; t < n; ++t) a[t][i] -= c * a[t][k];
    }
  }
  return diagonal_form(d);
}

LocalInvariantProfile local_profile(const DiagonalForm& f) {
  const int n = f.rank();
  if (n == 0) throw std::invalid_argument("local_profile: empty form");
  std::vector<mpz_class> diag;
  diag.reserve(f.diag.size());
  for (const auto& e : f.diag) diag.push_back(square_class(mpq_class(e)));

  LocalInvariantProfile pr;
  pr.rank = n;
  mpz_class prod = 1;
  for (const auto& e : diag) {
    prod *= e;
    if (e > 0) ++pr.r_plus; else ++pr.r_minus;
  }
  pr.det = squarefree_part(prod);
  pr.disc = (static_cast<long>(n) * (n - 1) / 2) % 2 ? squarefree_part(-pr.det) : pr.det;

  std::set<mpz_class> places{mpz_class(2)};
  for (const auto& e : diag)
    for (const auto& [p, mult] : factorize(e)) {
      (void)mult;
      places.insert(p);
    }
  for (const auto& p : places) {
    int eps = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        eps *= hilbert_symbol(mpq_class(diag[i]), mpq_class(diag[j]), p);
    if (eps < 0) pr.hasse_minus.finite.push_back(p);
  }
  int eps_inf = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      eps_inf *= hilbert_symbol_infinity(mpq_class(diag[i]), mpq_class(diag[j]));
  pr.hasse_minus.infinity = eps_inf < 0;
  return pr;
}

AssumptionReport predicate_assumptions(const DiagonalForm& f, bool key_on_det) {
  const auto pr = local_profile(f);
  AssumptionReport rep;
  if (pr.rank == 10) {
    const bool disc_trivial = pr.disc == 1;
    const bool det_trivial = pr.det == 1;
    rep.readings_diverge = disc_trivial != det_trivial;
    const bool a = key_on_det ? det_trivial : disc_trivial;
    rep.assumption_a = a;
    rep.assumption_b = a && pr.hasse_minus.size() == 0;
    return rep;
  }
  if (pr.rank == 7) {
    const DiagonalForm g = scale_form(f, mpq_class(pr.det));
    const auto pg = local_profile(g);
    if (pg.det != 1)
      throw std::logic_error("predicate_assumptions: det-square rescale failed");
    const bool m8 = pg.hasse_minus.size() == 0;
    const bool real_rule = pg.r_minus == 0 || pg.r_minus == 4;
    if (m8 && !real_rule)
      throw std::logic_error("predicate_assumptions: Hasse and signature rules disagree");
    rep.clifford_m8 = m8;
    return rep;
  }
  throw std::invalid_argument("predicate_assumptions: rank must be 10 or 7");
}

const char* invariant_clash_name(InvariantClash c) {
  switch (c) {
    case InvariantClash::reciprocity_parity: return "reciprocity_parity";
    case InvariantClash::det_signature_sign: return "det_signature_sign";
    case InvariantClash::real_hasse_signature: return "real_hasse_signature";
    case InvariantClash::low_rank_obstruction: return "low_rank_obstruction";
  }
  return "unknown";
}

namespace {

// Hilbert symbol against t at a finite or the real place, for the solvers.
int symbol_at(const mpq_class& a, const mpq_class& t, const mpz_class& p) {
  return hilbert_symbol(a, t, p);
}

// Solves M x = rhs over F_2; rows are bitmasks over ncols columns. Returns a
// particular solution with free variables set to zero.
std::optional<std::vector<int>> solve_f2(std::vector<std::uint64_t> rows,
                                         const std::vector<int>& rhs, int ncols) {
  const std::size_t nr = rows.size();
  for (std::size_t i = 0; i < nr; ++i)
    if (rhs[i]) rows[i] |= std::uint64_t(1) << ncols;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < nr; ++c) {
    std::size_t sel = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (rows[i] >> c & 1) { sel = i; break; }
    if (sel == nr) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < nr; ++i)
      if (i != r && (rows[i] >> c & 1)) rows[i] ^= rows[r];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nr; ++i)
    if (rows[i] >> ncols & 1) return std::nullopt;
  std::vector<int> x(ncols, 0);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = static_cast<int>(rows[i] >> ncols & 1);
  return x;
}

// Finds a in Q^x with (a, t)_v = want_v on the given places, (a, t)_infty =
// want_inf, and (a, t)_v = +1 elsewhere. Requires the place list to contain 2
// and every prime of t, so that symbols outside it are controlled by the
// support of a; one auxiliary prime outside the list is adjoined when the
// in-list generators do not suffice (its own symbol is then forced to +1 by
// reciprocity, and verified).
std::optional<mpq_class> solve_symbol_pattern(const mpq_class& t,
                                              const std::vector<mpz_class>& places,
                                              const std::vector<int>& want,
                                              int want_inf) {
  auto attempt = [&](const std::vector<mpz_class>& gens) -> std::optional<mpq_class> {
    const int ncols = static_cast<int>(gens.size());
    if (ncols > 60) throw std::invalid_argument("solve_symbol_pattern: too many places");
    std::vector<std::uint64_t> rows;
    std::vector<int> rhs;
    for (std::size_t i = 0; i < places.size(); ++i) {
      std::uint64_t m = 0;
      for (int j = 0; j < ncols; ++j)
        if (symbol_at(mpq_class(gens[j]), t, places[i]) < 0) m |= std::uint64_t(1) << j;
      rows.push_back(m);
      rhs.push_back(want[i] < 0);
    }
    std::uint64_t m = 0;
    for (int j = 0; j < ncols; ++j)
      if (hilbert_symbol_infinity(mpq_class(gens[j]), t) < 0) m |= std::uint64_t(1) << j;
    rows.push_back(m);
    rhs.push_back(want_inf < 0);

    const auto x = solve_f2(std::move(rows), rhs, ncols);
    if (!x) return std::nullopt;
    mpz_class a = 1;
    for (int j = 0; j < ncols; ++j)
      if ((*x)[j]) a *= gens[j];
    const mpq_class aq(a);
    for (std::size_t i = 0; i < places.size(); ++i)
      if (symbol_at(aq, t, places[i]) != want[i]) return std::nullopt;
    if (hilbert_symbol_infinity(aq, t) != want_inf) return std::nullopt;
    for (int j = 0; j < ncols; ++j)
      if ((*x)[j] && gens[j] > 0 &&
          std::find(places.begin(), places.end(), gens[j]) == places.end() &&
          symbol_at(aq, t, gens[j]) != 1)
        return std::nullopt;
    return aq;
  };

  std::vector<mpz_class> gens{mpz_class(-1)};
  gens.insert(gens.end(), places.begin(), places.end());
  if (auto a = attempt(gens)) return a;
  mpz_class q = 2;
  for (int tries = 0; tries < 2500; ++tries) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (std::find(places.begin(), places.end(), q) != places.end()) continue;
    gens.push_back(q);
    if (auto a = attempt(gens)) return a;
    gens.pop_back();
  }
  return std::nullopt;
}

int binom2_parity(int s) { return (static_cast<long>(s) * (s - 1) / 2) % 2; }

bool place_in(const PlaceSet& s, const mpz_class& p) {
  return std::binary_search(s.finite.begin(), s.finite.end(), p);
}

// Builds <a, a d> with Hasse set exactly hasse; the place pool must contain 2,
// the primes of d, and hasse. The signature comes out right automatically:
// the symbol condition at the real place pins the signs of a and a d.
std::optional<DiagonalForm> try_build_rank2(const mpz_class& d, const PlaceSet& hasse,
                                            const std::vector<mpz_class>& pool) {
  std::vector<int> want;
  want.reserve(pool.size());
  for (const auto& p : pool) want.push_back(place_in(hasse, p) ? -1 : 1);
  const auto a = solve_symbol_pattern(mpq_class(-d), pool, want, hasse.infinity ? -1 : 1);
  if (!a) return std::nullopt;
  return diagonal_form({*a, mpq_class(*a * d)});
}

// Builds a rank 3 form by choosing a first entry whose rank 2 complement has
// consistent invariants, then delegating. The first entry ranges over signed
// products of pool primes, with one auxiliary prime adjoined if needed.
std::optional<DiagonalForm> try_build_rank3(const mpz_class& d, const PlaceSet& hasse,
                                            int r_plus, int r_minus,
                                            const std::vector<mpz_class>& pool) {
  auto attempt = [&](const std::vector<mpz_class>& gens,
                     const std::vector<mpz_class>& places) -> std::optional<DiagonalForm> {
    const std::size_t ngen = gens.size();
    if (ngen > 20) throw std::invalid_argument("try_build_rank3: too many places");
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << ngen); ++mask) {
      for (int sign = 0; sign < 2; ++sign) {
        if (sign == 0 && r_plus == 0) continue;
        if (sign == 1 && r_minus == 0) continue;
        mpz_class a1 = sign ? -1 : 1;
        for (std::size_t j = 0; j < ngen; ++j)
          if (mask >> j & 1) a1 *= gens[j];
        const mpq_class shift(a1 * d);
        const mpz_class d2 = square_class(shift);
        const int s2 = r_minus - sign;
        PlaceSet h2;
        for (const auto& p : places) {
          const int eps = (place_in(hasse, p) ? -1 : 1) *
                          hilbert_symbol(mpq_class(a1), shift, p);
          if (eps < 0) h2.finite.push_back(p);
        }
        const int eps_inf = (hasse.infinity ? -1 : 1) *
                            hilbert_symbol_infinity(mpq_class(a1), shift);
        h2.infinity = eps_inf < 0;
        if (eps_inf != (binom2_parity(s2) ? -1 : 1)) continue;
        bool obstructed = false;
        for (const auto& p : h2.finite)
          if (is_local_square(mpq_class(-d2), p)) { obstructed = true; break; }
        if (h2.infinity && is_real_square(mpq_class(-d2))) obstructed = true;
        if (obstructed) continue;
        if (auto f2 = try_build_rank2(d2, h2, places)) {
          DiagonalForm f;
          f.diag.push_back(square_class(mpq_class(a1)));
          f.diag.insert(f.diag.end(), f2->diag.begin(), f2->diag.end());
          return f;
        }
      }
    }
    return std::nullopt;
  };

  if (auto f = attempt(pool, pool)) return f;
  mpz_class q = 2;
  for (int tries = 0; tries < 80; ++tries) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (std::find(pool.begin(), pool.end(), q) != pool.end()) continue;
    std::vector<mpz_class> wide = pool;
    wide.insert(std::lower_bound(wide.begin(), wide.end(), q), q);
    if (auto f = attempt(wide, wide)) return f;
  }
  return std::nullopt;
}

}  // namespace

ConstructedForm construct_with_invariants(int rank, const mpq_class& det_class,
                                          const PlaceSet& hasse_minus,
                                          int r_plus, int r_minus) {
  if (rank < 1 || r_plus < 0 || r_minus < 0 || r_plus + r_minus != rank)
    throw std::invalid_argument("construct_with_invariants: bad rank or signature");
  if (det_class == 0)
    throw std::invalid_argument("construct_with_invariants: zero determinant class");
  check_prime_list(hasse_minus.finite, "construct_with_invariants");
  const mpz_class d = square_class(det_class);

  if (hasse_minus.size() % 2 != 0)
    return InconsistentInvariants{
        InvariantClash::reciprocity_parity,
        "Hilbert reciprocity forces an even number of places with eps = -1"};
  if (sgn(d) != (r_minus % 2 ? -1 : 1))
    return InconsistentInvariants{
        InvariantClash::det_signature_sign,
        "sign(det) must equal (-1)^{r_minus}"};
  if (hasse_minus.infinity != (binom2_parity(r_minus) != 0))
    return InconsistentInvariants{
        InvariantClash::real_hasse_signature,
        "eps at the real place must equal (-1)^{r_minus(r_minus-1)/2}"};
  if (rank == 1 && hasse_minus.size() != 0)
    return InconsistentInvariants{
        InvariantClash::low_rank_obstruction,
        "rank 1 forms have trivial Hasse invariant everywhere"};
  if (rank == 2) {
    for (const auto& p : hasse_minus.finite)
      if (is_local_square(mpq_class(-d), p))
        return InconsistentInvariants{
            InvariantClash::low_rank_obstruction,
            "rank 2 with -det a square in Q_p cannot have eps_p = -1"};
    if (hasse_minus.infinity && is_real_square(mpq_class(-d)))
      return InconsistentInvariants{
          InvariantClash::low_rank_obstruction,
          "rank 2 with -det > 0 cannot have eps = -1 at the real place"};
  }

  // Place pool: 2, the primes of det, and the requested Hasse places.
  std::set<mpz_class> pool_set{mpz_class(2)};
  for (const auto& [p, e] : factorize(d)) {
    (void)e;
    pool_set.insert(p);
  }
  for (const auto& p : hasse_minus.finite) pool_set.insert(p);
  const std::vector<mpz_class> pool(pool_set.begin(), pool_set.end());

  std::optional<DiagonalForm> built;
  if (rank == 1) {
    built = DiagonalForm{{d}};
  } else if (rank == 2) {
    built = try_build_rank2(d, hasse_minus, pool);
  } else {
    // Pad with unit squares down to a ternary corrector carrying the data.
    const int s3 = std::min(r_minus, 3), r3 = 3 - s3;
    const int s_pad = r_minus - s3, r_pad = r_plus - r3;
    const mpz_class d_pad = s_pad % 2 ? -1 : 1;
    const mpz_class d3 = square_class(mpq_class(d * d_pad));
    const int pad_pairs = binom2_parity(s_pad);
    PlaceSet h3;
    for (const auto& p : pool) {
      int eps = place_in(hasse_minus, p) ? -1 : 1;
      if (pad_pairs && p == 2) eps = -eps;  // (-1,-1)_v = -1 exactly at v = 2, infinity
      if (d_pad < 0) eps *= hilbert_symbol(mpq_class(-1), mpq_class(d3), p);
      if (eps < 0) h3.finite.push_back(p);
    }
    int eps3_inf = hasse_minus.infinity ? -1 : 1;
    if (pad_pairs) eps3_inf = -eps3_inf;
    if (d_pad < 0) eps3_inf *= hilbert_symbol_infinity(mpq_class(-1), mpq_class(d3));
    h3.infinity = eps3_inf < 0;
    if (eps3_inf != (binom2_parity(s3) ? -1 : 1))
      throw std::logic_error("construct_with_invariants: ternary reduction inconsistent");
    const auto f3 = try_build_rank3(d3, h3, r3, s3, pool);
    if (f3) {
      DiagonalForm f;
      for (int i = 0; i < r_pad; ++i) f.diag.push_back(1);
      for (int i = 0; i < s_pad; ++i) f.diag.push_back(-1);
      f.diag.insert(f.diag.end(), f3->diag.begin(), f3->diag.end());
      built = f;
    }
  }
  if (!built)
    throw std::logic_error("construct_with_invariants: search failed on consistent data");

  const auto pr = local_profile(*built);
  if (pr.rank != rank || pr.det != d || !(pr.hasse_minus == hasse_minus) ||
      pr.r_plus != r_plus || pr.r_minus != r_minus)
    throw std::logic_error("construct_with_invariants: postcondition violated");
  return *built;
}

SimilarityCount count_similarity_classes(FormFamily family, int r) {
  if (r < 1 || r > 12)
    throw std::invalid_argument("count_similarity_classes: r must be in 1..12");
  const bool tenfold = family == FormFamily::tenfold_o1;
  const std::vector<int> values = tenfold ? std::vector<int>{1, 5, 9}
                                          : std::vector<int>{0, 4};
  // Scaling by a totally flexible sign vector flips s to rank - s coordinate
  // wise; a flip is usable only when its image stays admissible. For rank 10
  // that pairs 1 with 9 and fixes 5; for rank 7 the image 9 - s never lands
  // in {0,4}, so the action is trivial.
  const int rank = tenfold ? 10 : 9;
  auto canonical = [&](int s) {
    const int t = rank - s;
    const bool ok = std::find(values.begin(), values.end(), t) != values.end();
    return ok ? std::min(s, t) : s;
  };

  SimilarityCount out;
  out.family = family;
  out.real_places = r;
  std::set<std::vector<int>> orbits;
  std::vector<std::size_t> odo(r, 0);
  mpz_class total = 0;
  while (true) {
    std::vector<int> canon(r);
    for (int i = 0; i < r; ++i) canon[i] = canonical(values[odo[i]]);
    orbits.insert(std::move(canon));
    ++total;
    int i = r - 1;
    while (i >= 0 && odo[i] + 1 == values.size()) odo[i--] = 0;
    if (i < 0) break;
    ++odo[i];
  }
  out.admissible_vectors = total;
  out.orbit_count = static_cast<long>(orbits.size());

  if (r == 1) {
    if (tenfold) {
      out.rational_representatives.push_back(
          diagonal_form({1, 1, 1, 1, 1, 1, 1, 1, 1, -1}));
      out.rational_representatives.push_back(
          diagonal_form({1, 1, 1, 1, 1, -1, -1, -1, -1, -1}));
    } else {
      out.rational_representatives.push_back(diagonal_form({1, 1, 1, 1, 1, 1, 1}));
      out.rational_representatives.push_back(diagonal_form({1, 1, 1, -1, -1, -1, -1}));
    }
  }
  return out;
}

QsFamilyReport qS_family(const std::vector<std::vector<mpz_class>>& sets) {
  QsFamilyReport rep;
  std::set<std::vector<mpz_class>> seen;
  for (const auto& raw : sets) {
    std::vector<mpz_class> s = raw;
    std::sort(s.begin(), s.end());
    check_prime_list(s, "qS_family");
    if (s.size() % 2 != 0)
      throw std::invalid_argument(
          "qS_family: set has odd cardinality; Hilbert reciprocity forces an even "
          "number of places with eps = -1");
    PlaceSet hs{s, false};
    auto res = construct_with_invariants(10, mpq_class(-1), hs, 9, 1);
    if (std::holds_alternative<InconsistentInvariants>(res))
      throw std::logic_error("qS_family: construction failed on an even set");
    QsFamilyEntry entry;
    entry.s = s;
    entry.form = std::get<DiagonalForm>(std::move(res));
    entry.profile = local_profile(entry.form);
    seen.insert(s);
    rep.entries.push_back(std::move(entry));
  }
  rep.pairwise_distinct = seen.size() == rep.entries.size();
  return rep;
}

}  // namespace spinten
