#include "spinten/zmodels.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "spinten/clifford.hpp"
#include "spinten/fields.hpp"
#include "spinten/variety.hpp"

namespace spinten {

namespace {

const QuadricSystemZ& even_system() {
  static const QuadricSystemZ sys = clifford_quadrics(Parity::even);
  return sys;
}

const QuadricSystemZ& odd_system() {
  static const QuadricSystemZ sys = clifford_quadrics(Parity::odd);
  return sys;
}

// Content-normalizes every nonzero row in place. Restriction produces raw
// integer coefficients; dividing out the content is what keeps reductions
// mod p faithful (a row p * Q would otherwise vanish spuriously).
void normalize_rows(QuadricSystemZ& sys) {
  for (auto& q : sys) {
    bool zero = true;
    for (const auto& c : q.c)
      if (sgn(c) != 0) {
        zero = false;
        break;
      }
    if (!zero) content_normalize(q.c);
  }
}

template <class F>
std::vector<Poly<F>> nonzero_polys(const F& f, const QuadricSystemZ& sys) {
  std::vector<Poly<F>> out;
  for (const auto& q : sys) {
    auto p = poly_from_quadric(f, q);
    if (!p.zero()) out.push_back(std::move(p));
  }
  return out;
}

// beta(t, v_k) = 0 as linear conditions on odd coordinates t: row k of the
// constraint matrix is B v_k.
ZMatrix pairing_constraints(const ZMatrix& rows, int index) {
  const auto& b = pairing_matrix_int();
  ZMatrix c(static_cast<std::size_t>(index), 16);
  for (int k = 0; k < index; ++k)
    for (int a = 0; a < 16; ++a) {
      mpz_class acc = 0;
      for (int j = 0; j < 16; ++j)
        if (b[a][j] != 0) acc += b[a][j] * rows.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
      c.at(static_cast<std::size_t>(k), static_cast<std::size_t>(a)) = acc;
    }
  return c;
}

template <class F>
typename F::Elem random_elem(const F& f, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, QuadExtField>) {
    const std::uint64_t p = f.characteristic();
    return {rng() % p, rng() % p};
  } else {
    return f.from_int(static_cast<long long>(rng() % f.characteristic()));
  }
}

template <class F>
std::vector<typename F::Elem> all_elems(const F& f) {
  std::vector<typename F::Elem> out;
  const std::uint64_t p = f.characteristic();
  if constexpr (std::is_same_v<F, QuadExtField>) {
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) out.push_back({a, b});
  } else {
    for (std::uint64_t a = 0; a < p; ++a) out.push_back(f.from_int(static_cast<long long>(a)));
  }
  return out;
}

// Smoothness audit at one ambient point of the odd variety: the 10-quadric
// Jacobian must have rank 5, and together with the index linear constraint
// rows rank 5 + index (transversality of the linear section at the point).
template <class F>
bool audit_ambient_point(const F& f, const ZMatrix& cons, int index,
                         const std::vector<typename F::Elem>& x) {
  const auto& odd = odd_system();
  for (const auto& q : odd)
    if (!f.is_zero(eval_quadric(f, q, x)))
      throw std::logic_error("audit_ambient_point: point off the odd variety");
  const auto jac = quadric_jacobian(f, odd, x);
  if (rank(f, jac) != 5) return false;
  Matrix<F> full(10 + static_cast<std::size_t>(index), 16, f);
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 16; ++c) full.at(r, c) = jac.at(r, c);
  for (int r = 0; r < index; ++r)
    for (std::size_t c = 0; c < 16; ++c)
      full.at(10 + static_cast<std::size_t>(r), c) =
          f.from_mpz(cons.at(static_cast<std::size_t>(r), c));
  return rank(f, full) == static_cast<std::size_t>(5 + index);
}

// Chart sampler for points of X_index over F (the base prime field or its
// quadratic extension). The odd chart t(a) = gamma(e1 + e2) applied to the
// even pure spinor of the skew matrix a is affine-linear in the first-row
// entries a_{1j}, so the index linear section conditions become a linear
// system in those four unknowns once the lower 4x4 block is fixed. For
// index = 5 the system is overdetermined: one block entry is scanned over
// the field until the 5x4 system turns consistent.
template <class F>
long audit_by_chart(const F& f, int index, const ZMatrix& cons, int want, std::uint64_t seed,
                    bool& all_smooth,
                    std::set<std::vector<typename F::Elem>>& seen) {
  using Elem = typename F::Elem;
  std::mt19937_64 rng(seed);
  std::array<std::array<Elem, 16>, 5> lin;
  for (int k = 0; k < index; ++k)
    for (int a = 0; a < 16; ++a)
      lin[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] =
          f.from_mpz(cons.at(static_cast<std::size_t>(k), static_cast<std::size_t>(a)));
  const auto dot = [&](int k, const HalfSpinor<F>& s) {
    auto acc = f.zero();
    for (int a = 0; a < 16; ++a)
      acc = f.add(acc, f.mul(lin[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)],
                             s.x[static_cast<std::size_t>(a)]));
    return acc;
  };
  // Lower block positions (row, col), 0-based, rows 1..4 of the skew matrix.
  constexpr std::array<std::pair<int, int>, 6> kBlock = {
      {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

  long audited = 0;
  const int max_attempts = want * 60 + 60;
  for (int attempt = 0; attempt < max_attempts && audited < want; ++attempt) {
    Matrix<F> skew(5, 5, f);
    const auto set_entry = [&](int r, int c, const Elem& v) {
      skew.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = v;
      skew.at(static_cast<std::size_t>(c), static_cast<std::size_t>(r)) = f.neg(v);
    };
    for (const auto& [r, c] : kBlock) set_entry(r, c, random_elem(f, rng));
    const int scan_pos = index == 5 ? static_cast<int>(rng() % 6) : -1;
    const std::vector<Elem> candidates =
        index == 5 ? all_elems(f) : std::vector<Elem>{f.zero()};

    for (const Elem& cand : candidates) {
      if (index == 5)
        set_entry(kBlock[static_cast<std::size_t>(scan_pos)].first,
                  kBlock[static_cast<std::size_t>(scan_pos)].second, cand);
      // Affine-linear expansion t(u) = s_0 + sum u_m (s_m - s_0) in the
      // first-row unknowns u = (a_{12}, .., a_{15}).
      std::array<HalfSpinor<F>, 5> sp;
      for (int m = 0; m <= 4; ++m) {
        for (int c = 1; c <= 4; ++c) set_entry(0, c, m == c ? f.one() : f.zero());
        sp[static_cast<std::size_t>(m)] = pure_spinor(f, skew, Parity::odd);
      }
      Matrix<F> aug(static_cast<std::size_t>(index), 5, f);
      for (int k = 0; k < index; ++k) {
        const auto base = dot(k, sp[0]);
        for (int m = 1; m <= 4; ++m)
          aug.at(static_cast<std::size_t>(k), static_cast<std::size_t>(m - 1)) =
              f.sub(dot(k, sp[static_cast<std::size_t>(m)]), base);
        aug.at(static_cast<std::size_t>(k), 4) = f.neg(base);
      }
      const auto pivots = rref(f, aug);
      if (!pivots.empty() && pivots.back() == 4) continue;  // inconsistent
      std::array<Elem, 4> u = {f.zero(), f.zero(), f.zero(), f.zero()};
      std::array<bool, 4> pivot_col = {false, false, false, false};
      for (auto c : pivots) pivot_col[c] = true;
      for (int c = 0; c < 4; ++c)
        if (!pivot_col[static_cast<std::size_t>(c)])
          u[static_cast<std::size_t>(c)] = random_elem(f, rng);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        auto val = aug.at(r, 4);
        for (int c = 0; c < 4; ++c)
          if (!pivot_col[static_cast<std::size_t>(c)])
            val = f.sub(val, f.mul(aug.at(r, static_cast<std::size_t>(c)),
                                   u[static_cast<std::size_t>(c)]));
        u[pivots[r]] = val;
      }
      for (int c = 1; c <= 4; ++c) set_entry(0, c, u[static_cast<std::size_t>(c - 1)]);
      const auto t = pure_spinor(f, skew, Parity::odd);
      for (int k = 0; k < index; ++k)
        if (!f.is_zero(dot(k, t)))
          throw std::logic_error("audit_by_chart: solved sample misses the section");

      std::vector<Elem> rep(t.x.begin(), t.x.end());
      std::size_t lead = 0;
      while (lead < rep.size() && f.is_zero(rep[lead])) ++lead;
      if (lead == rep.size()) throw std::logic_error("audit_by_chart: zero spinor");
      const auto scale = f.inv(rep[lead]);
      for (auto& v : rep) v = f.mul(scale, v);
      if (!seen.insert(rep).second) break;  // already audited
      all_smooth = audit_ambient_point(f, cons, index, rep) && all_smooth;
      ++audited;
      break;
    }
  }
  return audited;
}

struct ScanOutcome {
  long points = 0;
  bool all_smooth = true;
};

// Exhaustive walk of P^{n-1}(F_p) for p in {2, 3}: representatives have
// leading coordinate 1 and trailing digits running fastest. Every point of
// the section is audited in ambient coordinates.
ScanOutcome scan_section(const PrimeField& f, const QuadricSystemZ& restricted,
                         const ZMatrix& kernel_rows, const ZMatrix& cons, int index,
                         std::set<std::vector<PrimeField::Elem>>& seen) {
  const std::uint64_t p = f.characteristic();
  const int n = restricted.empty() ? 0 : restricted.front().n;
  struct TermI {
    int i, j;
    std::uint64_t c;
  };
  std::vector<std::vector<TermI>> terms;
  for (const auto& q : restricted) {
    std::vector<TermI> list;
    std::size_t k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j, ++k) {
        const std::uint64_t c = mpz_fdiv_ui(q.c[k].get_mpz_t(), static_cast<unsigned long>(p));
        if (c != 0) list.push_back({i, j, c});
      }
    if (!list.empty()) terms.push_back(std::move(list));
  }
  // Kernel basis mod p, row r = reduced coordinate r in ambient coordinates.
  std::vector<std::array<std::uint64_t, 16>> kmod(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int a = 0; a < 16; ++a)
      kmod[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] = mpz_fdiv_ui(
          kernel_rows.at(static_cast<std::size_t>(r), static_cast<std::size_t>(a)).get_mpz_t(),
          static_cast<unsigned long>(p));

  ScanOutcome out;
  std::vector<std::uint64_t> x(static_cast<std::size_t>(n), 0);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[static_cast<std::size_t>(lead)] = 1;
    const int free_from = lead + 1;
    while (true) {
      bool on = true;
      for (const auto& list : terms) {
        std::uint64_t acc = 0;
        for (const auto& t : list)
          acc += t.c * x[static_cast<std::size_t>(t.i)] * x[static_cast<std::size_t>(t.j)];
        if (acc % p != 0) {
          on = false;
          break;
        }
      }
      if (on) {
        ++out.points;
        std::vector<PrimeField::Elem> amb(16, 0);
        for (int r = lead; r < n; ++r) {
          if (x[static_cast<std::size_t>(r)] == 0) continue;
          for (int a = 0; a < 16; ++a)
            amb[static_cast<std::size_t>(a)] =
                f.add(amb[static_cast<std::size_t>(a)],
                      f.mul(x[static_cast<std::size_t>(r)],
                            kmod[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)]));
        }
        seen.insert(amb);
        out.all_smooth = audit_ambient_point(f, cons, index, amb) && out.all_smooth;
      }
      int pos = n - 1;
      while (pos >= free_from && x[static_cast<std::size_t>(pos)] == p - 1) {
        x[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < free_from) break;
      ++x[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

int recovered_rank_mod_p(const QuadricSystemZ& restricted, std::uint64_t p) {
  QuadricSystemZ live;
  for (const auto& q : restricted) {
    bool zero = true;
    for (const auto& c : q.c)
      if (sgn(c) != 0) {
        zero = false;
        break;
      }
    if (!zero) live.push_back(q);
  }
  const auto rec = recover_quadratic_form(live);
  const std::size_t m = rec.gram.size();
  const PrimeField f(p);
  Matrix<PrimeField> g(m, m, f);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      const mpq_class doubled = 2 * rec.gram[j][k];  // integral: lambda itself
      if (doubled.get_den() != 1)
        throw std::logic_error("recovered_rank_mod_p: non-integral doubled gram");
      g.at(j, k) = f.from_mpz(doubled.get_num());
    }
  // For odd p, rank(2 G) = rank(G); p = 2 is excluded by the caller.
  return static_cast<int>(rank(f, g));
}

}  // namespace

ZMatrix z_model_vectors() {
  // Subset masks carry bit k-1 for element k of {1..5}.
  constexpr std::uint8_t kRows[5][2] = {
      {0b00000, 0b11110},  // xi_{}   + xi_{2345}
      {0b00101, 0b11000},  // xi_{13} + xi_{45}
      {0b01001, 0b10010},  // xi_{14} + xi_{25}
      {0b10001, 0b00110},  // xi_{15} + xi_{23}
      {0b00011, 0b11101},  // xi_{12} + xi_{1345}
  };
  ZMatrix v(5, 16);
  for (int k = 0; k < 5; ++k)
    for (int t = 0; t < 2; ++t)
      v.at(static_cast<std::size_t>(k),
           static_cast<std::size_t>(SpinorBasis::index_of(kRows[k][t]))) = 1;
  return v;
}

EmptinessReport certify_emptiness(const ZMatrix& rows, int index) {
  if (index < 1 || index > 5)
    throw std::invalid_argument("certify_emptiness: index in [1, 5]");
  if (rows.cols != 16 || rows.rows < static_cast<std::size_t>(index))
    throw std::invalid_argument("certify_emptiness: need index rows of width 16");
  ZMatrix w(static_cast<std::size_t>(index), 16);
  for (int k = 0; k < index; ++k)
    for (int a = 0; a < 16; ++a)
      w.at(static_cast<std::size_t>(k), static_cast<std::size_t>(a)) =
          rows.at(static_cast<std::size_t>(k), static_cast<std::size_t>(a));

  auto sys = restrict_integral(even_system(), w);
  normalize_rows(sys);

  EmptinessReport rep;
  rep.index = index;
  const RationalField qq;
  const auto gb = buchberger(qq, nonzero_polys(qq, sys));
  rep.rational = projective_emptiness_certificate(gb, index);
  rep.denominator_primes = gb.denominator_primes;
  rep.empty = rep.rational.empty;

  std::set<mpz_class> primes;
  for (auto p : primes_upto(50)) primes.insert(mpz_class(static_cast<unsigned long>(p)));
  for (const auto& p : rep.denominator_primes) primes.insert(p);
  for (const auto& p : primes) {
    const PrimeField f(p.get_ui());
    const auto gbp = buchberger(f, nonzero_polys(f, sys));
    const auto cert = projective_emptiness_certificate(gbp, index);
    rep.modular.push_back({p, cert.empty, cert.witness_variable});
    rep.empty = rep.empty && cert.empty;
  }
  return rep;
}

EmptinessReport certify_emptiness(int index) {
  return certify_emptiness(z_model_vectors(), index);
}

SectionReport build_and_verify_section(int index, const mpz_class& p, int samples,
                                       std::uint64_t seed) {
  if (index < 1 || index > 5)
    throw std::invalid_argument("build_and_verify_section: index in [1, 5]");
  if (p < 2 || p > 13 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw std::invalid_argument("build_and_verify_section: p must be a prime <= 13");
  const std::uint64_t pu = p.get_ui();

  SectionReport rep;
  rep.index = index;
  rep.p = p;
  rep.field = "F" + std::to_string(pu);
  rep.expected_dim = 10 - index;

  const ZMatrix cons = pairing_constraints(z_model_vectors(), index);
  const PrimeField f(pu);
  {
    // Precondition: the pairing stays invertible mod p. It is a signed
    // permutation matrix, so this holds at every prime; checked anyway.
    const auto& b = pairing_matrix_int();
    Matrix<PrimeField> bm(16, 16, f);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) bm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f.from_int(b[i][j]);
    if (rank(f, bm) != 16)
      throw std::logic_error("build_and_verify_section: pairing singular mod p");
  }

  const ZMatrix kernel_rows = integer_kernel(cons);  // saturated, (16 - index) x 16
  const int n = 16 - index;
  if (static_cast<int>(kernel_rows.rows) != n)
    throw std::logic_error("build_and_verify_section: unexpected annihilator rank");
  auto restricted = restrict_integral(odd_system(), kernel_rows);
  normalize_rows(restricted);

  const auto gb = buchberger(f, nonzero_polys(f, restricted));
  const auto hs = hilbert_summary(gb, n);
  rep.proj_dim = hs.proj_dim;
  rep.degree = hs.degree;

  bool all_smooth = true;
  std::set<std::vector<PrimeField::Elem>> seen_base;
  if (pu == 2 || pu == 3) {
    const auto scan = scan_section(f, restricted, kernel_rows, cons, index, seen_base);
    rep.scanned_points = scan.points;
    rep.audited_base = scan.points;
    all_smooth = all_smooth && scan.all_smooth;
  } else {
    rep.audited_base =
        audit_by_chart(f, index, cons, samples, seed ^ (0x9e3779b97f4a7c15ULL * pu), all_smooth,
                       seen_base);
  }
  {
    const QuadExtField ext(pu);
    std::set<std::vector<QuadExtField::Elem>> seen_ext;
    rep.audited_ext = audit_by_chart(ext, index, cons, samples,
                                     seed ^ (0xbf58476d1ce4e5b9ULL * pu), all_smooth, seen_ext);
  }
  rep.all_smooth = all_smooth;

  if (pu != 2) {
    try {
      rep.recovered_rank = recovered_rank_mod_p(restricted, pu);
    } catch (const NotAMukaiSectionError&) {
      rep.recovered_rank = 0;  // relation space degenerate: an audit failure
    }
  }

  rep.pass = rep.proj_dim == rep.expected_dim && rep.all_smooth &&
             rep.audited_base + rep.audited_ext > 0 && (pu == 2 || rep.recovered_rank == 10);
  return rep;
}

DimensionAudit dimension_audit() {
  DimensionAudit a;
  a.dim_variety = 10;
  a.dim_spin_group = 10 * 9 / 2;      // dim so(10)
  a.dim_grassmannian = 4 * (16 - 4);  // dim Gr(4, S_-)
  a.dim_incidence = 46;               // the family of (model, spanning 4-space) pairs
  a.orbit_gap = a.dim_spin_group < a.dim_grassmannian;
  return a;
}

FourIndependenceResult f2_max_independent_set(int dim) {
  if (dim < 4 || dim > 6)
    throw std::invalid_argument("f2_max_independent_set: dim in [4, 6]");
  const int last = (1 << dim) - 1;
  FourIndependenceResult res;
  res.dim = dim;

  std::vector<std::uint8_t> cur;
  std::vector<std::uint8_t> best;
  // pair_mask bit v: v is the sum of two chosen vectors; triple_mask bit v:
  // of three. A candidate hitting either mask would close a dependent 3- or
  // 4-subset; within sets of size >= 4 these are exactly the dependencies.
  const auto dfs = [&](auto&& self, int start, std::uint64_t pair_mask,
                       std::uint64_t triple_mask) -> void {
    ++res.nodes;
    if (cur.size() > best.size()) best = cur;
    res.deepest = std::max(res.deepest, static_cast<int>(cur.size()));
    bool extended = false;
    for (int v = start; v <= last; ++v) {
      if (cur.size() + static_cast<std::size_t>(last - v + 1) <= best.size()) break;
      if ((pair_mask >> v) & 1) continue;
      if ((triple_mask >> v) & 1) continue;
      std::uint64_t np = pair_mask;
      std::uint64_t nt = triple_mask;
      for (auto s : cur) np |= std::uint64_t(1) << (s ^ v);
      for (std::uint64_t pm = pair_mask; pm;) {
        const int b = __builtin_ctzll(pm);
        pm &= pm - 1;
        nt |= std::uint64_t(1) << (b ^ v);
      }
      cur.push_back(static_cast<std::uint8_t>(v));
      self(self, v + 1, np, nt);
      cur.pop_back();
      extended = true;
    }
    if (!extended) ++res.dead_ends;
  };
  cur.push_back(1);  // e_1 pinned; see the header note on GL-transitivity
  dfs(dfs, 2, 0, 0);

  res.maximum = static_cast<int>(best.size());
  res.witness = std::move(best);
  return res;
}

SecantSample secant_sample(const Gf2Matrix& w) {
  if (w.rows != 6 || w.cols != 16)
    throw std::invalid_argument("secant_sample: 6 x 16 matrix over F_2 required");
  if (w.rank() != 6) throw std::invalid_argument("secant_sample: rows must be independent");
  const PrimeField f2(2);
  Matrix<PrimeField> wm(6, 16, f2);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 16; ++j) wm.at(i, j) = w.get(i, j) ? 1 : 0;

  std::vector<std::uint32_t> masks;  // quadric coefficients over the 21 pair slots
  std::vector<Poly<PrimeField>> gens;
  for (const auto& q : even_system()) {
    const auto coeffs = restrict_quadric(f2, q, wm);
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k]) mask |= std::uint32_t(1) << k;
    if (mask) masks.push_back(mask);
    auto poly = poly_from_coeffs(f2, 6, coeffs);
    if (!poly.zero()) gens.push_back(std::move(poly));
  }

  SecantSample out;
  const auto gb = buchberger(f2, gens);
  out.proj_dim = hilbert_summary(gb, 6).proj_dim;
  if (out.proj_dim > 0) return out;

  int count = 0;
  for (int y = 1; y < 64; ++y) {
    std::uint32_t monos = 0;
    std::size_t k = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j, ++k)
        if ((y >> i) & (y >> j) & 1) monos |= std::uint32_t(1) << k;
    bool on = true;
    for (const auto m : masks)
      if (__builtin_popcount(m & monos) & 1) {
        on = false;
        break;
      }
    if (on) ++count;
  }
  out.f2_points = count;
  return out;
}

SecantBoundReport f2_secant_bound_check(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("f2_secant_bound_check: trials >= 1");
  std::mt19937_64 rng(seed);
  SecantBoundReport rep;
  rep.trials = trials;
  rep.bound_holds = true;
  for (int t = 0; t < trials; ++t) {
    Gf2Matrix w(6, 16);
    do {
      for (std::size_t i = 0; i < 6; ++i) w.w[i] = rng() & 0xffffu;
    } while (w.rank() != 6);
    const auto sample = secant_sample(w);
    if (sample.proj_dim > 0) {
      ++rep.positive_dimensional;
      continue;
    }
    ++rep.zero_dimensional;
    ++rep.histogram[sample.f2_points];
    rep.max_points = std::max(rep.max_points, sample.f2_points);
    if (sample.f2_points > 8) rep.bound_holds = false;
  }
  return rep;
}

namespace {

// --- rational point extraction for zero-dimensional plane sections ---
//
// The restricted ideal is homogeneous with Hilbert polynomial the constant
// d = deg. In a stable degree s (quotient dimension d in degrees s and
// s + 1), multiplication by a linear form l acts (R/I)_s -> (R/I)_{s+1}; for
// l off the points it is invertible and A_j = L^{-1} M_{x_j} are commuting
// operators whose joint eigenvalues list the points in the chart l = 1.
// Eigenvalues are located mod a large prime and certified exactly over Q, so
// the heuristic part can only miss points, never invent them; a miss leaves
// fewer than twelve certified points and fails the verdict honestly.

using PU = std::vector<std::uint64_t>;  // coefficients ascending, trimmed

void pu_trim(PU& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pu_deg(const PU& a) { return static_cast<int>(a.size()) - 1; }

PU pu_mul(const PrimeField& f, const PU& a, const PU& b) {
  if (a.empty() || b.empty()) return {};
  PU c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  pu_trim(c);
  return c;
}

// Remainder modulo a monic divisor.
PU pu_mod(const PrimeField& f, PU a, const PU& m) {
  const int dm = pu_deg(m);
  while (pu_deg(a) >= dm) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - m.size();
    if (c != 0)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    a.pop_back();
    pu_trim(a);
  }
  return a;
}

PU pu_monic(const PrimeField& f, PU a) {
  pu_trim(a);
  if (a.empty()) return a;
  const auto inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

PU pu_gcd(const PrimeField& f, PU a, PU b) {
  while (!b.empty()) {
    a = pu_mod(f, std::move(a), pu_monic(f, b));
    std::swap(a, b);
  }
  return pu_monic(f, std::move(a));
}

PU pu_div_exact(const PrimeField& f, PU a, const PU& b) {
  // b monic, b | a.
  PU q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (pu_deg(a) >= pu_deg(b)) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    pu_trim(a);
  }
  pu_trim(q);
  return q;
}

PU pu_deriv(const PrimeField& f, const PU& a) {
  PU d;
  for (std::size_t i = 1; i < a.size(); ++i)
    d.push_back(f.mul(a[i], i % f.characteristic()));
  pu_trim(d);
  return d;
}

PU pu_powmod(const PrimeField& f, PU base, std::uint64_t e, const PU& m) {
  PU r = {1};
  base = pu_mod(f, std::move(base), m);
  while (e) {
    if (e & 1) r = pu_mod(f, pu_mul(f, r, base), m);
    base = pu_mod(f, pu_mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

// Roots of a monic squarefree product of linear factors, by equal-degree
// splitting with random shifts.
void pu_roots(const PrimeField& f, const PU& g, std::mt19937_64& rng,
              std::vector<std::uint64_t>& out) {
  const int d = pu_deg(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(g[0]));
    return;
  }
  const std::uint64_t p = f.characteristic();
  for (int tries = 0; tries < 96; ++tries) {
    const std::uint64_t a = rng() % p;
    PU shifted = {a, 1};  // x + a
    PU h = pu_powmod(f, shifted, (p - 1) / 2, g);
    if (h.empty())
      h = PU{f.neg(1)};
    else
      h[0] = f.sub(h[0], 1);
    pu_trim(h);
    PU split = pu_gcd(f, h, g);
    if (pu_deg(split) > 0 && pu_deg(split) < d) {
      pu_roots(f, split, rng, out);
      pu_roots(f, pu_div_exact(f, g, split), rng, out);
      return;
    }
  }
  // Splitting failed within bounds; the missing roots surface as missing
  // points downstream.
}

PU charpoly_mod(const PrimeField& f, const Matrix<PrimeField>& a) {
  // Faddeev-LeVerrier; valid for characteristic > n.
  const std::size_t n = a.rows;
  PU cs(n + 1, 0);
  cs[n] = 1;
  Matrix<PrimeField> nk = a;
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = f.add(tr, nk.at(i, i));
    const std::uint64_t ck = f.mul(f.inv(k % f.characteristic()), f.neg(tr));
    cs[n - k] = ck;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) nk.at(i, i) = f.add(nk.at(i, i), ck);
      nk = mat_mul(f, a, nk);
    }
  }
  return cs;
}

struct ModReduceFailure {};

std::uint64_t to_mod(const PrimeField& f, const mpq_class& q) {
  const auto den = f.from_mpz(q.get_den());
  if (den == 0) throw ModReduceFailure{};
  return f.mul(f.from_mpz(q.get_num()), f.inv(den));
}

std::vector<Mono> standard_monomials(const std::vector<Mono>& lts, int n, int deg) {
  std::vector<Mono> out;
  Mono m;
  const auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      m.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
      m.deg = static_cast<std::uint16_t>(deg);
      bool standard = true;
      for (const auto& lt : lts)
        if (mono_divides(lt, m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
      m.e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
      self(self, var + 1, remaining - e);
    }
    m.e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(a, b); }
};

// All rational points of the zero-dimensional section, as canonical
// projective representatives in restricted coordinates. May return fewer
// than degree points (the honest failure mode); never spurious ones.
std::vector<std::vector<mpq_class>> rational_points_zero_dim(
    const GroebnerResult<RationalField>& gb, const QuadricSystemZ& restricted, int n,
    const HilbertSummary& hs) {
  const RationalField qq;
  if (hs.degree.fits_sint_p() == 0) return {};
  const int target = static_cast<int>(hs.degree.get_si());
  std::vector<Mono> lts;
  for (const auto& pl : gb.basis) lts.push_back(pl.lm());

  // The Hilbert function equals its constant polynomial from degree
  // deg N - (n - 1) on, N the series numerator; both graded pieces used
  // below are therefore honest coordinate rings of the point set.
  int nt = static_cast<int>(hs.numerator.size());
  while (nt > 0 && sgn(hs.numerator[static_cast<std::size_t>(nt - 1)]) == 0) --nt;
  const int s = std::max(1, nt - n);
  const auto bs = standard_monomials(lts, n, s);
  const auto bs1 = standard_monomials(lts, n, s + 1);
  if (static_cast<int>(bs.size()) != target || static_cast<int>(bs1.size()) != target)
    throw std::logic_error("rational_points_zero_dim: Hilbert function mismatch");

  std::map<Mono, int, MonoLess> pos1;
  for (std::size_t i = 0; i < bs1.size(); ++i) pos1[bs1[i]] = static_cast<int>(i);

  const std::size_t m = static_cast<std::size_t>(target);
  std::vector<Matrix<RationalField>> mult(static_cast<std::size_t>(n),
                                          Matrix<RationalField>(m, m, qq));
  for (int j = 0; j < n; ++j)
    for (std::size_t col = 0; col < m; ++col) {
      Poly<RationalField> pr;
      Term<RationalField> tm;
      tm.m = bs[col];
      tm.m.e[static_cast<std::size_t>(j)] =
          static_cast<std::uint8_t>(tm.m.e[static_cast<std::size_t>(j)] + 1);
      tm.m.deg = static_cast<std::uint16_t>(tm.m.deg + 1);
      tm.c = qq.one();
      pr.t.push_back(tm);
      const auto nf = normal_form(qq, pr, gb.basis);
      for (const auto& term : nf.t) {
        const auto it = pos1.find(term.m);
        if (it == pos1.end())
          throw std::logic_error("rational_points_zero_dim: normal form left the basis");
        mult[static_cast<std::size_t>(j)].at(static_cast<std::size_t>(it->second), col) = term.c;
      }
    }

  std::mt19937_64 rng(0x12c0ffee5117ULL);
  // A linear form invertible on the quotient; coordinate forms first.
  std::optional<Matrix<RationalField>> linv;
  std::vector<mpq_class> lcoef(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < n + 12 && !linv; ++attempt) {
    for (int j = 0; j < n; ++j)
      lcoef[static_cast<std::size_t>(j)] =
          attempt < n ? (j == attempt ? 1 : 0)
                      : mpq_class(static_cast<long>(rng() % 19) - 9);
    Matrix<RationalField> l(m, m, qq);
    for (int j = 0; j < n; ++j) {
      if (sgn(lcoef[static_cast<std::size_t>(j)]) == 0) continue;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          l.at(r, c) = qq.add(l.at(r, c), qq.mul(lcoef[static_cast<std::size_t>(j)],
                                                 mult[static_cast<std::size_t>(j)].at(r, c)));
    }
    try {
      linv = inverse(qq, l);
    } catch (const SingularMatrixError&) {
    }
  }
  if (!linv) return {};

  std::vector<Matrix<RationalField>> act;
  for (int j = 0; j < n; ++j)
    act.push_back(mat_mul(qq, *linv, mult[static_cast<std::size_t>(j)]));

  const std::array<std::uint64_t, 2> big_primes = {2305843009213693951ULL,
                                                   2305843009213693967ULL};
  std::set<std::vector<mpq_class>> found;
  for (int utry = 0; utry < 8; ++utry) {
    std::vector<mpq_class> ucoef(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      ucoef[static_cast<std::size_t>(j)] =
          utry == 0 ? mpq_class(2 * j + 1) : mpq_class(static_cast<long>(rng() % 4001) - 2000);
    Matrix<RationalField> au(m, m, qq);
    for (int j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          au.at(r, c) = qq.add(au.at(r, c),
                               qq.mul(ucoef[static_cast<std::size_t>(j)],
                                      act[static_cast<std::size_t>(j)].at(r, c)));

    std::vector<std::uint64_t> roots;
    std::optional<PrimeField> fp;
    for (const auto bp : big_primes) {
      const PrimeField f(bp);
      try {
        Matrix<PrimeField> amod(m, m, f);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) amod.at(r, c) = to_mod(f, au.at(r, c));
        const PU chi = charpoly_mod(f, amod);
        // Linear factors, made squarefree; non-rational or repeated
        // eigenvalues drop out here and are caught exactly below.
        PU xp = pu_powmod(f, PU{0, 1}, bp, chi);
        if (xp.size() < 2) xp.resize(2, 0);
        xp[1] = f.sub(xp[1], 1);
        pu_trim(xp);
        PU lin = pu_gcd(f, xp, chi);
        const PU sq = pu_gcd(f, lin, pu_deriv(f, lin));
        if (pu_deg(sq) > 0) lin = pu_div_exact(f, lin, sq);
        pu_roots(f, lin, rng, roots);
        fp = f;
        break;
      } catch (const ModReduceFailure&) {
        roots.clear();
      }
    }
    if (!fp) return {};

    bool separating = true;
    std::set<std::vector<mpq_class>> pts;
    for (const auto r : roots) {
      const auto lam = rational_lift(r, fp->modulus());
      if (!lam) continue;
      Matrix<RationalField> et(m, m, qq);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) et.at(i, j) = au.at(j, i);
      for (std::size_t i = 0; i < m; ++i) et.at(i, i) = qq.sub(et.at(i, i), *lam);
      const auto ker = kernel(qq, et);
      if (ker.rows == 0) continue;  // mod-p mirage; certified away
      if (ker.rows > 1) {
        separating = false;
        break;
      }
      std::vector<mpq_class> v(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = ker.at(0, i);
      std::size_t lead = 0;
      while (lead < m && sgn(v[lead]) == 0) ++lead;

      std::vector<mpq_class> y(static_cast<std::size_t>(n));
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        std::vector<mpq_class> w(m, mpq_class(0));
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t rr = 0; rr < m; ++rr)
            w[c] += act[static_cast<std::size_t>(j)].at(rr, c) * v[rr];
        const mpq_class mu = w[lead] / v[lead];
        for (std::size_t c = 0; c < m && ok; ++c) ok = w[c] == mu * v[c];
        y[static_cast<std::size_t>(j)] = mu;
      }
      if (!ok) {
        separating = false;
        break;
      }
      std::size_t yl = 0;
      while (yl < y.size() && sgn(y[yl]) == 0) ++yl;
      if (yl == y.size()) continue;
      const mpq_class scale = 1 / y[yl];
      for (auto& c : y) c *= scale;
      bool on = true;
      for (const auto& q : restricted)
        if (sgn(eval_quadric(qq, q, y)) != 0) {
          on = false;
          break;
        }
      if (on) pts.insert(y);
    }
    if (separating) {
      found = std::move(pts);
      break;
    }
  }
  return std::vector<std::vector<mpq_class>>(found.begin(), found.end());
}

}  // namespace

const char* plane_verdict_name(PlaneVerdict v) {
  switch (v) {
    case PlaneVerdict::pass: return "pass";
    case PlaneVerdict::not_zero_dimensional: return "not-zero-dimensional";
    case PlaneVerdict::wrong_degree: return "wrong-degree";
    case PlaneVerdict::missing_rational_points: return "missing-rational-points";
  }
  return "unknown";
}

PlaneVerification verify_twelve_point_plane(const std::vector<std::vector<mpq_class>>& basis) {
  if (basis.size() != 6)
    throw std::invalid_argument("verify_twelve_point_plane: exactly 6 rows required");
  ZMatrix w(6, 16);
  for (std::size_t i = 0; i < 6; ++i) {
    if (basis[i].size() != 16)
      throw std::invalid_argument("verify_twelve_point_plane: rows must have 16 entries");
    const auto prim = primitive_integer_vector(basis[i]);
    for (std::size_t j = 0; j < 16; ++j) w.at(i, j) = prim[j];
  }
  {
    const RationalField qq;
    Matrix<RationalField> wm(6, 16, qq);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 16; ++j) wm.at(i, j) = mpq_class(w.at(i, j));
    if (rank(qq, wm) != 6)
      throw std::invalid_argument("verify_twelve_point_plane: rows must be independent over Q");
  }

  auto restricted = restrict_integral(even_system(), w);
  normalize_rows(restricted);

  PlaneVerification rep;
  const RationalField qq;
  const auto gb = buchberger(qq, nonzero_polys(qq, restricted));
  const auto hs = hilbert_summary(gb, 6);
  rep.proj_dim = hs.proj_dim;
  if (hs.proj_dim > 0) {
    rep.degree = hs.degree;
    rep.verdict = PlaneVerdict::not_zero_dimensional;
    return rep;
  }
  if (hs.proj_dim == -1) {
    rep.degree = 0;  // projectively empty section
    rep.verdict = PlaneVerdict::wrong_degree;
    return rep;
  }
  rep.degree = hs.degree;
  if (hs.degree != 12) {
    rep.verdict = PlaneVerdict::wrong_degree;
    return rep;
  }

  const auto pts = rational_points_zero_dim(gb, restricted, 6, hs);
  rep.all_smooth = true;
  std::set<std::vector<mpz_class>> ambient;
  for (const auto& y : pts) {
    std::vector<mpq_class> x(16, mpq_class(0));
    for (std::size_t r = 0; r < 6; ++r) {
      if (sgn(y[r]) == 0) continue;
      for (std::size_t a = 0; a < 16; ++a) x[a] += y[r] * w.at(r, a);
    }
    const auto prim = primitive_integer_vector(x);
    std::vector<mpq_class> xq(16);
    for (std::size_t a = 0; a < 16; ++a) xq[a] = mpq_class(prim[a]);
    const auto probe = probe_point(qq, even_system(), xq);
    if (!probe.on_variety)
      throw std::logic_error("verify_twelve_point_plane: extracted point off the variety");
    rep.all_smooth = rep.all_smooth && probe.tangent_rank == 5;
    ambient.insert(prim);
  }
  rep.points.assign(ambient.begin(), ambient.end());
  rep.verdict = rep.points.size() == 12 && rep.all_smooth
                    ? PlaneVerdict::pass
                    : PlaneVerdict::missing_rational_points;
  return rep;
}

}  // namespace spinten
