#pragma once
// Buchberger engine for homogeneous ideals under graded reverse lexicographic
// order, over any of the exact fields. Bases are reduced and monic, hence
// unique per (ideal, order); certificates derived from leading terms are
// therefore reproducible across runs and S-pair selection strategies.
//
// Rational runs record a denominator-prime superset: every prime dividing a
// leading coefficient at insertion time or any coefficient denominator of a
// stored basis element. Reductions replay verbatim over F_p whenever p avoids
// this set, which is what transfers a Q certificate to almost all primes.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "spinten/fields.hpp"
#include "spinten/quadrics.hpp"
#include "spinten/zarith.hpp"

namespace spinten {

inline constexpr int kMaxVars = 16;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t deg = 0;

  friend bool operator==(const Mono& a, const Mono& b) { return a.deg == b.deg && a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

// a strictly precedes b: lower total degree, or at equal degree the last
// unequal exponent is larger (reverse lexicographic on negated exponents).
inline bool grevlex_less(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  return false;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  m.deg = static_cast<std::uint16_t>(a.deg + b.deg);
  return m;
}

// Requires b | a.
inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  m.deg = static_cast<std::uint16_t>(a.deg - b.deg);
  return m;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    d += m.e[i];
  }
  m.deg = static_cast<std::uint16_t>(d);
  return m;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

template <class F>
struct Term {
  Mono m;
  typename F::Elem c;
};

/// Terms strictly descending in grevlex, no zero coefficients.
template <class F>
struct Poly {
  std::vector<Term<F>> t;

  bool zero() const { return t.empty(); }
  const Mono& lm() const { return t.front().m; }
  const typename F::Elem& lc() const { return t.front().c; }
  int degree() const { return t.empty() ? -1 : static_cast<int>(t.front().m.deg); }
};

template <class F>
Poly<F> make_poly(const F& f, std::vector<Term<F>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term<F>& a, const Term<F>& b) { return grevlex_less(b.m, a.m); });
  Poly<F> p;
  for (auto& tm : terms) {
    if (!p.t.empty() && p.t.back().m == tm.m)
      p.t.back().c = f.add(p.t.back().c, tm.c);
    else
      p.t.push_back(tm);
    if (!p.t.empty() && f.is_zero(p.t.back().c)) p.t.pop_back();
  }
  return p;
}

template <class F>
bool is_homogeneous(const Poly<F>& p) {
  for (const auto& tm : p.t)
    if (tm.m.deg != p.t.front().m.deg) return false;
  return true;
}

/// Upper triangular coefficients (row major, i <= j) of a quadric in n
/// variables, as a polynomial.
template <class F>
Poly<F> poly_from_coeffs(const F& f, int n, const std::vector<typename F::Elem>& c) {
  std::vector<Term<F>> terms;
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++k) {
      if (f.is_zero(c[k])) continue;
      Term<F> tm;
      tm.m.e[i] = static_cast<std::uint8_t>(tm.m.e[i] + 1);
      tm.m.e[j] = static_cast<std::uint8_t>(tm.m.e[j] + 1);
      tm.m.deg = 2;
      tm.c = c[k];
      terms.push_back(tm);
    }
  return make_poly(f, std::move(terms));
}

template <class F>
Poly<F> poly_from_quadric(const F& f, const QuadricZ& q) {
  std::vector<Term<F>> terms;
  std::size_t k = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = i; j < q.n; ++j, ++k) {
      if (sgn(q.c[k]) == 0) continue;
      Term<F> tm;
      tm.m.e[i] = static_cast<std::uint8_t>(tm.m.e[i] + 1);
      tm.m.e[j] = static_cast<std::uint8_t>(tm.m.e[j] + 1);
      tm.m.deg = 2;
      tm.c = f.from_mpz(q.c[k]);
      terms.push_back(tm);
    }
  return make_poly(f, std::move(terms));
}

/// dst -= c * x^m * src, merging sorted term lists.
template <class F>
void sub_scaled(const F& f, Poly<F>& dst, const typename F::Elem& c, const Mono& m,
                const Poly<F>& src) {
  if (f.is_zero(c)) return;
  std::vector<Term<F>> out;
  out.reserve(dst.t.size() + src.t.size());
  std::size_t i = 0, j = 0;
  while (i < dst.t.size() || j < src.t.size()) {
    if (j == src.t.size()) {
      out.push_back(dst.t[i++]);
      continue;
    }
    const Mono sm = mono_mul(src.t[j].m, m);
    if (i == dst.t.size() || grevlex_less(dst.t[i].m, sm)) {
      out.push_back({sm, f.neg(f.mul(c, src.t[j].c))});
      ++j;
    } else if (dst.t[i].m == sm) {
      auto v = f.sub(dst.t[i].c, f.mul(c, src.t[j].c));
      if (!f.is_zero(v)) out.push_back({sm, v});
      ++i;
      ++j;
    } else {
      out.push_back(dst.t[i++]);
    }
  }
  dst.t = std::move(out);
}

/// Full normal form modulo a list of monic polynomials.
template <class F>
Poly<F> normal_form(const F& f, Poly<F> p, const std::vector<Poly<F>>& basis) {
  Poly<F> rem;
  while (!p.zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.zero() || !mono_divides(g.lm(), p.lm())) continue;
      sub_scaled(f, p, p.lc(), mono_div(p.lm(), g.lm()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.t.push_back(p.t.front());
      p.t.erase(p.t.begin());
    }
  }
  return rem;
}

struct BuchbergerStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t coprime_skips = 0;
  std::uint64_t chain_skips = 0;
  std::uint64_t reductions_to_zero = 0;
};

enum class SelectionStrategy { normal, fifo };

template <class F>
struct GroebnerResult {
  std::vector<Poly<F>> basis;  // reduced: monic, interreduced, ascending leading terms
  BuchbergerStats stats;
  std::vector<mpz_class> denominator_primes;  // rational runs only, sorted
};

namespace detail {

inline void record_primes(const mpq_class& c, std::set<mpz_class>& out, bool numerator_too) {
  if (numerator_too && c.get_num() != 1 && c.get_num() != -1 && sgn(c.get_num()) != 0)
    for (const auto& [p, e] : factorize(c.get_num())) out.insert(p);
  if (c.get_den() != 1)
    for (const auto& [p, e] : factorize(c.get_den())) out.insert(p);
}

template <class F>
void note_insertion(const F&, const Poly<F>&, std::set<mpz_class>&) {}

inline void note_insertion(const RationalField&, const Poly<RationalField>& monic_ready,
                           std::set<mpz_class>& primes) {
  // Called with the element still carrying its pre-monic leading coefficient.
  record_primes(monic_ready.lc(), primes, true);
}

template <class F>
void note_coefficients(const F&, const Poly<F>&, std::set<mpz_class>&) {}

inline void note_coefficients(const RationalField&, const Poly<RationalField>& p,
                              std::set<mpz_class>& primes) {
  for (const auto& tm : p.t) record_primes(tm.c, primes, false);
}

}  // namespace detail

template <class F>
Poly<F> make_monic(const F& f, Poly<F> p) {
  if (p.zero()) return p;
  const auto inv = f.inv(p.lc());
  for (auto& tm : p.t) tm.c = f.mul(inv, tm.c);
  return p;
}

template <class F>
GroebnerResult<F> buchberger(const F& f, const std::vector<Poly<F>>& gens,
                             bool use_criteria = true,
                             SelectionStrategy strategy = SelectionStrategy::normal) {
  GroebnerResult<F> res;
  std::set<mpz_class> primes;
  std::vector<Poly<F>>& g = res.basis;
  for (const auto& p : gens) {
    if (p.zero()) continue;
    if (!is_homogeneous(p)) throw std::invalid_argument("buchberger: generators must be homogeneous");
    detail::note_insertion(f, p, primes);
    g.push_back(make_monic(f, p));
  }

  struct Pair {
    std::size_t i, j;
    Mono lcm;
    std::uint64_t stamp;
  };
  std::vector<Pair> pending;
  std::uint64_t stamp = 0;
  auto push_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      pending.push_back({i, upto, mono_lcm(g[i].lm(), g[upto].lm()), stamp++});
      ++res.stats.pairs_generated;
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

  auto in_pending = [&](std::size_t a, std::size_t b) {
    for (const auto& pr : pending)
      if ((pr.i == a && pr.j == b) || (pr.i == b && pr.j == a)) return true;
    return false;
  };

  while (!pending.empty()) {
    std::size_t sel = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const auto& a = pending[k];
      const auto& b = pending[sel];
      bool better;
      if (strategy == SelectionStrategy::normal)
        better = a.lcm.deg != b.lcm.deg ? a.lcm.deg < b.lcm.deg
                                        : (a.i != b.i ? a.i < b.i : a.j < b.j);
      else
        better = a.stamp < b.stamp;
      if (better) sel = k;
    }
    Pair pr = pending[sel];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(sel));

    if (use_criteria) {
      if (mono_coprime(g[pr.i].lm(), g[pr.j].lm())) {
        ++res.stats.coprime_skips;
        continue;
      }
      bool chained = false;
      for (std::size_t k = 0; k < g.size() && !chained; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (mono_divides(g[k].lm(), pr.lcm) && !in_pending(pr.i, k) && !in_pending(pr.j, k))
          chained = true;
      }
      if (chained) {
        ++res.stats.chain_skips;
        continue;
      }
    }

    // S-polynomial of monic g_i, g_j: x^{L-lm_i} g_i - x^{L-lm_j} g_j.
    Poly<F> s;
    const Mono mi = mono_div(pr.lcm, g[pr.i].lm());
    for (const auto& tm : g[pr.i].t) s.t.push_back({mono_mul(tm.m, mi), tm.c});
    sub_scaled(f, s, f.one(), mono_div(pr.lcm, g[pr.j].lm()), g[pr.j]);
    ++res.stats.pairs_reduced;
    Poly<F> h = normal_form(f, std::move(s), g);
    if (h.zero()) {
      ++res.stats.reductions_to_zero;
      continue;
    }
    detail::note_insertion(f, h, primes);
    g.push_back(make_monic(f, std::move(h)));
    push_pairs(g.size() - 1);
  }

  // Interreduce: drop elements whose leading term another leading term divides,
  // then fully reduce tails; the result is the unique reduced basis.
  std::vector<Poly<F>> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lm(), g[i].lm()) && !(g[j].lm() == g[i].lm() && j > i))
        redundant = true;
    }
    if (!redundant) kept.push_back(g[i]);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Poly<F>> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = make_monic(f, normal_form(f, kept[i], others));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Poly<F>& a, const Poly<F>& b) { return grevlex_less(a.lm(), b.lm()); });
  res.basis = std::move(kept);
  for (const auto& p : res.basis) detail::note_coefficients(f, p, primes);
  res.denominator_primes.assign(primes.begin(), primes.end());
  return res;
}

struct EmptinessCertificate {
  bool empty = false;
  // For variable j: (exponent m_j, index of the basis element with leading
  // term x_j^{m_j}); meaningful only when empty.
  std::vector<std::pair<int, int>> pure_powers;
  int witness_variable = -1;  // a variable with no pure power when not empty
};

EmptinessCertificate emptiness_from_leading_terms(const std::vector<Mono>& lts, int nvars);

template <class F>
EmptinessCertificate projective_emptiness_certificate(const GroebnerResult<F>& gb, int nvars) {
  std::vector<Mono> lts;
  for (const auto& p : gb.basis)
    if (!p.zero()) lts.push_back(p.lm());
  return emptiness_from_leading_terms(lts, nvars);
}

struct HilbertSummary {
  int proj_dim = -2;   // -1 means projectively empty
  mpz_class degree;    // multiplicity; total quotient dimension when empty
  std::vector<mpz_class> numerator;  // N(t) with series N(t)/(1-t)^nvars
};

HilbertSummary hilbert_dimension_degree(std::vector<Mono> leading_terms, int nvars);

template <class F>
HilbertSummary hilbert_summary(const GroebnerResult<F>& gb, int nvars) {
  std::vector<Mono> lts;
  for (const auto& p : gb.basis)
    if (!p.zero()) lts.push_back(p.lm());
  return hilbert_dimension_degree(std::move(lts), nvars);
}

}  // namespace spinten
