#include "spinten/groebner.hpp"

#include <algorithm>

namespace spinten {

EmptinessCertificate emptiness_from_leading_terms(const std::vector<Mono>& lts, int nvars) {
  EmptinessCertificate cert;
  cert.pure_powers.assign(static_cast<std::size_t>(nvars), {-1, -1});
  for (int v = 0; v < nvars; ++v) {
    int best = -1, best_exp = 0;
    for (std::size_t k = 0; k < lts.size(); ++k) {
      const Mono& m = lts[k];
      if (m.e[v] == 0 || m.e[v] != m.deg) continue;
      if (best == -1 || m.e[v] < best_exp) {
        best = static_cast<int>(k);
        best_exp = m.e[v];
      }
    }
    if (best == -1) {
      cert.empty = false;
      cert.witness_variable = v;
      cert.pure_powers.clear();
      return cert;
    }
    cert.pure_powers[static_cast<std::size_t>(v)] = {best_exp, best};
  }
  cert.empty = true;
  return cert;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficient of t^k at index k

void zp_trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class zp_eval1(const ZPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

void minimalize(std::vector<Mono>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Mono& a, const Mono& b) { return a.deg < b.deg; });
  std::vector<Mono> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (mono_divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for the monomial
// ideal I, by the standard pivot recursion on the exact sequence
// 0 -> R/(I:x)(-1) -> R/I -> R/(I+(x)) -> 0.
ZPoly hilbert_numerator(std::vector<Mono> gens) {
  minimalize(gens);
  if (gens.empty()) return {mpz_class(1)};
  if (gens.front().deg == 0) return {};  // unit ideal, zero module

  bool all_pure = true;
  for (const auto& m : gens) {
    int support = 0;
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[v] != 0) ++support;
    if (support > 1) {
      all_pure = false;
      break;
    }
  }
  if (all_pure) {
    // Minimal pure powers sit on distinct variables: N = prod (1 - t^{a_i}).
    ZPoly n{mpz_class(1)};
    for (const auto& m : gens) {
      ZPoly next(n.size() + m.deg, mpz_class(0));
      for (std::size_t i = 0; i < n.size(); ++i) {
        next[i] += n[i];
        next[i + m.deg] -= n[i];
      }
      n = std::move(next);
    }
    zp_trim(n);
    return n;
  }

  // Pivot on the most frequent variable of the impure generators. Restricting
  // to impure ones makes both branches strictly smaller: I + (x) replaces at
  // least one generator of degree >= 2 by x, and I : x drops a degree.
  std::array<int, kMaxVars> freq{};
  for (const auto& m : gens) {
    int support = 0;
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[v] != 0) ++support;
    if (support < 2) continue;
    for (int v = 0; v < kMaxVars; ++v)
      if (m.e[v] != 0) ++freq[v];
  }
  int pivot = 0, best = 0;
  for (int v = 0; v < kMaxVars; ++v)
    if (freq[v] > best) {
      best = freq[v];
      pivot = v;
    }

  std::vector<Mono> plus;
  Mono xv;
  xv.e[pivot] = 1;
  xv.deg = 1;
  plus.push_back(xv);
  for (const auto& m : gens)
    if (m.e[pivot] == 0) plus.push_back(m);

  std::vector<Mono> colon;
  colon.reserve(gens.size());
  for (Mono m : gens) {
    if (m.e[pivot] > 0) {
      --m.e[pivot];
      --m.deg;
    }
    colon.push_back(m);
  }

  ZPoly a = hilbert_numerator(std::move(plus));
  ZPoly b = hilbert_numerator(std::move(colon));
  ZPoly out(std::max(a.size(), b.size() + 1), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
  zp_trim(out);
  return out;
}

}  // namespace

HilbertSummary hilbert_dimension_degree(std::vector<Mono> leading_terms, int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw std::invalid_argument("hilbert_dimension_degree: bad variable count");
  for (const auto& m : leading_terms)
    for (int v = nvars; v < kMaxVars; ++v)
      if (m.e[v] != 0) throw std::invalid_argument("hilbert_dimension_degree: term beyond nvars");

  ZPoly n = hilbert_numerator(std::move(leading_terms));
  HilbertSummary out;
  out.numerator = n;
  zp_trim(n);
  if (n.empty()) {  // zero quotient: the unit ideal
    out.proj_dim = -1;
    out.degree = 0;
    return out;
  }
  int k = 0;
  while (zp_eval1(n) == 0) {
    // n is divisible by (1 - t); synthetic division q_i = n_i + q_{i-1}.
    ZPoly q(n.size() - 1, mpz_class(0));
    mpz_class prev = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      q[i] = n[i] + prev;
      prev = q[i];
    }
    n = std::move(q);
    zp_trim(n);
    ++k;
    if (k > nvars) throw std::logic_error("hilbert_dimension_degree: pole order exceeds nvars");
  }
  const int krull = nvars - k;
  out.proj_dim = krull - 1;
  out.degree = zp_eval1(n);
  return out;
}

}  // namespace spinten
