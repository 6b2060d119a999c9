#pragma once

// Split Clifford module conventions, fixed here once and used everywhere.
//
// V = k^10 carries q(x) = x1 x2 + x3 x4 + ... + x9 x10 with basis e_1..e_10;
// the polarized form b(x, y) = q(x+y) - q(x) - q(y) pairs e_{2k-1} with e_{2k}.
// Writing f_k = e_{2k}, half spinors are coordinate vectors on the 16 subsets
// of {1..5} of fixed parity, subset T standing for the wedge monomial
// f_{t1} ^ ... ^ f_{tm} (t1 < ... < tm). The canonical subset order is by
// cardinality, then lexicographic: even {}, 12, 13, ..., 45, 1234, ..., 2345;
// odd 1, ..., 5, 123, ..., 345, 12345.
//
// The generators act by gamma(e_{2k}) = wedge with f_k and gamma(e_{2k-1}) =
// contraction against f_k; both carry the sign (-1)^#{t in T : t < k}. This
// gives gamma(u)gamma(v) + gamma(v)gamma(u) = b(u, v) id, so the vacuum
// (xi_{} = 1) is annihilated exactly by span(e1, e3, e5, e7, e9).
//
// The pairing beta(t, s) = [alpha(t) ^ s]_top on odd x even, with alpha the
// degree reversal alpha(e_T) = (-1)^{|T|(|T|-1)/2} e_T, picks the coefficient
// of the top wedge f_1^...^f_5. It has one entry +-1 per row and column.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinten/linalg.hpp"

namespace spinten {

enum class Parity { even, odd };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

/// Canonical subset bases of the two half spinor spaces. Subsets of {1..5}
/// are bit masks with bit k-1 for element k.
struct SpinorBasis {
  static constexpr int kDim = 16;

  static const std::array<std::uint8_t, 16>& subsets(Parity p);
  /// Position of a subset within its parity list.
  static int index_of(std::uint8_t subset);
  static Parity parity_of(std::uint8_t subset);
  /// "{}", "{1,3}", ...
  static std::string label(std::uint8_t subset);
};

using IntMat16 = std::array<std::array<int, 16>, 16>;

/// gamma(e_j) restricted to the given source parity, as a 16x16 integer
/// matrix with entries in {-1, 0, 1}; j in [1, 10].
const IntMat16& gamma_matrix_int(int j, Parity from);

/// Pairing matrix beta[i][j] = beta(odd basis i, even basis j), entries +-1,
/// exactly one nonzero per row and column.
const IntMat16& pairing_matrix_int();

/// b(e_i, e_j) for i, j in [1, 10].
int bilinear_int(int i, int j);

template <class F>
struct HalfSpinor {
  Parity parity = Parity::even;
  std::vector<typename F::Elem> x;  // 16 coordinates, canonical subset order

  HalfSpinor() = default;
  HalfSpinor(Parity p, const F& f) : parity(p), x(16, f.zero()) {}
};

template <class F>
bool spinor_is_zero(const F& f, const HalfSpinor<F>& s) {
  for (const auto& v : s.x)
    if (!f.is_zero(v)) return false;
  return true;
}

/// gamma(e_j) s.
template <class F>
HalfSpinor<F> gamma_apply(const F& f, int j, const HalfSpinor<F>& s) {
  if (j < 1 || j > 10) throw std::invalid_argument("gamma_apply: generator index in [1,10]");
  const bool wedge = (j % 2 == 0);
  const int k = (j + 1) / 2;  // 1..5
  const std::uint8_t kbit = static_cast<std::uint8_t>(1u << (k - 1));
  const auto& src = SpinorBasis::subsets(s.parity);
  HalfSpinor<F> out(opposite(s.parity), f);
  for (int i = 0; i < 16; ++i) {
    if (f.is_zero(s.x[i])) continue;
    const std::uint8_t t = src[i];
    if (wedge ? (t & kbit) : !(t & kbit)) continue;
    const int below = __builtin_popcount(t & (kbit - 1));
    const auto v = (below % 2 == 0) ? s.x[i] : f.neg(s.x[i]);
    const std::uint8_t tt = t ^ kbit;
    auto& slot = out.x[SpinorBasis::index_of(tt)];
    slot = f.add(slot, v);
  }
  return out;
}

/// gamma(sum_j v_j e_j) s for a vector v in V.
template <class F>
HalfSpinor<F> gamma_apply_vector(const F& f, const std::array<typename F::Elem, 10>& v,
                                 const HalfSpinor<F>& s) {
  HalfSpinor<F> out(opposite(s.parity), f);
  for (int j = 1; j <= 10; ++j) {
    if (f.is_zero(v[j - 1])) continue;
    auto part = gamma_apply(f, j, s);
    for (int i = 0; i < 16; ++i) out.x[i] = f.add(out.x[i], f.mul(v[j - 1], part.x[i]));
  }
  return out;
}

/// beta(t, s) for t odd, s even.
template <class F>
typename F::Elem spinor_pairing(const F& f, const HalfSpinor<F>& t, const HalfSpinor<F>& s) {
  if (t.parity != Parity::odd || s.parity != Parity::even)
    throw std::invalid_argument("spinor_pairing: expects (odd, even) arguments");
  const auto& b = pairing_matrix_int();
  auto acc = f.zero();
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      if (b[i][j] == 0) continue;
      auto term = f.mul(t.x[i], s.x[j]);
      acc = b[i][j] > 0 ? f.add(acc, term) : f.sub(acc, term);
    }
  return acc;
}

/// q(v) and b(u, w) on coordinate vectors of V.
template <class F>
typename F::Elem quadratic_value(const F& f, const std::array<typename F::Elem, 10>& v) {
  auto acc = f.zero();
  for (int k = 0; k < 5; ++k) acc = f.add(acc, f.mul(v[2 * k], v[2 * k + 1]));
  return acc;
}

template <class F>
typename F::Elem bilinear_value(const F& f, const std::array<typename F::Elem, 10>& u,
                                const std::array<typename F::Elem, 10>& w) {
  auto acc = f.zero();
  for (int k = 0; k < 5; ++k) {
    acc = f.add(acc, f.mul(u[2 * k], w[2 * k + 1]));
    acc = f.add(acc, f.mul(u[2 * k + 1], w[2 * k]));
  }
  return acc;
}

/// Even pure spinor of a 5x5 skew matrix a: xi_{} = 1, xi_{kl} = a(k,l),
/// xi_T = Pf of the 4x4 block on T. The odd case applies gamma(translator)
/// to the even spinor; the translator must have invertible q.
template <class F>
HalfSpinor<F> pure_spinor(const F& f, const Matrix<F>& skew, Parity parity,
                          const std::array<typename F::Elem, 10>* translator = nullptr) {
  if (skew.rows != 5 || skew.cols != 5)
    throw std::invalid_argument("pure_spinor: 5x5 skew matrix required");
  for (std::size_t i = 0; i < 5; ++i) {
    if (!f.is_zero(skew.at(i, i))) throw std::invalid_argument("pure_spinor: nonzero diagonal");
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!f.eq(skew.at(i, j), f.neg(skew.at(j, i))))
        throw std::invalid_argument("pure_spinor: matrix is not skew symmetric");
  }
  HalfSpinor<F> s(Parity::even, f);
  const auto& evens = SpinorBasis::subsets(Parity::even);
  for (int i = 0; i < 16; ++i) {
    const std::uint8_t t = evens[i];
    const int size = __builtin_popcount(t);
    if (size == 0) {
      s.x[i] = f.one();
    } else if (size == 2) {
      int lo = __builtin_ctz(t), hi = 31 - __builtin_clz(static_cast<unsigned>(t));
      s.x[i] = skew.at(lo, hi);
    } else {
      std::array<std::size_t, 4> idx{};
      int n = 0;
      for (int k = 0; k < 5; ++k)
        if (t & (1u << k)) idx[n++] = k;
      s.x[i] = pfaffian4(f, skew, idx);
    }
  }
  if (parity == Parity::even) return s;
  std::array<typename F::Elem, 10> v;
  if (translator) {
    v = *translator;
  } else {
    for (auto& c : v) c = f.zero();
    v[0] = f.one();  // e1 + e2, q = 1
    v[1] = f.one();
  }
  if (f.is_zero(quadratic_value(f, v)))
    throw std::invalid_argument("pure_spinor: translator must have invertible q");
  return gamma_apply_vector(f, v, s);
}

/// Rows form a basis of the annihilator {v in V : gamma(v) s = 0},
/// in e_1..e_10 coordinates. s is pure iff the annihilator has dimension 5.
template <class F>
Matrix<F> annihilator_of(const F& f, const HalfSpinor<F>& s) {
  Matrix<F> m(16, 10, f);
  for (int j = 1; j <= 10; ++j) {
    auto img = gamma_apply(f, j, s);
    for (int i = 0; i < 16; ++i) m.at(i, j - 1) = img.x[i];
  }
  return kernel(f, m);
}

template <class F>
bool is_pure(const F& f, const HalfSpinor<F>& s) {
  if (spinor_is_zero(f, s)) return false;
  return annihilator_of(f, s).rows == 5;
}

/// Translate by the Clifford unit prod_{k in K} gamma(e_{2k-1} + e_{2k}),
/// applied in descending k. K is a bit mask over {1..5}; even |K| preserves
/// parity. These translates of the skew chart cover the spinor variety.
template <class F>
HalfSpinor<F> chart_translate(const F& f, std::uint8_t K, const HalfSpinor<F>& s) {
  HalfSpinor<F> out = s;
  for (int k = 5; k >= 1; --k) {
    if (!(K & (1u << (k - 1)))) continue;
    auto a = gamma_apply(f, 2 * k - 1, out);
    auto b = gamma_apply(f, 2 * k, out);
    for (int i = 0; i < 16; ++i) a.x[i] = f.add(a.x[i], b.x[i]);
    out = std::move(a);
  }
  return out;
}

}  // namespace spinten
