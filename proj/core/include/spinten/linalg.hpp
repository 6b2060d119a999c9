#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spinten {

struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Dense matrix over a field object F, row major.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;

  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const F& f) : rows(r), cols(c), a(r * c, f.zero()) {}

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static Matrix identity(std::size_t n, const F& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.a.resize(m.a.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.a[j * m.rows + i] = m.at(i, j);
  return t;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& x, const Matrix<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Matrix<F> z(x.rows, y.cols, f);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const auto& xv = x.at(i, k);
      if (f.is_zero(xv)) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return z;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Matrix<F>& m,
                                      const std::vector<typename F::Elem>& v) {
  if (m.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<typename F::Elem> out(m.rows, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!f.is_zero(m.at(i, j))) out[i] = f.add(out[i], f.mul(m.at(i, j), v[j]));
  return out;
}

/// In-place reduced row echelon form; returns the pivot columns in order.
/// Deterministic: the pivot is the first nonzero entry in the column.
template <class F>
std::vector<std::size_t> rref(const F& f, Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && f.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const auto piv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(piv, m.at(r, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      const auto q = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(q, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<F> m) {
  return rref(f, m).size();
}

/// Rows span the right kernel {x : m x = 0}; canonical rref-based basis with
/// one row per free column, ascending.
template <class F>
Matrix<F> kernel(const F& f, Matrix<F> m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<F> k(m.cols - pivots.size(), m.cols, f);
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    k.at(row, c) = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k.at(row, pivots[i]) = f.neg(m.at(i, c));
    ++row;
  }
  return k;
}

template <class F>
typename F::Elem det(const F& f, Matrix<F> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
  auto d = f.one();
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t sel = c;
    while (sel < m.rows && f.is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) return f.zero();
    if (sel != c) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(c, c));
    const auto piv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, c))) continue;
      const auto q = f.mul(piv, m.at(i, c));
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(q, m.at(c, j)));
    }
  }
  return d;
}

template <class F>
Matrix<F> inverse(const F& f, const Matrix<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
  Matrix<F> aug(m.rows, 2 * m.cols, f);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = f.one();
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() != m.rows || pivots.back() >= m.cols)
    throw SingularMatrixError("inverse: singular matrix");
  Matrix<F> inv(m.rows, m.cols, f);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

/// Pfaffian of the 4x4 principal skew block of m on ascending indices idx:
/// a(i,j)a(k,l) - a(i,k)a(j,l) + a(i,l)a(j,k).
template <class F>
typename F::Elem pfaffian4(const F& f, const Matrix<F>& m, const std::array<std::size_t, 4>& idx) {
  const auto [i, j, k, l] = idx;
  auto t1 = f.mul(m.at(i, j), m.at(k, l));
  auto t2 = f.mul(m.at(i, k), m.at(j, l));
  auto t3 = f.mul(m.at(i, l), m.at(j, k));
  return f.add(f.sub(t1, t2), t3);
}

/// Bit-packed matrix over F_2, one row per run of 64 bit words.
struct Gf2Matrix {
  std::size_t rows = 0, cols = 0, stride = 0;
  std::vector<std::uint64_t> w;

  Gf2Matrix() = default;
  Gf2Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), stride((c + 63) / 64), w(r * stride, 0) {}

  bool get(std::size_t i, std::size_t j) const {
    return (w[i * stride + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool b) {
    auto& word = w[i * stride + j / 64];
    const std::uint64_t mask = std::uint64_t(1) << (j % 64);
    if (b)
      word |= mask;
    else
      word &= ~mask;
  }
  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < stride; ++k) w[dst * stride + k] ^= w[src * stride + k];
  }

  std::size_t rank() const {
    Gf2Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
      std::size_t sel = r;
      while (sel < m.rows && !m.get(sel, c)) ++sel;
      if (sel == m.rows) continue;
      if (sel != r)
        for (std::size_t k = 0; k < m.stride; ++k)
          std::swap(m.w[sel * m.stride + k], m.w[r * m.stride + k]);
      for (std::size_t i = 0; i < m.rows; ++i)
        if (i != r && m.get(i, c)) m.xor_row(i, r);
      ++r;
    }
    return r;
  }
};

}  // namespace spinten
