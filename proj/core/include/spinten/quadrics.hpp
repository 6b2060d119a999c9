#pragma once
// Integral quadric systems cutting out the spinor variety.
//
// A quadric in n variables is stored through its upper triangular integer
// coefficients, q(x) = sum_{i<=j} c(i,j) x_i x_j, listed in the pair order
// (0,0),(0,1),...,(0,n-1),(1,1),... Systems derived by different routes are
// compared as lattices: every constructor content-normalizes rows, and basis
// producers return Hermite normal form bases of saturated lattices, so equal
// systems are equal verbatim.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "spinten/clifford.hpp"
#include "spinten/linalg.hpp"
#include "spinten/zarith.hpp"

namespace spinten {

struct QuadricZ {
  int n = 0;
  std::vector<mpz_class> c;

  QuadricZ() = default;
  explicit QuadricZ(int vars)
      : n(vars), c(static_cast<std::size_t>(vars) * (vars + 1) / 2) {}

  // Index of the coefficient of x_i x_j, 0 <= i <= j < n.
  static std::size_t idx(int n, int i, int j) {
    return static_cast<std::size_t>(i) * n -
           static_cast<std::size_t>(i) * (i - 1) / 2 + static_cast<std::size_t>(j - i);
  }
  mpz_class& at(int i, int j) { return c[idx(n, i, j)]; }
  const mpz_class& at(int i, int j) const { return c[idx(n, i, j)]; }
};

using QuadricSystemZ = std::vector<QuadricZ>;

template <class F>
typename F::Elem eval_quadric(const F& f, const QuadricZ& q,
                              const std::vector<typename F::Elem>& x) {
  auto acc = f.zero();
  std::size_t k = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = i; j < q.n; ++j, ++k) {
      if (sgn(q.c[k]) == 0) continue;
      acc = f.add(acc, f.mul(f.from_mpz(q.c[k]), f.mul(x[i], x[j])));
    }
  return acc;
}

// One quadric per row, columns in QuadricZ pair order.
ZMatrix coefficient_matrix(const QuadricSystemZ& sys);

// The ten quadrics x -> beta(gamma(e_j)x, x) on the even half-spinors, or
// x -> beta(x, gamma(e_j)x) on the odd ones, for j = 1..10. Each row is
// content normalized.
QuadricSystemZ clifford_quadrics(Parity parity);

// Interpolates the lattice of integral quadrics vanishing on pure spinors by
// sampling the parametrization at random integer skew matrices. Returns the
// Hermite normal form basis of the saturated vanishing lattice; once enough
// samples accumulate this basis does not depend on the seed. Throws if the
// evaluation rank fails to stabilize within max_samples points.
QuadricSystemZ interpolate_quadrics(Parity parity, std::uint64_t seed,
                                    int max_samples = 320);

// Substitutes x = y W, W a k x n matrix whose rows span the subspace.
QuadricZ restrict_integral(const QuadricZ& q, const ZMatrix& w);
QuadricSystemZ restrict_integral(const QuadricSystemZ& sys, const ZMatrix& w);

template <class F>
std::vector<typename F::Elem> restrict_quadric(const F& f, const QuadricZ& q,
                                               const Matrix<F>& w) {
  if (static_cast<int>(w.cols) != q.n)
    throw std::invalid_argument("restrict_quadric: width mismatch");
  const int k = static_cast<int>(w.rows);
  std::vector<typename F::Elem> out(QuadricZ::idx(k, k - 1, k - 1) + 1, f.zero());
  std::size_t t = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = i; j < q.n; ++j, ++t) {
      if (sgn(q.c[t]) == 0) continue;
      const auto cf = f.from_mpz(q.c[t]);
      for (int r = 0; r < k; ++r) {
        out[QuadricZ::idx(k, r, r)] =
            f.add(out[QuadricZ::idx(k, r, r)], f.mul(cf, f.mul(w.at(r, i), w.at(r, j))));
        for (int s = r + 1; s < k; ++s) {
          auto cross = f.add(f.mul(w.at(r, i), w.at(s, j)), f.mul(w.at(s, i), w.at(r, j)));
          out[QuadricZ::idx(k, r, s)] =
              f.add(out[QuadricZ::idx(k, r, s)], f.mul(cf, cross));
        }
      }
    }
  return out;
}

struct NotAMukaiSectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The quadratic relation sum_{j<=k} lambda_{jk} Q_j Q_k = 0 among pairwise
// products of the system, required to be unique up to scale; lambda is the
// primitive canonical generator. gram is the symmetric matrix of the
// corresponding quadratic form on the span of the system, gram[j][k] =
// lambda_{jk} / 2 off the diagonal. Throws NotAMukaiSectionError when the
// relation space does not have dimension exactly one.
struct QuadraticFormRecovery {
  std::vector<mpz_class> lambda;
  std::vector<std::vector<mpq_class>> gram;
};
QuadraticFormRecovery recover_quadratic_form(const QuadricSystemZ& sys);

}  // namespace spinten
