#include "spinten/quadrics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>

#include "spinten/fields.hpp"

namespace spinten {

ZMatrix coefficient_matrix(const QuadricSystemZ& sys) {
  if (sys.empty()) return {};
  ZMatrix m(sys.size(), sys[0].c.size());
  for (std::size_t r = 0; r < sys.size(); ++r) {
    if (sys[r].c.size() != sys[0].c.size())
      throw std::invalid_argument("coefficient_matrix: mixed variable counts");
    for (std::size_t c = 0; c < sys[r].c.size(); ++c) m.at(r, c) = sys[r].c[c];
  }
  return m;
}

QuadricSystemZ clifford_quadrics(Parity parity) {
  const auto& b = pairing_matrix_int();
  QuadricSystemZ out;
  out.reserve(10);
  for (int j = 1; j <= 10; ++j) {
    const auto& g = gamma_matrix_int(j, parity);
    // s^T A s with A = G^T B on the even side, A = B G on the odd side.
    std::array<std::array<long, 16>, 16> av{};
    for (int t = 0; t < 16; ++t)
      for (int u = 0; u < 16; ++u) {
        long acc = 0;
        for (int r = 0; r < 16; ++r)
          acc += parity == Parity::even ? static_cast<long>(g[r][t]) * b[r][u]
                                        : static_cast<long>(b[t][r]) * g[r][u];
        av[t][u] = acc;
      }
    QuadricZ q(16);
    for (int t = 0; t < 16; ++t) {
      q.at(t, t) = av[t][t];
      for (int u = t + 1; u < 16; ++u) q.at(t, u) = av[t][u] + av[u][t];
    }
    content_normalize(q.c);
    out.push_back(std::move(q));
  }
  return out;
}

QuadricSystemZ interpolate_quadrics(Parity parity, std::uint64_t seed, int max_samples) {
  constexpr int kCols = 136;        // quadratic monomials in 16 variables
  constexpr int kQuadricCount = 10; // corank of the evaluation matrix
  const RationalField fq;
  std::mt19937_64 rng(seed);
  std::vector<mpz_class> entries;
  int nrows = 0;
  const PrimeField fp(2305843009213693951ULL);  // rank probe only
  std::size_t probe_rank = 0;
  while (nrows < max_samples && probe_rank != kCols - kQuadricCount) {
    for (int batch = 0; batch < 40 && nrows < max_samples; ++batch, ++nrows) {
      Matrix<RationalField> skew(5, 5, fq);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
          const long v = static_cast<long>(rng() % 7) - 3;
          skew.at(i, j) = v;
          skew.at(j, i) = -v;
        }
      const auto s = pure_spinor(fq, skew, parity);
      std::array<mpz_class, 16> x;
      for (int i = 0; i < 16; ++i) {
        if (s.x[i].get_den() != 1)
          throw std::logic_error("interpolate_quadrics: non-integral sample");
        x[i] = s.x[i].get_num();
      }
      for (int i = 0; i < 16; ++i)
        for (int j = i; j < 16; ++j) entries.push_back(x[i] * x[j]);
    }
    Matrix<PrimeField> probe(static_cast<std::size_t>(nrows), kCols, fp);
    for (std::size_t t = 0; t < entries.size(); ++t) probe.a[t] = fp.from_mpz(entries[t]);
    probe_rank = rank(fp, probe);
  }
  if (probe_rank != kCols - kQuadricCount)
    throw std::runtime_error("interpolate_quadrics: evaluation rank did not stabilize");
  ZMatrix e(static_cast<std::size_t>(nrows), kCols);
  e.a = std::move(entries);
  const ZMatrix ker = integer_kernel_fast(e);
  QuadricSystemZ out;
  out.reserve(ker.rows);
  for (std::size_t r = 0; r < ker.rows; ++r) {
    QuadricZ q(16);
    q.c = ker.row(r);
    out.push_back(std::move(q));
  }
  return out;
}

QuadricZ restrict_integral(const QuadricZ& q, const ZMatrix& w) {
  if (static_cast<int>(w.cols) != q.n)
    throw std::invalid_argument("restrict_integral: width mismatch");
  const int k = static_cast<int>(w.rows);
  QuadricZ out(k);
  std::size_t t = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = i; j < q.n; ++j, ++t) {
      if (sgn(q.c[t]) == 0) continue;
      for (int r = 0; r < k; ++r) {
        out.at(r, r) += q.c[t] * w.at(r, i) * w.at(r, j);
        for (int s = r + 1; s < k; ++s)
          out.at(r, s) += q.c[t] * (w.at(r, i) * w.at(s, j) + w.at(s, i) * w.at(r, j));
      }
    }
  return out;
}

QuadricSystemZ restrict_integral(const QuadricSystemZ& sys, const ZMatrix& w) {
  QuadricSystemZ out;
  out.reserve(sys.size());
  for (const auto& q : sys) out.push_back(restrict_integral(q, w));
  return out;
}

QuadraticFormRecovery recover_quadratic_form(const QuadricSystemZ& sys) {
  if (sys.empty()) throw std::invalid_argument("recover_quadratic_form: empty system");
  const int m = static_cast<int>(sys.size());
  const int n = sys[0].n;
  const std::size_t pairs = static_cast<std::size_t>(m) * (m + 1) / 2;
  // Row per degree four monomial, column per product Q_j Q_k with j <= k.
  std::map<std::array<int, 4>, std::vector<mpz_class>> rows;
  std::size_t pair_idx = 0;
  for (int j = 0; j < m; ++j)
    for (int k = j; k < m; ++k, ++pair_idx) {
      std::size_t t1 = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b, ++t1) {
          if (sgn(sys[j].c[t1]) == 0) continue;
          std::size_t t2 = 0;
          for (int c = 0; c < n; ++c)
            for (int d = c; d < n; ++d, ++t2) {
              if (sgn(sys[k].c[t2]) == 0) continue;
              std::array<int, 4> key{a, b, c, d};
              std::sort(key.begin(), key.end());
              auto it = rows.find(key);
              if (it == rows.end())
                it = rows.emplace(key, std::vector<mpz_class>(pairs)).first;
              it->second[pair_idx] += sys[j].c[t1] * sys[k].c[t2];
            }
        }
    }
  ZMatrix p(rows.size(), pairs);
  std::size_t r = 0;
  for (const auto& [key, vals] : rows) {
    for (std::size_t c = 0; c < pairs; ++c) p.at(r, c) = vals[c];
    ++r;
  }
  const ZMatrix ker = integer_kernel_fast(p);
  if (ker.rows != 1)
    throw NotAMukaiSectionError("quadratic relation space has dimension " +
                                std::to_string(ker.rows) + ", expected 1");
  QuadraticFormRecovery out;
  out.lambda = ker.row(0);
  out.gram.assign(m, std::vector<mpq_class>(m));
  pair_idx = 0;
  for (int j = 0; j < m; ++j)
    for (int k = j; k < m; ++k, ++pair_idx) {
      if (j == k) {
        out.gram[j][j] = mpq_class(out.lambda[pair_idx]);
      } else {
        mpq_class half(out.lambda[pair_idx], 2);
        half.canonicalize();
        out.gram[j][k] = out.gram[k][j] = half;
      }
    }
  return out;
}

}  // namespace spinten
