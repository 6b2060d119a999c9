#include "spinten/variety.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace spinten {

namespace {

// Symmetric gradient tables mod p: row i of the Jacobian of quadric r at x is
// m[r] x with m[r][i][i] = 2 c_ii and m[r][i][j] = c_ij.
struct GradientTables {
  int n = 0;
  std::vector<std::array<std::array<std::uint64_t, 16>, 16>> m;
};

GradientTables gradient_tables(const QuadricSystemZ& sys, std::uint64_t p) {
  GradientTables g;
  g.n = sys.empty() ? 0 : sys.front().n;
  for (const auto& q : sys) {
    std::array<std::array<std::uint64_t, 16>, 16> t{};
    for (int i = 0; i < g.n; ++i) {
      t[i][i] = mpz_fdiv_ui(mpz_class(2 * q.at(i, i)).get_mpz_t(), static_cast<unsigned long>(p));
      for (int j = i + 1; j < g.n; ++j) {
        const auto c = mpz_fdiv_ui(q.at(i, j).get_mpz_t(), static_cast<unsigned long>(p));
        t[i][j] = c;
        t[j][i] = c;
      }
    }
    g.m.push_back(t);
  }
  return g;
}

int jacobian_rank_at(const PrimeField& f, const GradientTables& g,
                     const std::array<std::uint64_t, 16>& x) {
  Matrix<PrimeField> jac(g.m.size(), static_cast<std::size_t>(g.n), f);
  for (std::size_t r = 0; r < g.m.size(); ++r)
    for (int i = 0; i < g.n; ++i) {
      std::uint64_t acc = 0;
      for (int j = 0; j < g.n; ++j) acc = f.add(acc, f.mul(g.m[r][i][j], x[j]));
      jac.at(r, static_cast<std::size_t>(i)) = acc;
    }
  return static_cast<int>(rank(f, jac));
}

void note_rank(EnumerationResult& out, int r) {
  if (out.min_tangent_rank < 0 || r < out.min_tangent_rank) out.min_tangent_rank = r;
  if (r > out.max_tangent_rank) out.max_tangent_rank = r;
}

EnumerationResult enumerate_f2(const QuadricSystemZ& sys, bool collect, bool smooth) {
  const int n = sys.empty() ? 0 : sys.front().n;
  // Row masks: u[i] holds the bits j >= i with odd coefficient, so that
  // Q(x) = XOR over set bits i of parity(u[i] & x).
  std::vector<std::array<std::uint32_t, 16>> packed;
  for (const auto& q : sys) {
    std::array<std::uint32_t, 16> u{};
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (mpz_odd_p(q.at(i, j).get_mpz_t())) u[i] |= 1u << j;
    packed.push_back(u);
  }

  const PrimeField f2(2);
  GradientTables grad;
  if (smooth) grad = gradient_tables(sys, 2);

  EnumerationResult out;
  std::array<int, 16> digits{};
  // Same representative stream as the F_3 walk: leading coordinate 1 first,
  // rightmost digit fastest.
  for (int lead = 0; lead < n; ++lead) {
    digits.fill(0);
    digits[lead] = 1;
    while (true) {
      std::uint32_t x = 0;
      for (int i = 0; i < n; ++i) x |= static_cast<std::uint32_t>(digits[i]) << i;
      bool on = true;
      for (const auto& u : packed) {
        int acc = 0;
        for (std::uint32_t bits = x; bits; bits &= bits - 1)
          acc ^= __builtin_popcount(u[__builtin_ctz(bits)] & x) & 1;
        if (acc) {
          on = false;
          break;
        }
      }
      if (on) {
        out.count += 1;
        if (smooth) {
          std::array<std::uint64_t, 16> coords{};
          for (int i = 0; i < n; ++i) coords[i] = static_cast<std::uint64_t>(digits[i]);
          note_rank(out, jacobian_rank_at(f2, grad, coords));
        }
        if (collect) {
          std::array<std::uint8_t, 16> pt{};
          for (int i = 0; i < n; ++i) pt[i] = static_cast<std::uint8_t>(digits[i]);
          out.points.push_back(pt);
        }
      }
      int pos = n - 1;
      while (pos > lead && digits[pos] == 1) digits[pos--] = 0;
      if (pos == lead) break;
      ++digits[pos];
    }
  }
  return out;
}

EnumerationResult enumerate_f3(const QuadricSystemZ& sys, bool collect, bool smooth) {
  const int n = sys.empty() ? 0 : sys.front().n;
  struct TermI {
    int i, j;
    int c;  // 1 or 2
  };
  std::vector<std::vector<TermI>> terms;
  for (const auto& q : sys) {
    std::vector<TermI> ts;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const int c = static_cast<int>(mpz_fdiv_ui(q.at(i, j).get_mpz_t(), 3));
        if (c) ts.push_back({i, j, c});
      }
    terms.push_back(std::move(ts));
  }

  const PrimeField f3(3);
  GradientTables grad;
  if (smooth) grad = gradient_tables(sys, 3);

  EnumerationResult out;
  std::array<int, 16> x{};
  // Representatives have x_L = 1 as the first nonzero coordinate and free
  // digits behind it; the rightmost digit moves fastest.
  for (int lead = 0; lead < n; ++lead) {
    x.fill(0);
    x[lead] = 1;
    while (true) {
      bool on = true;
      for (const auto& ts : terms) {
        int acc = 0;
        for (const auto& t : ts) acc += t.c * x[t.i] * x[t.j];
        if (acc % 3 != 0) {
          on = false;
          break;
        }
      }
      if (on) {
        out.count += 1;
        if (smooth) {
          std::array<std::uint64_t, 16> coords{};
          for (int i = 0; i < n; ++i) coords[i] = static_cast<std::uint64_t>(x[i]);
          note_rank(out, jacobian_rank_at(f3, grad, coords));
        }
        if (collect) {
          std::array<std::uint8_t, 16> pt{};
          for (int i = 0; i < n; ++i) pt[i] = static_cast<std::uint8_t>(x[i]);
          out.points.push_back(pt);
        }
      }
      int pos = n - 1;
      while (pos > lead && x[pos] == 2) x[pos--] = 0;
      if (pos == lead) break;
      ++x[pos];
    }
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_points(const QuadricSystemZ& sys, std::uint64_t q,
                                   bool collect_points, bool check_smoothness) {
  if (sys.empty() || sys.front().n > 16)
    throw std::invalid_argument("enumerate_points: expected a nonempty system in at most 16 variables");
  if (q == 2) return enumerate_f2(sys, collect_points, check_smoothness);
  if (q == 3) return enumerate_f3(sys, collect_points, check_smoothness);
  throw std::invalid_argument(
      "enumerate_points: exhaustive enumeration is supported over F_2 and F_3 only; "
      "for larger fields sample chart points (pure spinors) or use the section builders");
}

mpz_class predicted_point_count(std::uint64_t q) {
  mpz_class out = 1, qq = static_cast<unsigned long>(q), pw = 1;
  for (int k = 1; k <= 4; ++k) {
    pw *= qq;
    out *= 1 + pw;
  }
  return out;
}

SliceOutcome random_slice_multiplicity(const QuadricSystemZ& sys, std::uint64_t p,
                                       std::uint64_t seed, int max_attempts) {
  const PrimeField f(p);
  std::mt19937_64 rng(seed);
  SliceOutcome out;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    out.attempts = attempt;
    Matrix<PrimeField> w(6, 16, f);
    for (auto& v : w.a) v = rng() % p;
    if (rank(f, w) != 6) continue;
    std::vector<Poly<PrimeField>> polys;
    for (const auto& q : sys) {
      auto poly = poly_from_coeffs(f, 6, restrict_quadric(f, q, w));
      if (!poly.zero()) polys.push_back(std::move(poly));
    }
    const auto gb = buchberger(f, polys);
    const auto hs = hilbert_summary(gb, 6);
    out.proj_dim = hs.proj_dim;
    out.degree = hs.degree;
    if (hs.proj_dim == 0) return out;
  }
  return out;
}

TransportReport dual_transport_test(std::uint64_t p, int trials, std::uint64_t seed) {
  const PrimeField f(p);
  const auto even = clifford_quadrics(Parity::even);
  const auto odd = clifford_quadrics(Parity::odd);
  const auto& B = pairing_matrix_int();
  std::mt19937_64 rng(seed);

  // B is a signed permutation, so B^{-1} = B^T and the inverse transpose is B
  // itself: candidate_i = sum_j B[i][j] ell_j.
  const auto transport = [&](const std::vector<std::uint64_t>& ell) {
    std::vector<std::uint64_t> t(16, 0);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) {
        if (B[i][j] == 0) continue;
        t[i] = B[i][j] > 0 ? f.add(t[i], ell[j]) : f.sub(t[i], ell[j]);
      }
    return t;
  };
  const auto on_odd = [&](const std::vector<std::uint64_t>& t) {
    for (const auto& q : odd)
      if (!f.is_zero(eval_quadric(f, q, t))) return false;
    return true;
  };

  TransportReport rep;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Matrix<PrimeField> skew(5, 5, f);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) {
        const std::uint64_t r = rng() % p;
        skew.at(i, j) = r;
        skew.at(j, i) = f.neg(r);
      }
    const auto s = pure_spinor(f, skew, Parity::even);
    const std::vector<std::uint64_t> x(s.x.begin(), s.x.end());
    const auto jac = quadric_jacobian(f, even, x);

    std::vector<std::uint64_t> ell(16, 0);
    while (std::all_of(ell.begin(), ell.end(), [](std::uint64_t v) { return v == 0; })) {
      for (std::size_t r = 0; r < jac.rows; ++r) {
        const std::uint64_t c = rng() % p;
        for (int i = 0; i < 16; ++i) ell[i] = f.add(ell[i], f.mul(c, jac.at(r, i)));
      }
    }
    if (on_odd(transport(ell))) ++rep.tangent_hits;

    // Control: a hyperplane through the point (coordinate 0 of a chart point
    // is 1) that stays off the tangent span.
    const auto base_rank = rank(f, jac);
    for (int guard = 0; guard < 100; ++guard) {
      std::vector<std::uint64_t> h(16, 0);
      for (int i = 1; i < 16; ++i) h[i] = rng() % p;
      std::uint64_t dot = 0;
      for (int i = 1; i < 16; ++i) dot = f.add(dot, f.mul(h[i], x[i]));
      h[0] = f.neg(dot);
      if (std::all_of(h.begin(), h.end(), [](std::uint64_t v) { return v == 0; })) continue;
      Matrix<PrimeField> aug(jac.rows + 1, 16, f);
      aug.a.assign(jac.a.begin(), jac.a.end());
      aug.a.insert(aug.a.end(), h.begin(), h.end());
      if (rank(f, aug) == base_rank) continue;  // inside the tangent span, redraw
      if (on_odd(transport(h))) ++rep.control_hits;
      break;
    }
  }
  return rep;
}

}  // namespace spinten
