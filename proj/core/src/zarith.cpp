#include "spinten/zarith.hpp"

#include <algorithm>
#include <cstdlib>

#include "spinten/fields.hpp"
#include "spinten/linalg.hpp"

namespace spinten {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64 bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

mpz_class content(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class content_normalize(std::vector<mpz_class>& v) {
  mpz_class g = content(v);
  if (g == 0) throw NormalizationError("content_normalize: zero vector");
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : v) x /= g;
  return g;
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v) {
  mpz_class lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    mpq_class s = x * mpq_class(lcm);
    out.push_back(s.get_num());
  }
  content_normalize(out);
  return out;
}

ZMatrix transpose(const ZMatrix& m) {
  ZMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

ZMatrix hnf_rows(const ZMatrix& m, ZMatrix* transform) {
  ZMatrix h = m;
  ZMatrix u;
  if (transform) {
    u = ZMatrix(m.rows, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) u.at(i, i) = 1;
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < h.cols; ++c) std::swap(h.at(i, c), h.at(j, c));
    if (transform)
      for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto submul_row = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < h.cols; ++c) h.at(dst, c) -= q * h.at(src, c);
    if (transform)
      for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) -= q * u.at(src, c);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < h.cols; ++c) h.at(i, c) = -h.at(i, c);
    if (transform)
      for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols && row < h.rows; ++col) {
    // Reduce below-pivot entries to a single nonzero by gcd steps, keeping the
    // smallest magnitude entry on top.
    while (true) {
      std::size_t best = h.rows;
      for (std::size_t i = row; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows ||
            cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0)
          best = i;
      }
      if (best == h.rows) break;
      swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < h.rows; ++i) {
        if (h.at(i, col) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
        submul_row(i, row, q);
        if (h.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row < h.rows && h.at(row, col) != 0) {
      if (h.at(row, col) < 0) negate_row(row);
      for (std::size_t i = 0; i < row; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
        submul_row(i, row, q);
      }
      ++row;
    }
  }

  if (transform) *transform = u;
  ZMatrix out(row, h.cols);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < h.cols; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

ZMatrix integer_kernel(const ZMatrix& m) {
  // Left kernel of m^T equals {v : m v = 0}; the unimodular transform rows
  // that map onto zero HNF rows form a basis of the saturated kernel lattice.
  ZMatrix mt = transpose(m);
  ZMatrix u;
  ZMatrix h = hnf_rows(mt, &u);
  const std::size_t rank = h.rows;
  ZMatrix ker(mt.rows - rank, m.cols);
  for (std::size_t i = rank; i < mt.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) ker.at(i - rank, j) = u.at(i, j);
  return hnf_rows(ker);
}

std::optional<mpq_class> rational_lift(std::uint64_t value, std::uint64_t p) {
  // Wang's reconstruction: descend the Euclidean remainder sequence of (p, v)
  // until the remainder falls below sqrt((p-1)/2).
  mpz_class bound;
  {
    mpz_class half = (mpz_class(p) - 1) / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  mpz_class r0(p), r1(value % p), t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (sgn(t1) == 0) return std::nullopt;
  mpz_class num = r1, den = t1;
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  if (den > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

ZMatrix integer_kernel_fast(const ZMatrix& m) {
  // Modular shortcut. The kernel mod p has dimension at least dim ker over Q,
  // so if every mod p basis vector lifts to an exact integer kernel vector the
  // lift spans the rational kernel; if additionally the lifted basis is
  // saturated, its HNF is the integer_kernel answer. Anything short of that
  // certificate falls through to the general algorithm.
  constexpr std::uint64_t kProbePrime = 2305843009213693951ULL;
  const PrimeField f(kProbePrime);
  Matrix<PrimeField> mp(m.rows, m.cols, f);
  for (std::size_t t = 0; t < m.a.size(); ++t) mp.a[t] = f.from_mpz(m.a[t]);
  const Matrix<PrimeField> kp = kernel(f, std::move(mp));
  if (kp.rows == 0) return ZMatrix(0, m.cols);

  ZMatrix lift(kp.rows, m.cols);
  bool ok = true;
  for (std::size_t r = 0; ok && r < kp.rows; ++r) {
    std::vector<mpq_class> row(m.cols);
    for (std::size_t c = 0; ok && c < m.cols; ++c) {
      auto q = rational_lift(kp.at(r, c), kProbePrime);
      if (!q)
        ok = false;
      else
        row[c] = *q;
    }
    if (!ok) break;
    auto prim = primitive_integer_vector(row);
    for (std::size_t c = 0; c < m.cols; ++c) lift.at(r, c) = prim[c];
    // Exact membership: m * lift_row = 0.
    for (std::size_t i = 0; ok && i < m.rows; ++i) {
      mpz_class acc = 0;
      for (std::size_t c = 0; c < m.cols; ++c)
        if (sgn(m.at(i, c)) != 0 && sgn(lift.at(r, c)) != 0) acc += m.at(i, c) * lift.at(r, c);
      if (sgn(acc) != 0) ok = false;
    }
  }
  if (ok) {
    ZMatrix h = hnf_rows(lift);
    // Unit pivots certify both full rank and saturation: any rational
    // combination with an integer image has integer coefficients.
    ok = h.rows == kp.rows;
    for (std::size_t r = 0; ok && r < h.rows; ++r) {
      std::size_t c = 0;
      while (c < h.cols && sgn(h.at(r, c)) == 0) ++c;
      if (c == h.cols || h.at(r, c) != 1) ok = false;
    }
    if (!ok && h.rows == 1 && kp.rows == 1) {
      // A single primitive vector is saturated regardless of its pivot.
      ok = content(h.row(0)) == 1;
    }
    if (ok) return h;
  }
  return integer_kernel(m);
}

namespace {

mpz_class pollard_rho(const mpz_class& n, unsigned long seed) {
  // Brent's cycle detection on x -> x^2 + c mod n.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    mpz_class y = rng.get_z_range(n - 1) + 1;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class x = y, d = 1, q = 1, ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        const unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    ++seed;
  }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n, 0xC0FFEEu);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factorize(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  std::map<mpz_class, int> out;
  mpz_class m = abs(n);
  for (std::uint64_t p = 2; p < (1u << 20) && m > 1; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_class(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      ++out[mpz_class(static_cast<unsigned long>(p))];
      m /= static_cast<unsigned long>(p);
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

mpz_class squarefree_part(const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero input");
  mpz_class r = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n))
    if (e % 2 != 0) r *= p;
  return r;
}

}  // namespace spinten
