#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace spinten {

struct NormalizationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Deterministic Miller-Rabin for 64 bit inputs.
bool is_prime_u64(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime_u64(std::uint64_t n);
/// All primes <= n, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t n);

/// gcd of absolute values; 0 for the zero vector.
mpz_class content(const std::vector<mpz_class>& v);

/// Divides v by its content and flips signs so the first nonzero entry is
/// positive. Throws NormalizationError on the zero vector. Returns the signed
/// divisor d with v_old = d * v_new.
mpz_class content_normalize(std::vector<mpz_class>& v);

/// Clears denominators and content-normalizes; throws on the zero vector.
std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v);

/// Dense integer matrix, row major.
struct ZMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  ZMatrix() = default;
  ZMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<mpz_class> row(std::size_t i) const {
    return std::vector<mpz_class>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
};

ZMatrix transpose(const ZMatrix& m);

/// Row-style Hermite normal form: pivot entries positive, entries above each
/// pivot reduced into [0, pivot), zero rows dropped. If transform is nonnull
/// it receives a unimodular U (rows x rows of the input) with U * input equal
/// to the HNF padded by zero rows.
ZMatrix hnf_rows(const ZMatrix& m, ZMatrix* transform = nullptr);

/// Canonical basis, as HNF rows, of the saturated lattice
/// {v in Z^cols : m v = 0}.
ZMatrix integer_kernel(const ZMatrix& m);

/// Same result as integer_kernel. Computes the kernel modulo a large prime,
/// lifts it by rational reconstruction, and certifies the lift exactly; falls
/// back to integer_kernel when the certificate fails, so the shortcut never
/// changes the answer.
ZMatrix integer_kernel_fast(const ZMatrix& m);

/// The unique a/b with value = a b^{-1} mod p, |a|, b <= sqrt((p-1)/2) and
/// gcd(a, b) = 1, when such a fraction exists.
std::optional<mpq_class> rational_lift(std::uint64_t value, std::uint64_t p);

/// Prime factorization of |n| (n != 0): trial division below 2^20, then
/// Pollard-Brent rho with probable prime splitting.
std::map<mpz_class, int> factorize(const mpz_class& n);

/// Squarefree part of n, sign preserved; requires n != 0.
mpz_class squarefree_part(const mpz_class& n);

}  // namespace spinten
