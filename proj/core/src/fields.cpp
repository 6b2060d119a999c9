#include "spinten/fields.hpp"

#include "spinten/zarith.hpp"

namespace spinten {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t(1) << 62) || !is_prime_u64(p))
    throw std::invalid_argument("PrimeField: modulus must be a prime below 2^62");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: division by zero");
  // Extended Euclid on signed words; p < 2^62 keeps everything in range.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class m, p;
  mpz_set_ui(p.get_mpz_t(), static_cast<unsigned long>(p_));
  mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return static_cast<Elem>(m.get_ui());
}

namespace {
// Fixed irreducible polynomials t^2 + c1 t + c0 over F_p.
std::pair<std::uint64_t, std::uint64_t> ext_poly(std::uint64_t p) {
  switch (p) {
    case 2: return {1, 1};
    case 3: return {0, 1};
    case 5: return {0, 2};
    case 7: return {0, 1};
    case 11: return {0, 1};
    case 13: return {0, 2};
    default:
      throw std::invalid_argument("QuadExtField: p must be a prime <= 13");
  }
}
}  // namespace

QuadExtField::QuadExtField(std::uint64_t p) : base_(p == 0 ? 2 : p), p_(p) {
  auto [c1, c0] = ext_poly(p);
  c1_ = c1;
  c0_ = c0;
}

QuadExtField::Elem QuadExtField::mul(Elem a, Elem b) const {
  // (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0.
  const auto& f = base_;
  const auto hi = f.mul(a[1], b[1]);
  const auto mid = f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
  const auto lo = f.mul(a[0], b[0]);
  return {f.sub(lo, f.mul(hi, c0_)), f.sub(mid, f.mul(hi, c1_))};
}

QuadExtField::Elem QuadExtField::inv(Elem a) const {
  if (is_zero(a)) throw std::domain_error("QuadExtField::inv: division by zero");
  // Conjugate a0 - c1 a1 - a1 t; norm a0^2 - c1 a0 a1 + c0 a1^2 lies in F_p.
  const auto& f = base_;
  const auto n = f.add(f.sub(f.mul(a[0], a[0]), f.mul(c1_, f.mul(a[0], a[1]))),
                       f.mul(c0_, f.mul(a[1], a[1])));
  const auto ni = f.inv(n);
  return {f.mul(ni, f.sub(a[0], f.mul(c1_, a[1]))), f.mul(ni, f.neg(a[1]))};
}

std::string QuadExtField::to_string(Elem a) const {
  if (a[1] == 0) return std::to_string(a[0]);
  return std::to_string(a[0]) + "+" + std::to_string(a[1]) + "*t";
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  const auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(head, &used);
    if (used != head.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("FieldSpec: cannot parse field '" + s + "'");
  }
  if (colon == std::string::npos) {
    if (!is_prime_u64(p) || p >= (std::uint64_t(1) << 62))
      throw std::invalid_argument("FieldSpec: '" + s + "' is not a prime below 2^62");
    return prime(p);
  }
  if (s.substr(colon + 1) != "2")
    throw std::invalid_argument("FieldSpec: only degree 2 extensions are supported");
  if (p != 2 && p != 3 && p != 5 && p != 7 && p != 11 && p != 13)
    throw std::invalid_argument("FieldSpec: F_{p^2} is supported for primes p <= 13");
  return quad_ext(p);
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case Kind::prime: return std::to_string(p);
    case Kind::quad_ext: return std::to_string(p) + ":2";
    case Kind::rationals:
    default: return "Q";
  }
}

}  // namespace spinten
