#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace spinten {

/// Prime field F_p for a word sized prime p < 2^62.
/// Elements are residues in [0, p); products use 128 bit intermediates.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_mpz(const mpz_class& v) const;

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// Quadratic extension F_{p^2} for primes p <= 13, modeled as
/// F_p[t] / (t^2 + c1 t + c0) with one fixed irreducible polynomial per p.
/// An element (a0, a1) stands for a0 + a1 t.
class QuadExtField {
 public:
  using Elem = std::array<std::uint64_t, 2>;

  explicit QuadExtField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  /// Coefficients (c1, c0) of the defining polynomial t^2 + c1 t + c0.
  std::pair<std::uint64_t, std::uint64_t> defining_poly() const { return {c1_, c0_}; }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }

  bool is_zero(Elem a) const { return a[0] == 0 && a[1] == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const { return {base_.add(a[0], b[0]), base_.add(a[1], b[1])}; }
  Elem neg(Elem a) const { return {base_.neg(a[0]), base_.neg(a[1])}; }
  Elem sub(Elem a, Elem b) const { return {base_.sub(a[0], b[0]), base_.sub(a[1], b[1])}; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_base(std::uint64_t a) const { return {a % p_, 0}; }
  Elem from_int(long long v) const { return {base_.from_int(v), 0}; }
  Elem from_mpz(const mpz_class& v) const { return {base_.from_mpz(v), 0}; }
  /// The generator t.
  Elem gen() const { return {0, 1}; }

  std::string to_string(Elem a) const;
  std::string name() const { return "F" + std::to_string(p_) + "^2"; }

 private:
  PrimeField base_;
  std::uint64_t p_, c1_, c0_;
};

/// The field of rational numbers, backed by GMP. Elements stay canonical
/// (reduced fraction, positive denominator) through gmpxx arithmetic.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint64_t characteristic() const { return 0; }

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField::inv: division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

/// Runtime description of a coefficient field, as accepted on command lines:
/// "Q" for the rationals, "p" for F_p, "p:2" for F_{p^2} with p <= 13.
struct FieldSpec {
  enum class Kind { prime, quad_ext, rationals };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) { return FieldSpec{Kind::prime, p}; }
  static FieldSpec quad_ext(std::uint64_t p) { return FieldSpec{Kind::quad_ext, p}; }

  static FieldSpec parse(const std::string& s);
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;
};

/// Instantiates the field described by spec and forwards it to fn.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case FieldSpec::Kind::prime:
      return std::forward<Fn>(fn)(PrimeField(spec.p));
    case FieldSpec::Kind::quad_ext:
      return std::forward<Fn>(fn)(QuadExtField(spec.p));
    case FieldSpec::Kind::rationals:
    default:
      return std::forward<Fn>(fn)(RationalField());
  }
}

}  // namespace spinten
