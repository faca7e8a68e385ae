#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcubic/base.hpp"

namespace symcubic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Extension, Rational };

class FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

/// Immutable field descriptor: F_p, F_{p^k} or Q.
///
/// Extension moduli are canonical — the smallest monic irreducible of degree
/// k over F_p in lexicographic order on (c_{k-1},...,c_1,c_0) — so two
/// independently built descriptors for the same (p,k) are identical.
class FieldDesc {
 public:
  FieldKind kind;
  std::uint64_t p;     // characteristic; 0 in rational mode
  unsigned k;          // extension degree over F_p (1 for prime fields)
  std::vector<std::uint64_t> modulus;  // monic degree-k, constant term first;
                                       // extensions only

  static Field rationals();
  static Field prime(std::uint64_t p);                  // throws NotPrime
  static Field extension(std::uint64_t p, unsigned k);  // canonical modulus
  static Field parse(const std::string& spec);          // "7", "7^2", "Q"

  bool finite() const { return kind != FieldKind::Rational; }
  Int order() const;         // p^k, finite fields only
  std::string spec() const;  // "7", "7^2", "Q"
};

/// Canonical F_{p^k} descriptor (k=1 gives the prime field).
Field make_extension(std::uint64_t p, unsigned k);

bool same_field(const Field& a, const Field& b);

/// Smallest common overfield F_{p^lcm(ka,kb)} (or Q for two rational fields).
Field common_overfield(const Field& a, const Field& b);

/// An element of F_p, F_{p^k} or Q. Finite-field elements are coefficient
/// vectors over F_p (constant term first) reduced mod the canonical modulus;
/// rationals are kept in lowest terms with positive denominator.
class FieldElement {
 public:
  FieldElement() = default;  // invalid until assigned

  static FieldElement zero(const Field& f);
  static FieldElement one(const Field& f);
  static FieldElement from_int(const Field& f, std::int64_t v);
  static FieldElement from_rat(const Field& f, const Rat& v);
  static FieldElement from_coeffs(const Field& f, std::vector<std::uint64_t> c);
  /// Residue class of x in F_{p^k} = F_p[x]/(modulus); requires k >= 2.
  static FieldElement x_class(const Field& f);

  bool valid() const { return static_cast<bool>(f_); }
  const Field& field() const { return f_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(Int e) const;  // e may be negative (inverts first)
  /// Frobenius x -> x^{p^r}; identity on prime fields and at r = k.
  FieldElement frob(unsigned r) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Canonical element order: lexicographic on the coefficient vector,
  /// constant term first (rationals compare by value).
  bool less(const FieldElement& o) const;

  const std::vector<std::uint64_t>& coeffs() const { return v_; }
  const Rat& rat() const { return q_; }
  std::uint64_t scalar() const;  // prime-field value; requires k == 1
  std::string str() const;

 private:
  Field f_;
  std::vector<std::uint64_t> v_;  // finite payload, length k
  Rat q_;                         // rational payload
  void check_same(const FieldElement& o) const;
};

/// Canonical embedding F_{p^a} -> F_{p^b} for a | b. Ring-homomorphic,
/// injective, identity on F_p, deterministic, and compatible along divisor
/// chains: embed(embed(x, F_{p^b}), F_{p^c}) == embed(x, F_{p^c}) for a|b|c.
FieldElement embed(const FieldElement& x, const Field& target);

/// Partial inverse of embed: expresses x in the subfield `target` when x lies
/// in its image, nullopt otherwise.
std::optional<FieldElement> descend(const FieldElement& x, const Field& target);

/// Spec-facing free function: x^{p^r}.
FieldElement frobenius(const FieldElement& x, unsigned r);

/// True iff x is a cube in F_q^*: x^((q-1)/gcd(3,q-1)) == 1. Throws ZeroInput.
bool is_cube(const FieldElement& x);

/// Least generator of F_q^* in the canonical element order.
FieldElement multiplicative_generator(const Field& f);

bool is_prime_u64(std::uint64_t n);
/// Prime factorization, sorted, with repetition.
std::vector<std::uint64_t> factor_u64(std::uint64_t n);

}  // namespace symcubic
