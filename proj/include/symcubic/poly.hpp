#pragma once

#include <utility>
#include <vector>

#include "symcubic/fields.hpp"

namespace symcubic {

/// Dense univariate polynomial over a single field, constant term first.
/// The trailing coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : f_(std::move(f)) {}
  UniPoly(Field f, std::vector<FieldElement> c);
  static UniPoly from_ints(const Field& f, const std::vector<std::int64_t>& c);
  static UniPoly x(const Field& f);
  static UniPoly constant(const FieldElement& c);

  const Field& field() const { return f_; }
  int degree() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i (zero beyond the degree).
  FieldElement coeff(unsigned i) const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  const FieldElement& lead() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const FieldElement& c) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  UniPoly embed_to(const Field& target) const;

  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
  /// Canonical order: by degree, then coefficient vectors from the top down.
  bool less(const UniPoly& o) const;

  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

  std::string str() const;

 private:
  Field f_;
  std::vector<FieldElement> c_;
  void trim();
};

UniPoly poly_gcd(UniPoly a, UniPoly b);  // monic
UniPoly poly_powmod(UniPoly base, Int e, const UniPoly& mod);

struct PolyFactor {
  UniPoly factor;  // monic irreducible
  unsigned mult;
};

struct Factorization {
  FieldElement unit;  // leading coefficient of the input
  std::vector<PolyFactor> factors;
};

/// Factor a nonzero polynomial over F_q: squarefree decomposition, then
/// distinct-degree splitting, then seeded equal-degree splitting. Factors are
/// sorted canonically, so the result is identical run to run for a fixed seed
/// and the factor multiset does not depend on the seed at all.
Factorization poly_factor(const UniPoly& f, std::uint64_t seed);

/// f = prod g_i^{m_i} with each g_i monic squarefree, pairwise coprime.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomp(const UniPoly& f);

bool poly_squarefree(const UniPoly& f);

/// All roots of f in `target` (an extension of f's field) with
/// multiplicities, sorted in the canonical element order.
std::vector<std::pair<FieldElement, unsigned>> poly_roots(
    const UniPoly& f, const Field& target, std::uint64_t seed = 0x5eedULL);

}  // namespace symcubic
