#include "doctest.h"

#include <algorithm>

#include "symcubic/fields.hpp"
#include "symcubic/poly.hpp"

using namespace symcubic;

namespace {

// enumerate all elements of a small finite field in canonical (lex) order
std::vector<FieldElement> all_elements(const Field& F) {
  std::vector<FieldElement> out;
  std::vector<std::uint64_t> c(F->k, 0);
  for (;;) {
    out.push_back(FieldElement::from_coeffs(F, c));
    unsigned i = F->k;
    while (i > 0) {
      if (++c[i - 1] < F->p) break;
      c[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

FieldElement random_element(const Field& F, Rng& rng) {
  std::vector<std::uint64_t> c(F->k);
  for (auto& x : c) x = rng.below(F->p);
  return FieldElement::from_coeffs(F, c);
}

}  // namespace

TEST_CASE("canonical extension descriptors") {
  Field f7 = make_extension(7, 1);
  CHECK(f7->kind == FieldKind::Prime);
  CHECK(f7->p == 7);
  CHECK(f7->spec() == "7");

  // lex-least monic irreducible quadratic over F_7 is x^2 + 1: the constant
  // is the fastest-varying coordinate and x^2, x^2+1 are the first candidates
  Field f49 = make_extension(7, 2);
  CHECK(f49->modulus == std::vector<std::uint64_t>{1, 0, 1});

  // x^3, x^3+1 = (x+1)(...), x^3+2 has no root (cubes mod 7 are {0,1,6})
  Field f343 = make_extension(7, 3);
  CHECK(f343->modulus == std::vector<std::uint64_t>{2, 0, 0, 1});

  CHECK_THROWS_AS(make_extension(4, 2), Error);
  CHECK_THROWS_WITH_AS(make_extension(4, 2), "NotPrime: 4 is not prime", Error);

  // identical descriptor on repeated construction
  Field again = FieldDesc::parse("7^2");
  CHECK(again->modulus == f49->modulus);
  CHECK(same_field(again, f49));
}

TEST_CASE("modulus is irreducible (factorization oracle)") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{7, 2},
                      {7, 3},
                      {7, 4},
                      {101, 2},
                      {101, 3}}) {
    Field F = make_extension(p, k);
    Field Fp = make_extension(p, 1);
    std::vector<std::int64_t> mc(F->modulus.begin(), F->modulus.end());
    UniPoly m = UniPoly::from_ints(Fp, mc);
    auto fac = poly_factor(m, 1);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].mult == 1);
    CHECK(fac.factors[0].factor.degree() == (int)k);
  }
}

TEST_CASE("prime field embeds as constants") {
  Field f7 = make_extension(7, 1);
  Field f49 = make_extension(7, 2);
  FieldElement x = FieldElement::from_int(f7, 5);
  FieldElement y = embed(x, f49);
  CHECK(y.coeffs() == std::vector<std::uint64_t>{5, 0});
  CHECK_THROWS_AS(embed(FieldElement::x_class(f49), make_extension(7, 3)),
                  Error);
}

TEST_CASE("embedding image is the least root of the source modulus") {
  // direct oracle: enumerate all of F_{7^4}, collect roots of x^2+1, compare
  Field f49 = make_extension(7, 2);
  Field f2401 = make_extension(7, 4);
  FieldElement g = FieldElement::x_class(f49);
  FieldElement img = embed(g, f2401);

  std::vector<FieldElement> roots;
  FieldElement one = FieldElement::one(f2401);
  for (const auto& e : all_elements(f2401))
    if ((e * e + one).is_zero()) roots.push_back(e);
  REQUIRE(roots.size() == 2);
  std::sort(roots.begin(), roots.end(),
            [](const FieldElement& a, const FieldElement& b) {
              return a.less(b);
            });
  CHECK(img == roots[0]);
  CHECK((img * img + one).is_zero());
}

TEST_CASE("embedding is a ring homomorphism") {
  Rng rng(11);
  Field src = make_extension(7, 2);
  Field dst = make_extension(7, 4);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = random_element(src, rng), b = random_element(src, rng);
    CHECK(embed(a + b, dst) == embed(a, dst) + embed(b, dst));
    CHECK(embed(a * b, dst) == embed(a, dst) * embed(b, dst));
  }
  CHECK(embed(FieldElement::one(src), dst) == FieldElement::one(dst));
}

TEST_CASE("embedding commutes along divisor chains") {
  Rng rng(12);
  auto chain = [&](std::uint64_t p, unsigned a, unsigned b, unsigned c) {
    Field A = make_extension(p, a), B = make_extension(p, b),
          C = make_extension(p, c);
    for (int i = 0; i < 12; ++i) {
      FieldElement x = random_element(A, rng);
      CHECK(embed(embed(x, B), C) == embed(x, C));
    }
  };
  chain(7, 1, 2, 4);
  chain(7, 2, 4, 8);
  chain(7, 2, 6, 12);
  chain(7, 3, 6, 12);
  chain(101, 1, 2, 6);
  chain(101, 2, 6, 12);
}

TEST_CASE("descend inverts embed") {
  Rng rng(13);
  Field small = make_extension(7, 2), big = make_extension(7, 6);
  for (int i = 0; i < 20; ++i) {
    FieldElement x = random_element(small, rng);
    auto back = descend(embed(x, big), small);
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
  // an element outside the subfield does not descend
  FieldElement g = FieldElement::x_class(big);
  CHECK_FALSE(descend(g, small).has_value());
}

TEST_CASE("frobenius") {
  Field f7 = make_extension(7, 1);
  Field f49 = make_extension(7, 2);
  FieldElement a = FieldElement::from_int(f7, 3);
  CHECK(frobenius(a, 1) == a);
  CHECK(frobenius(a, 5) == a);

  FieldElement g = FieldElement::x_class(f49);
  CHECK(frobenius(g, 1) != g);
  CHECK(frobenius(g, 2) == g);
  CHECK(frobenius(frobenius(g, 1), 1) == g);

  Rng rng(14);
  for (int i = 0; i < 30; ++i) {
    FieldElement x = random_element(f49, rng), y = random_element(f49, rng);
    CHECK(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
    CHECK(frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1));
    CHECK(frobenius(x, 2) == x);
  }
}

TEST_CASE("is_cube") {
  Field f7 = make_extension(7, 1);
  // cubes in F_7^* are {1,6}: 1^3..6^3 = 1,1,6,1,6,6
  CHECK_FALSE(is_cube(FieldElement::from_int(f7, 2)));
  CHECK(is_cube(FieldElement::from_int(f7, 6)));
  CHECK(is_cube(FieldElement::from_int(f7, 1)));

  Field f343 = make_extension(7, 3);
  CHECK(is_cube(embed(FieldElement::from_int(f7, 2), f343)));

  CHECK_THROWS_AS(is_cube(FieldElement::zero(f7)), Error);

  Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    Field F = i % 2 ? f7 : make_extension(7, 2);
    FieldElement x = random_element(F, rng), y = random_element(F, rng);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(is_cube(x * y * y * y) == is_cube(x));
  }
}

TEST_CASE("rational mode") {
  Field Q = FieldDesc::rationals();
  FieldElement a = FieldElement::from_rat(Q, Rat(2, 3));
  FieldElement b = FieldElement::from_rat(Q, Rat(-1, 6));
  CHECK((a + b).rat() == Rat(1, 2));
  CHECK((a * b).rat() == Rat(-1, 9));
  CHECK((a / b).rat() == Rat(-4));
  CHECK((a - a).is_zero());
  CHECK(a.inverse().rat() == Rat(3, 2));
  // canonical form: positive denominator, lowest terms
  CHECK(boost::multiprecision::denominator(b.rat()) == 6);
  CHECK(boost::multiprecision::numerator(b.rat()) == -1);
  CHECK(FieldDesc::parse("Q") == Q);
}

TEST_CASE("multiplicative generator is least") {
  Field f7 = make_extension(7, 1);
  CHECK(multiplicative_generator(f7).scalar() == 3);  // 3 generates F_7^*
  Field f49 = make_extension(7, 2);
  FieldElement g = multiplicative_generator(f49);
  // order is exactly 48
  CHECK(g.pow(48).is_one());
  CHECK_FALSE(g.pow(24).is_one());
  CHECK_FALSE(g.pow(16).is_one());
}
