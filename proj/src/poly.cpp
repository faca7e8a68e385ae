#include "symcubic/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symcubic {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly::UniPoly(Field f, std::vector<FieldElement> c)
    : f_(std::move(f)), c_(std::move(c)) {
  for (const auto& x : c_)
    if (!same_field(x.field(), f_))
      throw Error(Errc::FieldMismatch, "coefficient in wrong field");
  trim();
}

UniPoly UniPoly::from_ints(const Field& f, const std::vector<std::int64_t>& c) {
  std::vector<FieldElement> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(FieldElement::from_int(f, x));
  return UniPoly(f, std::move(v));
}

UniPoly UniPoly::x(const Field& f) { return from_ints(f, {0, 1}); }

UniPoly UniPoly::constant(const FieldElement& c) {
  return UniPoly(c.field(), {c});
}

FieldElement UniPoly::coeff(unsigned i) const {
  if (i < c_.size()) return c_[i];
  return FieldElement::zero(f_);
}

const FieldElement& UniPoly::lead() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "lead of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement::zero(f_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    FieldElement a = i < c_.size() ? c_[i] : FieldElement::zero(f_);
    FieldElement b = i < o.c_.size() ? o.c_[i] : FieldElement::zero(f_);
    r.c_[i] = a + b;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement::zero(f_));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    FieldElement a = i < c_.size() ? c_[i] : FieldElement::zero(f_);
    FieldElement b = i < o.c_.size() ? o.c_[i] : FieldElement::zero(f_);
    r.c_[i] = a - b;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(f_);
  UniPoly r(f_);
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement::zero(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
  UniPoly r(f_);
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(a * c);
  r.trim();
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UniPoly UniPoly::derivative() const {
  UniPoly r(f_);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i] * FieldElement::from_int(f_, (std::int64_t)i));
  r.trim();
  return r;
}

FieldElement UniPoly::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(x.field());
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i], x.field());
  return acc;
}

UniPoly UniPoly::embed_to(const Field& target) const {
  UniPoly r(target);
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(embed(a, target));
  r.trim();
  return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
  if (!same_field(f_, o.f_)) return false;
  return c_ == o.c_;
}

bool UniPoly::less(const UniPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i].less(o.c_[i]);
  }
  return false;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by zero");
  const Field& f = a.f_;
  UniPoly q(f), r = a;
  int db = b.degree();
  FieldElement li = b.lead().inverse();
  if (r.degree() >= db)
    q.c_.assign(r.degree() - db + 1, FieldElement::zero(f));
  while (r.degree() >= db) {
    FieldElement c = r.lead() * li;
    int shift = r.degree() - db;
    q.c_[shift] = q.c_[shift] + c;
    for (int i = 0; i <= db; ++i)
      r.c_[i + shift] = r.c_[i + shift] - c * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].str();
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly poly_powmod(UniPoly base, Int e, const UniPoly& mod) {
  base = UniPoly::divmod(base, mod).second;
  UniPoly r = UniPoly::from_ints(mod.field(), {1});
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0))
      r = UniPoly::divmod(r * base, mod).second;
    base = UniPoly::divmod(base * base, mod).second;
    e >>= 1;
  }
  return r;
}

namespace {

// p-th root of a polynomial with zero derivative: f(x) = g(x^p), and the
// coefficients of g are the p^{k-1}-th powers of f's.
UniPoly pth_root(const UniPoly& f) {
  const Field& F = f.field();
  std::uint64_t p = F->p;
  std::vector<FieldElement> out;
  for (int i = 0; i <= f.degree(); i += (int)p)
    out.push_back(f.coeff((unsigned)i).frob(F->k - 1 == 0 ? 0 : F->k - 1));
  return UniPoly(F, std::move(out));
}

std::vector<UniPoly> equal_degree_split(const UniPoly& f, unsigned d,
                                        Rng& rng) {
  const Field& F = f.field();
  if ((unsigned)f.degree() == d) return {f.monic()};
  Int q = F->order();
  std::vector<UniPoly> out;
  for (;;) {
    // random nonconstant h of degree < deg f
    std::vector<FieldElement> hc;
    for (int i = 0; i < f.degree(); ++i) {
      std::vector<std::uint64_t> cv(F->k);
      for (auto& c : cv) c = rng.below(F->p);
      hc.push_back(FieldElement::from_coeffs(F, std::move(cv)));
    }
    UniPoly h(F, std::move(hc));
    if (h.degree() < 1) continue;
    UniPoly g = poly_gcd(h, f);
    if (g.degree() == 0) {
      if (F->p == 2) {
        // trace map sum_{i<n*d} h^{2^i} splits f over F_{2^n}
        unsigned n = F->k;
        UniPoly t(F), acc = UniPoly::divmod(h, f).second;
        for (unsigned i = 0; i < n * d; ++i) {
          t = t + acc;
          acc = UniPoly::divmod(acc * acc, f).second;
        }
        g = poly_gcd(t, f);
      } else {
        Int e = (boost::multiprecision::pow(q, d) - 1) / 2;
        UniPoly w = poly_powmod(h, e, f);
        g = poly_gcd(w - UniPoly::from_ints(F, {1}), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      UniPoly rest = UniPoly::divmod(f, g).first;
      auto a = equal_degree_split(g, d, rng);
      auto b = equal_degree_split(rest, d, rng);
      out = std::move(a);
      out.insert(out.end(), b.begin(), b.end());
      return out;
    }
  }
}

// distinct-degree decomposition of a monic squarefree f
std::vector<std::pair<UniPoly, unsigned>> distinct_degree(UniPoly f) {
  const Field& F = f.field();
  Int q = F->order();
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly h = UniPoly::x(F);
  unsigned d = 0;
  while (f.degree() >= 2 * (int)(d + 1)) {
    ++d;
    h = poly_powmod(h, q, f);
    UniPoly g = poly_gcd(h - UniPoly::x(F), f);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = UniPoly::divmod(f, g).first;
      h = UniPoly::divmod(h, f.degree() > 0 ? f : UniPoly::from_ints(F, {1}))
              .second;
    }
  }
  if (f.degree() > 0) out.push_back({f, (unsigned)f.degree()});
  return out;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomp(const UniPoly& f) {
  const Field& F = f.field();
  if (!F->finite())
    throw Error(Errc::InvalidArgument, "squarefree_decomp needs F_q");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree_decomp(0)");
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly g = f.monic();
  if (g.degree() == 0) return out;
  UniPoly d = g.derivative();
  if (d.is_zero()) {
    for (auto& [h, m] : squarefree_decomp(pth_root(g)))
      out.push_back({h, m * (unsigned)F->p});
    return out;
  }
  UniPoly c = poly_gcd(g, d);
  UniPoly w = UniPoly::divmod(g, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = poly_gcd(w, c);
    UniPoly z = UniPoly::divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    w = std::move(y);
    c = UniPoly::divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [h, m] : squarefree_decomp(pth_root(c)))
      out.push_back({h, m * (unsigned)F->p});
  }
  return out;
}

bool poly_squarefree(const UniPoly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree(0)");
  if (f.degree() == 0) return true;
  UniPoly d = f.derivative();
  if (d.is_zero()) return false;
  return poly_gcd(f, d).degree() == 0;
}

Factorization poly_factor(const UniPoly& f, std::uint64_t seed) {
  const Field& F = f.field();
  if (!F->finite())
    throw Error(Errc::InvalidArgument, "poly_factor needs F_q");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "poly_factor(0)");
  Factorization out;
  out.unit = f.lead();
  Rng rng(seed);
  for (auto& [g, m] : squarefree_decomp(f)) {
    for (auto& [h, d] : distinct_degree(g)) {
      for (auto& irr : equal_degree_split(h, d, rng))
        out.factors.push_back({irr, m});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) {
              if (a.factor != b.factor) return a.factor.less(b.factor);
              return a.mult < b.mult;
            });
  return out;
}

std::vector<std::pair<FieldElement, unsigned>> poly_roots(
    const UniPoly& f, const Field& target, std::uint64_t seed) {
  const Field& F = f.field();
  if (!F->finite() || !target->finite())
    throw Error(Errc::InvalidArgument, "poly_roots needs finite fields");
  if (F->p != target->p)
    throw Error(Errc::FieldMismatch, "different characteristics");
  if (target->k % F->k != 0)
    throw Error(Errc::IncompatibleDegrees,
                "target is not an extension of the coefficient field");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "poly_roots(0)");

  std::vector<std::pair<FieldElement, unsigned>> out;
  Factorization fac = poly_factor(f, seed);
  unsigned rel = target->k / F->k;  // target degree over F
  for (const auto& [g, m] : fac.factors) {
    unsigned d = (unsigned)g.degree();
    if (rel % d != 0) continue;  // no roots of this factor in the target
    if (d == 1) {
      FieldElement root = -g.coeff(0);  // monic linear
      out.push_back({embed(root, target), m});
      continue;
    }
    // one root in the standard field of the factor, then its Frobenius orbit
    Field S = FieldDesc::extension(F->p, F->k * d);
    UniPoly gS = g.embed_to(S);
    Rng rng(seed ^ 0xD1EULL);
    auto linears = equal_degree_split(gS, 1, rng);
    FieldElement theta = -linears.front().coeff(0);
    for (const auto& lf : linears) {
      FieldElement cand = -lf.coeff(0);
      if (cand.less(theta)) theta = cand;
    }
    FieldElement img = embed(theta, target);
    for (unsigned j = 0; j < d; ++j) {
      out.push_back({img, m});
      img = img.frob(F->k);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.less(b.first); });
  return out;
}

}  // namespace symcubic
