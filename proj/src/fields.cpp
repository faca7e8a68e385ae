#include "symcubic/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace symcubic {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::IncompatibleDegrees: return "IncompatibleDegrees";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotStable: return "NotStable";
    case Errc::EqualPoints: return "EqualPoints";
    case Errc::NotOnSurface: return "NotOnSurface";
    case Errc::CurveInSurface: return "CurveInSurface";
    case Errc::KnownNotContained: return "KnownNotContained";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::NotGeneralPosition: return "NotGeneralPosition";
    case Errc::ConstructionDegenerate: return "ConstructionDegenerate";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::BadParametrization: return "BadParametrization";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::WildDegree: return "WildDegree";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 mulm(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

// ---- dense univariate polynomials over F_p, constant term first ----

using PV = std::vector<u64>;

void pv_trim(PV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int pv_deg(const PV& a) { return (int)a.size() - 1; }

PV pv_add(const PV& a, const PV& b, u64 p) {
  PV r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = addm(x, y, p);
  }
  pv_trim(r);
  return r;
}

PV pv_sub(const PV& a, const PV& b, u64 p) {
  PV r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = subm(x, y, p);
  }
  pv_trim(r);
  return r;
}

PV pv_mul(const PV& a, const PV& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PV r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  pv_trim(r);
  return r;
}

// a mod m in place; m need not be monic
void pv_rem(PV& a, const PV& m, u64 p) {
  int dm = pv_deg(m);
  if (dm < 0) throw Error(Errc::ZeroPolynomial, "reduction by zero");
  u64 li = invm(m.back(), p);
  while (pv_deg(a) >= dm) {
    u64 c = mulm(a.back(), li, p);
    int shift = pv_deg(a) - dm;
    for (int i = 0; i <= dm; ++i)
      a[i + shift] = subm(a[i + shift], mulm(c, m[i], p), p);
    pv_trim(a);
  }
}

PV pv_monic(PV a, u64 p) {
  if (a.empty()) return a;
  u64 li = invm(a.back(), p);
  for (auto& c : a) c = mulm(c, li, p);
  return a;
}

PV pv_gcd(PV a, PV b, u64 p) {
  while (!b.empty()) {
    pv_rem(a, b, p);
    std::swap(a, b);
  }
  return pv_monic(a, p);
}

PV pv_powmod(PV base, Int e, const PV& m, u64 p) {
  pv_rem(base, m, p);
  PV r{1};
  if (pv_deg(m) == 0) return {};
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) {
      r = pv_mul(r, base, p);
      pv_rem(r, m, p);
    }
    base = pv_mul(base, base, p);
    pv_rem(base, m, p);
    e >>= 1;
  }
  return r;
}

// extended euclid: returns u with u*a == 1 mod m (gcd(a,m) must be 1)
PV pv_inv_mod(PV a, PV m, u64 p) {
  PV r0 = m, r1 = a, s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    PV r2 = r0, q;
    {
      int d1 = pv_deg(r1);
      u64 li = invm(r1.back(), p);
      q.assign(std::max(pv_deg(r0) - d1 + 1, 0), 0);
      while (pv_deg(r2) >= d1) {
        u64 c = mulm(r2.back(), li, p);
        int shift = pv_deg(r2) - d1;
        q[shift] = addm(q[shift], c, p);
        for (int i = 0; i <= d1; ++i)
          r2[i + shift] = subm(r2[i + shift], mulm(c, r1[i], p), p);
        pv_trim(r2);
      }
      pv_trim(q);
    }
    PV s2 = pv_sub(s0, pv_mul(q, s1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  if (pv_deg(r0) != 0)
    throw Error(Errc::InvalidArgument, "element not invertible");
  u64 li = invm(r0[0], p);
  for (auto& c : s0) c = mulm(c, li, p);
  pv_trim(s0);
  return s0;
}

// Rabin irreducibility test for monic f of degree k over F_p.
bool pv_irreducible_monic(const PV& f, u64 p) {
  unsigned k = (unsigned)pv_deg(f);
  if (k == 0) return false;
  PV x{0, 1};
  Int pp = p;
  // x^{p^k} == x mod f
  Int e = boost::multiprecision::pow(pp, k);
  PV xp = pv_powmod(x, e, f, p);
  if (pv_sub(xp, x, p) != PV{}) return false;
  // gcd(x^{p^{k/r}} - x, f) == 1 for every prime r | k
  std::vector<u64> primes = factor_u64(k);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (u64 r : primes) {
    Int er = boost::multiprecision::pow(pp, k / (unsigned)r);
    PV xr = pv_powmod(x, er, f, p);
    PV g = pv_gcd(pv_sub(xr, x, p), f, p);
    if (pv_deg(g) != 0) return false;
  }
  return true;
}

// Smallest monic irreducible of degree k over F_p; tuples (c_{k-1},...,c_0)
// enumerated lexicographically with the constant term varying fastest.
PV canonical_modulus(u64 p, unsigned k) {
  PV f(k + 1, 0);
  f[k] = 1;
  // odometer over the lower k coefficients, c_0 fastest
  std::vector<u64> c(k, 0);
  for (;;) {
    for (unsigned i = 0; i < k; ++i) f[i] = c[i];
    if (pv_irreducible_monic(f, p)) return f;
    unsigned i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k)
      throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
  }
}

std::mutex g_field_mx;
std::map<std::pair<u64, unsigned>, Field>& field_cache() {
  static std::map<std::pair<u64, unsigned>, Field> m;
  return m;
}

}  // namespace

// ---- primality / factorization ----

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powm(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulm(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {
u64 pollard_rho(u64 n, Rng& rng) {
  if ((n & 1) == 0) return 2;
  for (;;) {
    u64 x = rng.below(n - 2) + 2, y = x, c = rng.below(n - 1) + 1, d = 1;
    while (d == 1) {
      x = addm(mulm(x, x, n), c, n);
      y = addm(mulm(y, y, n), c, n);
      y = addm(mulm(y, y, n), c, n);
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}
}  // namespace

std::vector<u64> factor_u64(u64 n) {
  std::vector<u64> out;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n == 1) {
    return out;
  }
  std::vector<u64> stack{n};
  Rng rng(0x9E3779B97F4A7C15ULL);
  while (!stack.empty()) {
    u64 m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime_u64(m)) {
      out.push_back(m);
      continue;
    }
    u64 d = pollard_rho(m, rng);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- FieldDesc ----

Field FieldDesc::rationals() {
  static Field f = [] {
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::Rational;
    d->p = 0;
    d->k = 1;
    return Field(d);
  }();
  return f;
}

Field FieldDesc::prime(u64 p) { return extension(p, 1); }

Field FieldDesc::extension(u64 p, unsigned k) {
  if (!is_prime_u64(p))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::lock_guard<std::mutex> lk(g_field_mx);
  auto& cache = field_cache();
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  auto d = std::make_shared<FieldDesc>();
  d->p = p;
  d->k = k;
  if (k == 1) {
    d->kind = FieldKind::Prime;
  } else {
    d->kind = FieldKind::Extension;
    d->modulus = canonical_modulus(p, k);
  }
  Field f(d);
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

Field FieldDesc::parse(const std::string& spec) {
  if (spec == "Q" || spec == "q" || spec == "rational") return rationals();
  auto caret = spec.find('^');
  try {
    if (caret == std::string::npos) return prime(std::stoull(spec));
    u64 p = std::stoull(spec.substr(0, caret));
    unsigned k = (unsigned)std::stoul(spec.substr(caret + 1));
    return extension(p, k);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(Errc::InvalidArgument, "bad field spec '" + spec + "'");
  }
}

Int FieldDesc::order() const {
  if (!finite()) throw Error(Errc::InvalidArgument, "rationals are infinite");
  return boost::multiprecision::pow(Int(p), k);
}

std::string FieldDesc::spec() const {
  if (kind == FieldKind::Rational) return "Q";
  if (k == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(k);
}

Field make_extension(u64 p, unsigned k) { return FieldDesc::extension(p, k); }

bool same_field(const Field& a, const Field& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->p == b->p && a->k == b->k;
}

Field common_overfield(const Field& a, const Field& b) {
  if (!a->finite() && !b->finite()) return FieldDesc::rationals();
  if (!a->finite() || !b->finite())
    throw Error(Errc::FieldMismatch, "cannot mix rational and finite fields");
  if (a->p != b->p)
    throw Error(Errc::FieldMismatch, "different characteristics");
  return FieldDesc::extension(a->p, std::lcm(a->k, b->k));
}

// ---- FieldElement ----

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(f_, o.f_))
    throw Error(Errc::FieldMismatch,
                "operands over " + f_->spec() + " and " + o.f_->spec());
}

FieldElement FieldElement::zero(const Field& f) {
  FieldElement e;
  e.f_ = f;
  if (f->finite()) e.v_.assign(f->k, 0);
  return e;
}

FieldElement FieldElement::one(const Field& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const Field& f, std::int64_t v) {
  FieldElement e;
  e.f_ = f;
  if (f->finite()) {
    std::int64_t m = v % (std::int64_t)f->p;
    if (m < 0) m += (std::int64_t)f->p;
    e.v_.assign(f->k, 0);
    e.v_[0] = (u64)m;
  } else {
    e.q_ = Rat(v);
  }
  return e;
}

FieldElement FieldElement::from_rat(const Field& f, const Rat& v) {
  if (f->finite())
    throw Error(Errc::FieldMismatch, "rational literal in finite field");
  FieldElement e;
  e.f_ = f;
  e.q_ = v;
  return e;
}

FieldElement FieldElement::from_coeffs(const Field& f,
                                       std::vector<u64> c) {
  if (!f->finite())
    throw Error(Errc::FieldMismatch, "coefficient vector in rational field");
  if (c.size() != f->k)
    throw Error(Errc::InvalidArgument, "coefficient vector has wrong length");
  for (auto& x : c) x %= f->p;
  FieldElement e;
  e.f_ = f;
  e.v_ = std::move(c);
  return e;
}

FieldElement FieldElement::x_class(const Field& f) {
  if (!f->finite() || f->k < 2)
    throw Error(Errc::InvalidArgument, "x_class needs a proper extension");
  std::vector<u64> c(f->k, 0);
  c[1] = 1;
  return from_coeffs(f, std::move(c));
}

bool FieldElement::is_zero() const {
  if (f_->finite())
    return std::all_of(v_.begin(), v_.end(), [](u64 c) { return c == 0; });
  return q_ == 0;
}

bool FieldElement::is_one() const {
  if (!f_->finite()) return q_ == 1;
  if (v_[0] != 1) return false;
  for (size_t i = 1; i < v_.size(); ++i)
    if (v_[i]) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (f_->finite()) {
    for (auto& c : r.v_) c = c ? f_->p - c : 0;
  } else {
    r.q_ = -r.q_;
  }
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  if (f_->finite()) {
    for (unsigned i = 0; i < f_->k; ++i) r.v_[i] = addm(r.v_[i], o.v_[i], f_->p);
  } else {
    r.q_ += o.q_;
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement r = *this;
  if (f_->finite()) {
    for (unsigned i = 0; i < f_->k; ++i) r.v_[i] = subm(r.v_[i], o.v_[i], f_->p);
  } else {
    r.q_ -= o.q_;
  }
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement r;
  r.f_ = f_;
  if (!f_->finite()) {
    r.q_ = q_ * o.q_;
    return r;
  }
  if (f_->k == 1) {
    r.v_ = {mulm(v_[0], o.v_[0], f_->p)};
    return r;
  }
  PV prod = pv_mul(v_, o.v_, f_->p);
  pv_rem(prod, f_->modulus, f_->p);
  prod.resize(f_->k, 0);
  r.v_ = std::move(prod);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroInput, "inverse of zero");
  FieldElement r;
  r.f_ = f_;
  if (!f_->finite()) {
    r.q_ = 1 / q_;
    return r;
  }
  if (f_->k == 1) {
    r.v_ = {invm(v_[0], f_->p)};
    return r;
  }
  PV a = v_;
  pv_trim(a);
  PV inv = pv_inv_mod(a, f_->modulus, f_->p);
  inv.resize(f_->k, 0);
  r.v_ = std::move(inv);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this, r = one(f_);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::frob(unsigned r) const {
  if (!f_->finite())
    throw Error(Errc::InvalidArgument, "frobenius needs a finite field");
  unsigned k = f_->k;
  r %= k;
  if (r == 0 || k == 1) return *this;
  FieldElement out = *this;
  for (unsigned i = 0; i < r; ++i) out = out.pow(Int(f_->p));
  return out;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return f_->finite() ? v_ == o.v_ : q_ == o.q_;
}

bool FieldElement::less(const FieldElement& o) const {
  check_same(o);
  if (!f_->finite()) return q_ < o.q_;
  return v_ < o.v_;
}

std::uint64_t FieldElement::scalar() const {
  if (!f_->finite() || f_->k != 1)
    throw Error(Errc::InvalidArgument, "scalar() needs a prime field");
  return v_[0];
}

std::string FieldElement::str() const {
  if (!f_->finite()) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  if (f_->k == 1) return std::to_string(v_[0]);
  std::string s = "[";
  for (unsigned i = 0; i < f_->k; ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "]";
}

FieldElement frobenius(const FieldElement& x, unsigned r) { return x.frob(r); }

bool is_cube(const FieldElement& x) {
  const Field& f = x.field();
  if (!f->finite()) throw Error(Errc::InvalidArgument, "is_cube needs F_q");
  if (x.is_zero()) throw Error(Errc::ZeroInput, "is_cube(0)");
  Int q = f->order();
  Int g = boost::multiprecision::gcd(Int(3), q - 1);
  return x.pow((q - 1) / g).is_one();
}

FieldElement multiplicative_generator(const Field& f) {
  if (!f->finite())
    throw Error(Errc::InvalidArgument, "generator needs a finite field");
  Int qi = f->order();
  if (qi > Int(1) << 40)
    throw Error(Errc::InvalidArgument, "field too large for generator search");
  u64 q = qi.convert_to<u64>();
  std::vector<u64> primes = factor_u64(q - 1);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  // enumerate elements in canonical order: odometer with the last coordinate
  // varying fastest walks coefficient vectors in lex order
  std::vector<u64> c(f->k, 0);
  for (;;) {
    unsigned i = f->k;
    while (i > 0) {
      if (++c[i - 1] < f->p) break;
      c[i - 1] = 0;
      --i;
    }
    if (i == 0) break;  // wrapped around, no generator (impossible)
    FieldElement cand = FieldElement::from_coeffs(f, c);
    if (cand.is_zero()) continue;
    bool ok = true;
    for (u64 r : primes) {
      if (cand.pow(Int((q - 1) / r)).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw Error(Errc::InvalidArgument, "no generator found");
}

}  // namespace symcubic
