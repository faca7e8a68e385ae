#include <map>
#include <mutex>
#include <tuple>

#include "symcubic/poly.hpp"

// Canonical embeddings between the standard fields F_{p^a} -> F_{p^b}.
//
// The image of the generator (the class of x) is the least root of the a-th
// canonical modulus in F_{p^b} that is compatible with the already-canonical
// embeddings from every maximal proper subfield of F_{p^a}. Choosing by
// induction on the source degree makes the whole system of embeddings
// commute along arbitrary divisor chains, independent of call order.

namespace symcubic {

namespace {

std::mutex g_embed_mx;
std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
         std::vector<std::uint64_t>>&
embed_cache() {
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
                  std::vector<std::uint64_t>>
      m;
  return m;
}

constexpr std::uint64_t kEmbedSeed = 0x5EED00ABCDULL;

FieldElement generator_image(std::uint64_t p, unsigned a, unsigned b);

// Evaluate the polynomial representation of y in F_{p^a} (coefficients over
// F_p) at the element r of F_{p^b}.
FieldElement eval_rep_at(const std::vector<std::uint64_t>& rep,
                         const FieldElement& r) {
  const Field& T = r.field();
  FieldElement acc = FieldElement::zero(T);
  for (size_t i = rep.size(); i-- > 0;)
    acc = acc * r + FieldElement::from_int(T, (std::int64_t)rep[i]);
  return acc;
}

FieldElement generator_image(std::uint64_t p, unsigned a, unsigned b) {
  {
    std::lock_guard<std::mutex> lk(g_embed_mx);
    auto it = embed_cache().find({p, a, b});
    if (it != embed_cache().end())
      return FieldElement::from_coeffs(FieldDesc::extension(p, b), it->second);
  }

  Field A = FieldDesc::extension(p, a);
  Field B = FieldDesc::extension(p, b);
  FieldElement result;
  if (a == b) {
    result = FieldElement::x_class(A);
  } else {
    // all roots of A's modulus in B
    std::vector<std::int64_t> mc(A->modulus.begin(), A->modulus.end());
    UniPoly modA = UniPoly::from_ints(FieldDesc::prime(p), mc);
    auto roots = poly_roots(modA, B, kEmbedSeed);
    std::vector<FieldElement> cand;
    for (auto& [r, m] : roots) cand.push_back(r);

    // keep only roots compatible with every maximal proper subfield
    std::vector<std::uint64_t> primes = factor_u64(a);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint64_t q : primes) {
      unsigned d = a / (unsigned)q;
      if (d <= 1) continue;
      FieldElement Rda = generator_image(p, d, a);
      FieldElement Rdb = generator_image(p, d, b);
      std::vector<FieldElement> kept;
      for (const auto& r : cand)
        if (eval_rep_at(Rda.coeffs(), r) == Rdb) kept.push_back(r);
      cand = std::move(kept);
    }
    if (cand.empty())
      throw Error(Errc::InvalidArgument, "no compatible embedding root");
    result = cand.front();
    for (const auto& r : cand)
      if (r.less(result)) result = r;
  }

  std::lock_guard<std::mutex> lk(g_embed_mx);
  embed_cache().insert({{p, a, b}, result.coeffs()});
  return result;
}

}  // namespace

FieldElement embed(const FieldElement& x, const Field& target) {
  const Field& S = x.field();
  if (same_field(S, target)) {
    if (S->finite())
      return FieldElement::from_coeffs(target, x.coeffs());
    return x;
  }
  if (!S->finite() || !target->finite())
    throw Error(Errc::FieldMismatch, "cannot embed across Q and F_q");
  if (S->p != target->p)
    throw Error(Errc::FieldMismatch, "different characteristics");
  if (target->k % S->k != 0)
    throw Error(Errc::IncompatibleDegrees,
                S->spec() + " does not embed in " + target->spec());
  if (S->k == 1)
    return FieldElement::from_int(target, (std::int64_t)x.coeffs()[0]);
  FieldElement r = generator_image(S->p, S->k, target->k);
  return eval_rep_at(x.coeffs(), r);
}

std::optional<FieldElement> descend(const FieldElement& x,
                                    const Field& target) {
  const Field& S = x.field();
  if (same_field(S, target)) return x;
  if (!S->finite() || !target->finite() || S->p != target->p)
    throw Error(Errc::FieldMismatch, "descend across incompatible fields");
  if (S->k % target->k != 0)
    throw Error(Errc::IncompatibleDegrees,
                target->spec() + " is not a subfield of " + S->spec());
  std::uint64_t p = S->p;
  unsigned big = S->k, small = target->k;
  if (small == 1) {
    for (unsigned i = 1; i < big; ++i)
      if (x.coeffs()[i]) return std::nullopt;
    return FieldElement::from_int(target, (std::int64_t)x.coeffs()[0]);
  }
  // solve sum_j c_j R^j = x over F_p, with R the canonical generator image
  FieldElement R = generator_image(p, small, big);
  std::vector<std::vector<std::uint64_t>> cols;
  FieldElement pw = FieldElement::one(S);
  for (unsigned j = 0; j < small; ++j) {
    cols.push_back(pw.coeffs());
    pw = pw * R;
  }
  // gaussian elimination on the big x small system
  std::vector<std::vector<std::uint64_t>> m(big,
                                            std::vector<std::uint64_t>(small + 1));
  for (unsigned i = 0; i < big; ++i) {
    for (unsigned j = 0; j < small; ++j) m[i][j] = cols[j][i];
    m[i][small] = x.coeffs()[i];
  }
  auto mulm = [p](std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
  };
  auto subm = [p](std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + p - b;
  };
  unsigned row = 0;
  std::vector<int> pivot_of_col(small, -1);
  for (unsigned col = 0; col < small && row < big; ++col) {
    unsigned sel = row;
    while (sel < big && m[sel][col] == 0) ++sel;
    if (sel == big) continue;
    std::swap(m[sel], m[row]);
    std::uint64_t inv = 1, base = m[row][col], e = p - 2;
    while (e) {
      if (e & 1) inv = mulm(inv, base);
      base = mulm(base, base);
      e >>= 1;
    }
    for (auto& v : m[row]) v = mulm(v, inv);
    for (unsigned i = 0; i < big; ++i) {
      if (i == row || m[i][col] == 0) continue;
      std::uint64_t c = m[i][col];
      for (unsigned j = col; j <= small; ++j)
        m[i][j] = subm(m[i][j], mulm(c, m[row][j]));
    }
    pivot_of_col[col] = (int)row;
    ++row;
  }
  // consistency: no row of the form (0,...,0 | nonzero)
  for (unsigned i = row; i < big; ++i)
    if (m[i][small] != 0) return std::nullopt;
  std::vector<std::uint64_t> sol(small, 0);
  for (unsigned col = 0; col < small; ++col)
    if (pivot_of_col[col] >= 0) sol[col] = m[pivot_of_col[col]][small];
  FieldElement out = FieldElement::from_coeffs(target, sol);
  if (embed(out, S) != x) return std::nullopt;
  return out;
}

}  // namespace symcubic
