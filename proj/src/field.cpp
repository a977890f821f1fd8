#include "ffm/field.hpp"

#include <algorithm>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"

namespace ffm {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficient of x^i at position i

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m, coefficients mod p.
Poly poly_mod(Poly a, std::span<const std::uint32_t> m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (c != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        const std::uint64_t sub = (c * m[i]) % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, std::span<const std::uint32_t> m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, std::span<const std::uint32_t> m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly index_to_poly(std::uint32_t idx, std::uint32_t p, std::uint32_t n) {
  Poly a(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = idx % p;
    idx /= p;
  }
  trim(a);
  return a;
}

std::uint32_t poly_to_index(const Poly& a, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

}  // namespace

namespace fpoly {

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  if (n == 0 || monic.back() != 1) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly g(d + 1, 0);
      std::uint64_t t = k;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      Poly f(monic.begin(), monic.end());
      if (poly_mod(std::move(f), g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace fpoly

FieldRef FieldCtx::construct(std::uint32_t p, std::uint32_t n, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p));
  if (n == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
  unsigned __int128 q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > cap) throw Error(ErrorCode::CapExceeded, "p^n exceeds cap " + std::to_string(cap));
  }
  // Candidates enumerated with c_0 as the most significant digit.
  std::uint64_t count = static_cast<std::uint64_t>(q);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<std::uint32_t> m(n + 1, 0);
    std::uint64_t t = k;
    for (std::uint32_t i = n; i-- > 0;) {
      m[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    m[n] = 1;
    if (fpoly::is_irreducible(m, p)) return with_modulus(p, std::move(m), cap);
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");
}

FieldRef FieldCtx::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p));
  if (modulus.size() < 2) throw Error(ErrorCode::DegreeZero, "modulus must have degree >= 1");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidArgument, "modulus must be monic");
  if (!fpoly::is_irreducible(modulus, p))
    throw Error(ErrorCode::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = static_cast<std::uint32_t>(modulus.size() - 1);
  ctx->modulus_ = std::move(modulus);
  ctx->build(cap);
  return ctx;
}

void FieldCtx::build(std::uint64_t cap) {
  unsigned __int128 q = 1;
  pow_p_.assign(1, 1);
  for (std::uint32_t i = 0; i < n_; ++i) {
    q *= p_;
    if (q > cap) throw Error(ErrorCode::CapExceeded, "p^n exceeds cap " + std::to_string(cap));
    pow_p_.push_back(static_cast<std::uint32_t>(q));
  }
  q_ = static_cast<std::uint32_t>(q);
  const std::uint32_t units = q_ - 1;

  log_.assign(q_, 0);
  exp_.assign(units, 0);
  trace_.assign(q_, 0);
  if (q_ == 2) {
    generator_ = {1};
    exp_[0] = 1;
    trace_[1] = 1;
    return;
  }

  const auto primes = prime_factors(units);
  std::uint32_t g = 0;
  for (std::uint32_t c = 1; c < q_ && g == 0; ++c) {
    const Poly base = index_to_poly(c, p_, n_);
    bool full = true;
    for (auto r : primes) {
      if (poly_powmod(base, units / r, modulus_, p_) == Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) g = c;
  }
  generator_ = {g};

  const Poly gp = index_to_poly(g, p_, n_);
  Poly cur{1};
  std::vector<bool> seen(q_, false);
  for (std::uint32_t k = 0; k < units; ++k) {
    const std::uint32_t idx = poly_to_index(cur, p_);
    if (idx == 0 || seen[idx]) throw Error(ErrorCode::InvalidArgument, "generator order check failed");
    seen[idx] = true;
    exp_[k] = idx;
    log_[idx] = k;
    cur = poly_mulmod(cur, gp, modulus_, p_);
  }
  if (poly_to_index(cur, p_) != 1) throw Error(ErrorCode::InvalidArgument, "generator order check failed");

  for (std::uint32_t x = 1; x < q_; ++x) {
    FieldElt acc{0};
    FieldElt y{x};
    for (std::uint32_t i = 0; i < n_; ++i) {
      acc = add(acc, y);
      y = frobenius(y);
    }
    trace_[x] = acc.v;  // lies in F_p, so the index is the residue
  }
}

FieldElt FieldCtx::from_int(std::int64_t k) const {
  return {static_cast<std::uint32_t>(mod_floor(k, p_))};
}

FieldElt FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    idx = idx * p_ + coeffs[i];
  }
  return {idx};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElt x) const {
  std::vector<std::uint32_t> c(n_, 0);
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

FieldElt FieldCtx::add(FieldElt a, FieldElt b) const {
  if (p_ == 2) return {a.v ^ b.v};
  if (n_ == 1) return {(a.v + b.v) % p_};
  std::uint32_t r = 0;
  std::uint32_t x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((x % p_ + y % p_) % p_) * pow_p_[i];
    x /= p_;
    y /= p_;
  }
  return {r};
}

FieldElt FieldCtx::neg(FieldElt a) const {
  if (p_ == 2) return a;
  std::uint32_t r = 0;
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((p_ - x % p_) % p_) * pow_p_[i];
    x /= p_;
  }
  return {r};
}

FieldElt FieldCtx::sub(FieldElt a, FieldElt b) const { return add(a, neg(b)); }

FieldElt FieldCtx::mul(FieldElt a, FieldElt b) const {
  if (a.v == 0 || b.v == 0) return {0};
  const std::uint32_t units = q_ - 1;
  std::uint64_t e = std::uint64_t{log_[a.v]} + log_[b.v];
  if (e >= units) e -= units;
  return {exp_[e]};
}

FieldElt FieldCtx::inv(FieldElt a) const {
  if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  const std::uint32_t units = q_ - 1;
  return {exp_[(units - log_[a.v]) % units]};
}

FieldElt FieldCtx::pow(FieldElt a, std::int64_t e) const {
  if (a.v == 0) {
    if (e == 0) return {1};
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return {0};
  }
  const std::int64_t units = q_ - 1;
  const std::int64_t le = mod_floor(static_cast<std::int64_t>(
                                        (static_cast<__int128>(log_[a.v]) * mod_floor(e, units)) % units),
                                    units);
  return {exp_[le]};
}

FieldElt FieldCtx::frobenius(FieldElt x, std::uint32_t times) const {
  if (x.v == 0) return x;
  std::uint64_t e = 1;
  const std::uint64_t units = q_ - 1;
  for (std::uint32_t i = 0; i < times; ++i) e = (e * p_) % units;
  return {exp_[(log_[x.v] * e) % units]};
}

FieldElt FieldCtx::rel_trace(FieldElt x, std::uint32_t k) const {
  if (k == 0 || n_ % k != 0)
    throw Error(ErrorCode::NotASubfield, "degree " + std::to_string(k) + " does not divide " + std::to_string(n_));
  FieldElt acc{0};
  FieldElt y = x;
  for (std::uint32_t i = 0; i < n_ / k; ++i) {
    acc = add(acc, y);
    y = frobenius(y, k);
  }
  return acc;
}

bool FieldCtx::in_subfield(FieldElt x, std::uint32_t k) const {
  if (k == 0 || n_ % k != 0)
    throw Error(ErrorCode::NotASubfield, "degree " + std::to_string(k) + " does not divide " + std::to_string(n_));
  return frobenius(x, k) == x;
}

std::uint32_t FieldCtx::discrete_log(FieldElt u) const {
  if (u.v == 0) throw Error(ErrorCode::ZeroHasNoLog, "discrete log of zero");
  if (u.v >= q_) throw Error(ErrorCode::InvalidArgument, "element out of range");
  return log_[u.v];
}

FieldElt FieldCtx::exp_g(std::int64_t k) const {
  return {exp_[mod_floor(k, static_cast<std::int64_t>(q_) - 1)]};
}

std::uint32_t FieldCtx::order(FieldElt u) const {
  const std::uint32_t units = q_ - 1;
  return units / std::gcd(units, discrete_log(u));
}

std::vector<FieldElt> FieldCtx::elements() const {
  std::vector<FieldElt> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::vector<FieldElt> FieldCtx::units() const {
  std::vector<FieldElt> out(q_ - 1);
  for (std::uint32_t i = 1; i < q_; ++i) out[i - 1] = {i};
  return out;
}

bool Subgroup::contains(FieldElt h) const {
  if (h.v == 0 || !field->contains(h)) return false;
  return field->discrete_log(h) % index == 0;
}

std::uint32_t Subgroup::log(FieldElt h) const {
  if (!contains(h)) throw Error(ErrorCode::NotInSubgroup, "element is not in H");
  return field->discrete_log(h) / index;
}

Subgroup subgroup_of_index(const FieldRef& field, std::uint32_t m) {
  const std::uint32_t units = field->q() - 1;
  if (m == 0 || units % m != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(m) + " does not divide " + std::to_string(units));
  Subgroup H;
  H.field = field;
  H.index = m;
  H.order = units / m;
  H.generator = field->exp_g(m);
  H.members.reserve(H.order);
  for (std::uint32_t i = 0; i < H.order; ++i) H.members.push_back(field->exp_g(std::int64_t{m} * i));
  std::sort(H.members.begin(), H.members.end());
  return H;
}

OrbitPartition orbit_partition(const Subgroup& H, bool include_zero) {
  const auto& F = *H.field;
  OrbitPartition part;
  part.includes_zero = include_zero;
  part.orbit_of.assign(F.q(), -1);
  if (include_zero) {
    part.orbits.push_back({F.zero()});
    part.reps.push_back(F.zero());
    part.orbit_of[0] = 0;
  }
  for (std::uint32_t x = 1; x < F.q(); ++x) {
    if (part.orbit_of[x] >= 0) continue;
    const auto id = static_cast<std::int32_t>(part.orbits.size());
    std::vector<FieldElt> orbit;
    orbit.reserve(H.order);
    for (auto h : H.members) {
      const FieldElt y = F.mul(h, FieldElt{x});
      orbit.push_back(y);
      part.orbit_of[y.v] = id;
    }
    std::sort(orbit.begin(), orbit.end());
    part.reps.push_back(FieldElt{x});  // first unseen index is the orbit minimum
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

bool is_h_closed(const Subgroup& H, std::span<const FieldElt> set) {
  const auto& F = *H.field;
  std::vector<bool> in(F.q(), false);
  for (auto x : set) {
    if (!F.contains(x)) throw Error(ErrorCode::InvalidArgument, "element out of range");
    in[x.v] = true;
  }
  for (auto x : set)
    for (auto h : H.members)
      if (!in[F.mul(h, x).v]) return false;
  return true;
}

}  // namespace ffm
