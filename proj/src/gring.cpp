#include "ffm/gring.hpp"

#include <algorithm>
#include <limits>

#include "ffm/error.hpp"

namespace ffm {

namespace {

void check_same(const FieldRef& a, const FieldRef& b) {
  if (a->q() != b->q() || a->modulus() != b->modulus())
    throw Error(ErrorCode::FieldMismatch, "group ring elements over different fields");
}

}  // namespace

bool GroupRingElt::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

GroupRingElt GroupRingElt::operator+(const GroupRingElt& o) const {
  check_same(field, o.field);
  GroupRingElt r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

GroupRingElt GroupRingElt::scaled(const CycloNum& c) const {
  GroupRingElt r = *this;
  for (auto& x : r.coeffs)
    if (!x.is_zero()) x *= c;
  return r;
}

SpectrumElt SpectrumElt::pointwise(const SpectrumElt& o) const {
  check_same(field, o.field);
  SpectrumElt r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
  return r;
}

GroupRingElt zero_element(const FieldRef& F) {
  return {F, std::vector<CycloNum>(F->q(), ambient(F).zero())};
}

GroupRingElt delta(const FieldRef& F, FieldElt a) {
  GroupRingElt f = zero_element(F);
  f[a] = ambient(F).integer(1);
  return f;
}

GroupRingElt convolve(const GroupRingElt& f, const GroupRingElt& g) {
  check_same(f.field, g.field);
  const auto& F = *f.field;
  GroupRingElt h = zero_element(f.field);
  for (std::uint32_t b = 0; b < F.q(); ++b) {
    if (f.coeffs[b].is_zero()) continue;
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      if (g.coeffs[c].is_zero()) continue;
      h.coeffs[F.add(FieldElt{b}, FieldElt{c}).v] += f.coeffs[b] * g.coeffs[c];
    }
  }
  return h;
}

SpectrumElt fourier(const GroupRingElt& f) {
  const Ambient amb = ambient(f.field);
  const auto& F = *f.field;
  SpectrumElt out{f.field, {}};
  out.values.reserve(F.q());
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    CyclicSum acc(amb.cf);
    for (std::uint32_t b = 0; b < F.q(); ++b) {
      if (f.coeffs[b].is_zero()) continue;
      acc.add_rotated(f.coeffs[b], amb.zeta_p_exp() * F.abs_trace(F.mul(FieldElt{a}, FieldElt{b})));
    }
    out.values.push_back(acc.reduce());
  }
  return out;
}

GroupRingElt inv_fourier(const SpectrumElt& S) {
  const Ambient amb = ambient(S.field);
  const auto& F = *S.field;
  GroupRingElt out{S.field, {}};
  out.coeffs.reserve(F.q());
  const mpq_class inv_q(1, F.q());
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    CyclicSum acc(amb.cf);
    for (std::uint32_t b = 0; b < F.q(); ++b) {
      if (S.values[b].is_zero()) continue;
      acc.add_rotated(S.values[b], -amb.zeta_p_exp() * F.abs_trace(F.mul(FieldElt{a}, FieldElt{b})));
    }
    out.coeffs.push_back(acc.reduce().scalar_mul(inv_q));
  }
  return out;
}

std::vector<FieldElt> support(const GroupRingElt& f) {
  std::vector<FieldElt> s;
  for (std::uint32_t a = 0; a < f.coeffs.size(); ++a)
    if (!f.coeffs[a].is_zero()) s.push_back({a});
  return s;
}

std::vector<FieldElt> support(const SpectrumElt& F) {
  std::vector<FieldElt> s;
  for (std::uint32_t a = 0; a < F.values.size(); ++a)
    if (!F.values[a].is_zero()) s.push_back({a});
  return s;
}

std::vector<FieldElt> support_restricted(const std::vector<FieldElt>& supp, const std::vector<FieldElt>& R) {
  std::vector<FieldElt> out;
  for (auto r : R)
    if (std::binary_search(supp.begin(), supp.end(), r)) out.push_back(r);
  return out;
}

GroupRingElt act(FieldElt h, const GroupRingElt& f) {
  const auto& F = *f.field;
  GroupRingElt r = zero_element(f.field);
  for (std::uint32_t a = 0; a < F.q(); ++a) r.coeffs[F.mul(h, FieldElt{a}).v] = f.coeffs[a];
  return r;
}

bool is_chi_symmetric(const GroupRingElt& f, const SubgroupChar& chi) {
  const auto& F = *f.field;
  for (auto h : chi.H.members) {
    const std::int64_t e = chi.exponent(h);
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      const CycloNum& fa = f.coeffs[a];
      const CycloNum& fha = f.coeffs[F.mul(h, FieldElt{a}).v];
      if (fa.is_zero() && fha.is_zero()) continue;
      if (fha != fa.mul_zeta(e)) return false;
    }
  }
  return true;
}

bool is_chi_symmetric_spectrum(const SpectrumElt& S, const SubgroupChar& chi) {
  const auto& F = *S.field;
  for (auto h : chi.H.members) {
    const std::int64_t e = chi.exponent(h);
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      const CycloNum& Fa = S.values[a];
      const CycloNum& Fha = S.values[F.mul(h, FieldElt{a}).v];
      if (Fa.is_zero() && Fha.is_zero()) continue;
      if (Fha.mul_zeta(e) != Fa) return false;
    }
  }
  return true;
}

GroupRingElt u_basis(const SubgroupChar& chi, FieldElt a) {
  const Ambient amb = ambient(chi.H.field);
  const auto& F = *chi.H.field;
  GroupRingElt u = zero_element(chi.H.field);
  if (a.v == 0) {
    CyclicSum s(amb.cf);
    for (auto h : chi.H.members) s.add_root(chi.exponent(h));
    u.coeffs[0] = s.reduce();
    return u;
  }
  for (auto h : chi.H.members) u.coeffs[F.mul(h, a).v] = amb.zeta(chi.exponent(h));
  return u;
}

GroupRingElt symmetrize(const GroupRingElt& f, const SubgroupChar& chi) {
  const Ambient amb = ambient(f.field);
  const auto& F = *f.field;
  // (P f)_b = (1/|H|) sum_h chi(h) f_{h^-1 b}
  GroupRingElt out = zero_element(f.field);
  const mpq_class inv_order(1, chi.H.order);
  for (std::uint32_t b = 0; b < F.q(); ++b) {
    CyclicSum acc(amb.cf);
    bool any = false;
    for (auto h : chi.H.members) {
      const CycloNum& src = f.coeffs[F.mul(F.inv(h), FieldElt{b}).v];
      if (src.is_zero()) continue;
      acc.add_rotated(src, chi.exponent(h));
      any = true;
    }
    if (any) out.coeffs[b] = acc.reduce().scalar_mul(inv_order);
  }
  return out;
}

std::int64_t bounded_draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

GroupRingElt random_symmetric(const SubgroupChar& chi, std::mt19937_64& rng, std::int64_t box) {
  const Ambient amb = ambient(chi.H.field);
  const auto part = orbit_partition(chi.H, chi.is_trivial());
  GroupRingElt f = zero_element(chi.H.field);
  for (auto r : part.reps) f[r] = amb.integer(bounded_draw(rng, -box, box));
  return symmetrize(f, chi);
}

}  // namespace ffm
