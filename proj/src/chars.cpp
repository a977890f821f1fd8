#include "ffm/chars.hpp"

#include <numeric>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"

namespace ffm {

std::uint32_t ambient_conductor(const FieldCtx& F) { return F.p() * (F.q() - 1); }

Ambient ambient(const FieldRef& F) {
  Ambient amb;
  amb.field = F;
  amb.N = ambient_conductor(*F);
  amb.cf = CycloField::get(amb.N);
  return amb;
}

std::int64_t AdditiveChar::exponent(FieldElt x) const {
  return static_cast<std::int64_t>(field->q() - 1) * field->abs_trace(field->mul(a, x));
}

std::uint32_t MultChar::order() const {
  const std::uint32_t units = field->q() - 1;
  return units / std::gcd(units, j);
}

MultChar MultChar::conj() const {
  const std::uint32_t units = field->q() - 1;
  return {field, (units - j) % units};
}

MultChar MultChar::operator*(const MultChar& o) const {
  if (field->q() != o.field->q()) throw Error(ErrorCode::FieldMismatch, "characters of different fields");
  return {field, (j + o.j) % (field->q() - 1)};
}

std::int64_t MultChar::exponent(FieldElt u) const {
  if (u.v == 0) throw Error(ErrorCode::NotAUnit, "multiplicative character at 0");
  const std::int64_t N = ambient_conductor(*field);
  return mod_floor(static_cast<std::int64_t>(field->p()) * j % N * field->discrete_log(u), N);
}

MultChar quadratic_char(const FieldRef& F) {
  if (F->q() % 2 == 0) throw Error(ErrorCode::InvalidArgument, "no quadratic character in characteristic 2");
  return {F, (F->q() - 1) / 2};
}

std::uint32_t SubgroupChar::order() const { return H.order / std::gcd(H.order, t); }

SubgroupChar SubgroupChar::conj() const { return {H, (H.order - t) % H.order}; }

std::int64_t SubgroupChar::exponent(FieldElt h) const {
  const auto& F = *H.field;
  const std::int64_t N = ambient_conductor(F);
  // zeta_{|H|} = zeta_N^(p m)
  return mod_floor(static_cast<std::int64_t>(F.p()) * H.index % N * t % N * H.log(h), N);
}

SubgroupChar subgroup_char(const Subgroup& H, std::uint32_t t) {
  if (t >= H.order) throw Error(ErrorCode::InvalidArgument, "character exponent out of range");
  return {H, t};
}

CycloNum eval_additive(const AdditiveChar& e, FieldElt x) {
  return CycloNum::zeta_pow(CycloField::get(ambient_conductor(*e.field)), e.exponent(x));
}

CycloNum eval_mult(const MultChar& phi, FieldElt u) {
  return CycloNum::zeta_pow(CycloField::get(ambient_conductor(*phi.field)), phi.exponent(u));
}

CycloNum eval_subgroup(const SubgroupChar& chi, FieldElt h) {
  return CycloNum::zeta_pow(CycloField::get(ambient_conductor(*chi.H.field)), chi.exponent(h));
}

std::vector<MultChar> extensions(const SubgroupChar& chi) {
  std::vector<MultChar> out;
  for (std::uint32_t i = 0; i < chi.H.index; ++i) out.push_back({chi.H.field, chi.t + chi.H.order * i});
  return out;
}

SubgroupChar restrict_to(const MultChar& phi, const Subgroup& H) {
  if (phi.field->q() != H.field->q()) throw Error(ErrorCode::FieldMismatch, "character and subgroup differ");
  return {H, phi.j % H.order};
}

CycloNum gauss_sum(const MultChar& phi) {
  const Ambient amb = ambient(phi.field);
  const auto& F = *phi.field;
  CyclicSum acc(amb.cf);
  const std::int64_t pj = static_cast<std::int64_t>(F.p()) * phi.j % amb.N;
  for (std::uint32_t a = 1; a < F.q(); ++a) {
    const FieldElt x{a};
    acc.add_root(amb.zeta_p_exp() * F.abs_trace(x) + pj * F.discrete_log(x));
  }
  return acc.reduce();
}

CycloNum jacobi_sum(const MultChar& chi, const MultChar& eta) {
  if (chi.field->q() != eta.field->q()) throw Error(ErrorCode::FieldMismatch, "characters of different fields");
  const Ambient amb = ambient(chi.field);
  const auto& F = *chi.field;
  CyclicSum acc(amb.cf);
  for (std::uint32_t a = 2; a < F.q(); ++a) {
    const FieldElt x{a};
    const FieldElt y = F.sub(F.one(), x);
    if (y.v == 0) continue;
    acc.add_root(chi.exponent(x) + eta.exponent(y));
  }
  return acc.reduce();
}

}  // namespace ffm
