#pragma once

// Additive and multiplicative characters of GF(q), characters of subgroups,
// Gauss and Jacobi sums.
//
// Every value for a field context lives in Q(zeta_N) with N = p(q-1), using
// zeta_p = zeta_N^(q-1) and zeta_{q-1} = zeta_N^p. Characters are handled
// through their exponent of zeta_N so that sums can be accumulated as counts.

#include <cstdint>
#include <vector>

#include "ffm/cyclo.hpp"
#include "ffm/field.hpp"

namespace ffm {

struct Ambient {
  FieldRef field;
  CycloRef cf;
  std::uint32_t N = 1;

  std::int64_t zeta_p_exp() const { return field->q() - 1; }
  std::int64_t zeta_unit_exp() const { return field->p(); }
  CycloNum zeta(std::int64_t k) const { return CycloNum::zeta_pow(cf, k); }
  CycloNum integer(long k) const { return CycloNum::from_int(cf, k); }
  CycloNum zero() const { return CycloNum(cf); }
};

std::uint32_t ambient_conductor(const FieldCtx& F);
Ambient ambient(const FieldRef& F);

// x -> zeta_p^Tr(a x)
struct AdditiveChar {
  FieldRef field;
  FieldElt a{};

  std::int64_t exponent(FieldElt x) const;
};

// omega^j with omega(g) = zeta_{q-1}
struct MultChar {
  FieldRef field;
  std::uint32_t j = 0;

  bool is_trivial() const { return j == 0; }
  std::uint32_t order() const;
  MultChar conj() const;
  MultChar operator*(const MultChar& o) const;
  bool operator==(const MultChar& o) const { return j == o.j && field->q() == o.field->q(); }
  // Throws NotAUnit for 0.
  std::int64_t exponent(FieldElt u) const;
};

MultChar quadratic_char(const FieldRef& F);

// chi(g^(m i)) = zeta_{|H|}^(t i)
struct SubgroupChar {
  Subgroup H;
  std::uint32_t t = 0;

  bool is_trivial() const { return t == 0; }
  std::uint32_t order() const;
  SubgroupChar conj() const;
  // Throws NotInSubgroup.
  std::int64_t exponent(FieldElt h) const;
};

SubgroupChar subgroup_char(const Subgroup& H, std::uint32_t t);

CycloNum eval_additive(const AdditiveChar& e, FieldElt x);
CycloNum eval_mult(const MultChar& phi, FieldElt u);
CycloNum eval_subgroup(const SubgroupChar& chi, FieldElt h);

// The m characters of F_q^x restricting to chi on H, in increasing j.
std::vector<MultChar> extensions(const SubgroupChar& chi);
SubgroupChar restrict_to(const MultChar& phi, const Subgroup& H);

// G(phi) = sum over units a of eps(a) phi(a)
CycloNum gauss_sum(const MultChar& phi);
// J(chi, eta) = sum over a not in {0, 1} of chi(a) eta(1 - a)
CycloNum jacobi_sum(const MultChar& chi, const MultChar& eta);

}  // namespace ffm
