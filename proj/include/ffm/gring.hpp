#pragma once

// The group ring C[F_q] with cyclotomic coefficients, its Fourier transform,
// and the chi-symmetry machinery. Elements and spectra are dense: entry a of
// a spectrum is the value at the additive character eps_a.

#include <cstdint>
#include <random>
#include <vector>

#include "ffm/chars.hpp"

namespace ffm {

struct GroupRingElt {
  FieldRef field;
  std::vector<CycloNum> coeffs;  // indexed by element

  const CycloNum& operator[](FieldElt a) const { return coeffs[a.v]; }
  CycloNum& operator[](FieldElt a) { return coeffs[a.v]; }
  bool is_zero() const;
  bool operator==(const GroupRingElt& o) const { return coeffs == o.coeffs; }
  GroupRingElt operator+(const GroupRingElt& o) const;
  GroupRingElt scaled(const CycloNum& c) const;
};

struct SpectrumElt {
  FieldRef field;
  std::vector<CycloNum> values;  // indexed by twist a, standing for eps_a

  const CycloNum& operator[](FieldElt a) const { return values[a.v]; }
  bool operator==(const SpectrumElt& o) const { return values == o.values; }
  SpectrumElt pointwise(const SpectrumElt& o) const;
};

GroupRingElt zero_element(const FieldRef& F);
// [a]
GroupRingElt delta(const FieldRef& F, FieldElt a);

GroupRingElt convolve(const GroupRingElt& f, const GroupRingElt& g);
SpectrumElt fourier(const GroupRingElt& f);
GroupRingElt inv_fourier(const SpectrumElt& F);

std::vector<FieldElt> support(const GroupRingElt& f);
std::vector<FieldElt> support(const SpectrumElt& F);
std::vector<FieldElt> support_restricted(const std::vector<FieldElt>& supp, const std::vector<FieldElt>& R);

// h . f = sum of f_a [h a]
GroupRingElt act(FieldElt h, const GroupRingElt& f);

// f_{h a} = chi(h) f_a for all h, a
bool is_chi_symmetric(const GroupRingElt& f, const SubgroupChar& chi);
// chi(h) F(eps_{h a}) = F(eps_a) for all h, a
bool is_chi_symmetric_spectrum(const SpectrumElt& F, const SubgroupChar& chi);

// sum over h of chi(h) [h a]
GroupRingElt u_basis(const SubgroupChar& chi, FieldElt a);
// (1/|H|) sum over h of chi(h) (h . f)
GroupRingElt symmetrize(const GroupRingElt& f, const SubgroupChar& chi);

// Bounded uniform draw in [lo, hi] by rejection, so results do not depend on
// the standard library's distribution implementation.
std::int64_t bounded_draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

// Integer coefficients in [-box, box] on each orbit representative, then
// symmetrized. May be zero.
GroupRingElt random_symmetric(const SubgroupChar& chi, std::mt19937_64& rng, std::int64_t box = 1);

}  // namespace ffm
