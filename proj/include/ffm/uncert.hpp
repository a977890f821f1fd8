#pragma once

// Support-size lower bounds for chi-symmetric elements, elements that meet
// them exactly, and the H-closed Cauchy-Davenport checks.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffm/cfm.hpp"
#include "ffm/gring.hpp"

namespace ffm {

enum class BoundCase { Nontrivial, TrivialBothZero, TrivialOneZero, TrivialNeitherZero };
std::string_view to_string(BoundCase c);

struct UncertaintyBound {
  BoundCase kase = BoundCase::Nontrivial;
  std::uint64_t bound = 0;
};

// Flags are ignored for nontrivial chi, where f_0 and fhat(eps_0) vanish.
UncertaintyBound bound_for(const SubgroupChar& chi, bool f0_zero, bool fhat0_zero);

// Throws NvmNotEstablished unless cert is an AllMinorsNonzero report for
// this field and character.
void require_nvm(const SubgroupChar& chi, const NvmReport& cert);
// Scans the lex-representative matrix of chi.
NvmReport establish_nvm(const SubgroupChar& chi, const NvmBudget& budget = {});

struct UncertaintyResult {
  std::uint64_t supp_f = 0;
  std::uint64_t supp_fhat = 0;
  std::uint64_t lhs = 0;
  UncertaintyBound bound;
  bool holds = false;
  bool f0_zero = false;
  bool fhat0_zero = false;
  // Counts on one representative per orbit: supp_R(f) + supp_R(fhat) > |R|.
  std::uint64_t restricted_f = 0;
  std::uint64_t restricted_fhat = 0;
  std::uint64_t orbit_count = 0;
  bool restricted_holds = false;
};

// Throws ZeroElement, NotSymmetric, NvmNotEstablished.
UncertaintyResult verify_uncertainty(const GroupRingElt& f, const SubgroupChar& chi, const NvmReport& cert);

struct SupportSpec {
  std::vector<FieldElt> A;  // target supp(f)
  std::vector<FieldElt> B;  // target supp(fhat), as twists
};

// Smallest |A| + |B| for which an element with these supports exists.
std::uint64_t extremal_threshold(const SubgroupChar& chi, bool zero_in_A, bool zero_in_B);

// Index sets covering 0..u-1 by n-element blocks, pairwise disjoint except
// the first two, whose overlap is below n. Requires u >= n >= 1.
std::vector<std::vector<std::size_t>> support_cover(std::size_t u, std::size_t n);

// A chi-symmetric f with supp(f) = A and supp(fhat) = B, verified before
// returning. Throws NotHClosed, ZeroMembershipViolation, ThresholdNotMet,
// NvmNotEstablished.
GroupRingElt construct_extremal(const SubgroupChar& chi, const SupportSpec& spec, const NvmReport& cert);

struct CdResult {
  std::vector<std::uint32_t> sumset;
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t lhs = 0;        // |A + B|
  std::size_t classical = 0;  // min(|A| + |B| - 1, p)
  bool classical_holds = false;
  bool h_nontrivial = false;
  bool zero_not_in_a = false;
  bool zero_not_in_b = false;
  bool zero_not_in_sum = false;
  bool a_closed = false;
  bool b_closed = false;
  bool improved_applicable = false;
  std::size_t improved = 0;     // |A| + |B|
  bool improved_holds = false;  // |A| + |B| <= p - 1 and |A + B| >= |A| + |B|
};

// Sets are residues mod p; H must live in a prime field.
CdResult cd_check(const Subgroup& H, const std::vector<std::uint32_t>& A, const std::vector<std::uint32_t>& B);

struct CdSweep {
  std::uint32_t p = 0;
  std::uint64_t closed_pairs = 0;     // H-closed pairs avoiding 0 in A + B, over all nontrivial H
  std::uint64_t classical_pairs = 0;  // all nonempty pairs of subsets of F_p
  std::vector<std::string> violations;
};

CdSweep cd_exhaustive(std::uint32_t p);

// A = {a, ..., a + b} mod p inside {0..(p-1)/2} or {(p+1)/2..p-1, 0}.
// True iff no nontrivial subgroup of F_p^x leaves A closed. Throws
// RangeViolation outside those ranges or for A = {0}.
bool consecutive_closure_check(std::uint32_t p, std::uint32_t a, std::uint32_t b);

}  // namespace ffm
