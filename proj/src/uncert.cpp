#include "ffm/uncert.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"

namespace ffm {

std::string_view to_string(BoundCase c) {
  switch (c) {
    case BoundCase::Nontrivial: return "Nontrivial";
    case BoundCase::TrivialBothZero: return "TrivialBothZero";
    case BoundCase::TrivialOneZero: return "TrivialOneZero";
    case BoundCase::TrivialNeitherZero: return "TrivialNeitherZero";
  }
  return "Unknown";
}

UncertaintyBound bound_for(const SubgroupChar& chi, bool f0_zero, bool fhat0_zero) {
  const std::uint64_t q = chi.H.field->q();
  const std::uint64_t h = chi.H.order;
  if (!chi.is_trivial()) return {BoundCase::Nontrivial, q + h - 1};
  if (f0_zero && fhat0_zero) return {BoundCase::TrivialBothZero, q + 2 * h - 1};
  if (f0_zero || fhat0_zero) return {BoundCase::TrivialOneZero, q + h};
  return {BoundCase::TrivialNeitherZero, q + 1};
}

void require_nvm(const SubgroupChar& chi, const NvmReport& cert) {
  const auto& F = *chi.H.field;
  if (!cert.has_subject || cert.verdict != Verdict::AllMinorsNonzero || cert.p != F.p() || cert.n != F.n() ||
      cert.m != chi.H.index || cert.t != chi.t || cert.modulus != F.modulus())
    throw Error(ErrorCode::NvmNotEstablished,
                "no AllMinorsNonzero report for q=" + std::to_string(F.q()) + " m=" + std::to_string(chi.H.index) +
                    " t=" + std::to_string(chi.t));
}

NvmReport establish_nvm(const SubgroupChar& chi, const NvmBudget& budget) {
  return check_nvm(build_matrix(chi), budget);
}

UncertaintyResult verify_uncertainty(const GroupRingElt& f, const SubgroupChar& chi, const NvmReport& cert) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroElement, "the bound concerns nonzero elements");
  if (!is_chi_symmetric(f, chi)) throw Error(ErrorCode::NotSymmetric, "element is not chi-symmetric");
  require_nvm(chi, cert);

  const SpectrumElt fh = fourier(f);
  const auto sf = support(f);
  const auto sh = support(fh);
  UncertaintyResult res;
  res.supp_f = sf.size();
  res.supp_fhat = sh.size();
  res.lhs = res.supp_f + res.supp_fhat;
  res.f0_zero = f.coeffs[0].is_zero();
  res.fhat0_zero = fh.values[0].is_zero();
  res.bound = bound_for(chi, res.f0_zero, res.fhat0_zero);
  res.holds = res.lhs >= res.bound.bound;

  const auto R = lex_reps(chi);
  res.orbit_count = R.size();
  res.restricted_f = support_restricted(sf, R).size();
  res.restricted_fhat = support_restricted(sh, R).size();
  res.restricted_holds = res.restricted_f + res.restricted_fhat > res.orbit_count;
  return res;
}

std::uint64_t extremal_threshold(const SubgroupChar& chi, bool zero_in_A, bool zero_in_B) {
  const std::uint64_t q = chi.H.field->q();
  const std::uint64_t h = chi.H.order;
  if (!chi.is_trivial()) return q + h - 1;
  const int zeros = static_cast<int>(zero_in_A) + static_cast<int>(zero_in_B);
  if (zeros == 0) return q + 2 * h - 1;
  if (zeros == 1) return q + h;
  return q + 1;
}

std::vector<std::vector<std::size_t>> support_cover(std::size_t u, std::size_t n) {
  if (n == 0 || u < n) throw Error(ErrorCode::InvalidArgument, "cover needs u >= n >= 1");
  std::vector<std::vector<std::size_t>> cover;
  std::vector<std::size_t> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = i;
  cover.push_back(first);
  std::size_t next = n;
  const std::size_t r = (u - n) % n;
  if (r > 0) {
    // The leftover partial block borrows the tail of the first block.
    std::vector<std::size_t> second;
    for (std::size_t i = 0; i < r; ++i) second.push_back(next++);
    for (std::size_t i = r; i < n; ++i) second.push_back(i);
    std::sort(second.begin(), second.end());
    cover.push_back(second);
  }
  while (next < u) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < n; ++i) block.push_back(next++);
    cover.push_back(block);
  }
  return cover;
}

namespace {

std::vector<FieldElt> normalized(const FieldCtx& F, std::vector<FieldElt> xs) {
  for (auto x : xs)
    if (!F.contains(x)) throw Error(ErrorCode::InvalidArgument, "element out of range");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool contains(const std::vector<FieldElt>& sorted, FieldElt x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// f in span{u_s : s in S} with fhat(eps_t) = 1 for the first t in T and
// fhat vanishing on R \ T. Positions index R.
GroupRingElt base_extremal(const SubgroupChar& chi, const std::vector<FieldElt>& R, const CycloMatrix& M,
                           const std::vector<std::size_t>& S, const std::vector<std::size_t>& T) {
  const std::size_t t = T.front();
  std::vector<std::size_t> Y;
  for (std::size_t y = 0; y < R.size(); ++y)
    if (y == t || !std::binary_search(T.begin(), T.end(), y)) Y.push_back(y);
  if (Y.size() != S.size()) throw Error(ErrorCode::InvalidArgument, "piece sizes do not sum to |R| + 1");

  const Ambient amb = ambient(chi.H.field);
  // fhat(eps_y) = sum_s c_s M[s][y]
  CycloMatrix A(amb.cf, Y.size(), S.size());
  std::vector<CycloNum> rhs(Y.size(), amb.zero());
  for (std::size_t i = 0; i < Y.size(); ++i) {
    for (std::size_t j = 0; j < S.size(); ++j) A.at(i, j) = M.at(S[j], Y[i]);
    if (Y[i] == t) rhs[i] = amb.integer(1);
  }
  const auto c = solve_exact(A, rhs);

  GroupRingElt f = zero_element(chi.H.field);
  for (std::size_t j = 0; j < S.size(); ++j) {
    const GroupRingElt u = u_basis(chi, R[S[j]]);
    for (std::size_t a = 0; a < u.coeffs.size(); ++a)
      if (!u.coeffs[a].is_zero()) f.coeffs[a] += u.coeffs[a] * c[j];
  }
  return f;
}

}  // namespace

GroupRingElt construct_extremal(const SubgroupChar& chi, const SupportSpec& spec, const NvmReport& cert) {
  const auto& F = *chi.H.field;
  const auto A = normalized(F, spec.A);
  const auto B = normalized(F, spec.B);
  if (!is_h_closed(chi.H, A)) throw Error(ErrorCode::NotHClosed, "A is not a union of H-orbits");
  if (!is_h_closed(chi.H, B)) throw Error(ErrorCode::NotHClosed, "B is not a union of H-orbits");
  const bool zA = contains(A, F.zero());
  const bool zB = contains(B, F.zero());
  if (!chi.is_trivial() && (zA || zB))
    throw Error(ErrorCode::ZeroMembershipViolation, "0 cannot be in A or B for a nontrivial character");
  const std::uint64_t need = extremal_threshold(chi, zA, zB);
  if (A.size() + B.size() < need)
    throw Error(ErrorCode::ThresholdNotMet, "|A| + |B| = " + std::to_string(A.size() + B.size()) +
                                                " is below " + std::to_string(need));
  require_nvm(chi, cert);

  const auto R = lex_reps(chi);
  const CycloMatrix M = build_matrix(chi, R, R).M;
  std::vector<std::size_t> S, T;
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (contains(A, R[i])) S.push_back(i);
    if (contains(B, R[i])) T.push_back(i);
  }

  // U lists S (row side) then T (spectral side).
  const std::size_t n = R.size() + 1;
  const auto cover = support_cover(S.size() + T.size(), n);
  std::vector<GroupRingElt> pieces;
  for (const auto& block : cover) {
    std::vector<std::size_t> Sj, Tj;
    for (auto idx : block) {
      if (idx < S.size()) Sj.push_back(S[idx]);
      else Tj.push_back(T[idx - S.size()]);
    }
    pieces.push_back(base_extremal(chi, R, M, Sj, Tj));
  }

  GroupRingElt f = pieces[0];
  if (pieces.size() > 1) {
    // Smallest positive integer lambda with no cancellation on the overlap.
    std::vector<std::size_t> overlap;
    std::set_intersection(cover[0].begin(), cover[0].end(), cover[1].begin(), cover[1].end(),
                          std::back_inserter(overlap));
    const SpectrumElt h1 = fourier(pieces[0]);
    const SpectrumElt h2 = fourier(pieces[1]);
    auto coord = [&](std::size_t piece, std::size_t idx) -> CycloNum {
      if (idx < S.size()) return pieces[piece].coeffs[R[S[idx]].v];
      return (piece == 0 ? h1 : h2).values[R[T[idx - S.size()]].v];
    };
    long lambda = 1;
    for (;; ++lambda) {
      bool ok = true;
      for (auto idx : overlap) {
        if ((coord(0, idx).scalar_mul(mpq_class(lambda)) + coord(1, idx)).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
    f = pieces[0].scaled(ambient(chi.H.field).integer(lambda));
    for (std::size_t j = 1; j < pieces.size(); ++j) f = f + pieces[j];
  }

  if (support(f) != A || support(fourier(f)) != B)
    throw Error(ErrorCode::InvalidArgument, "constructed element failed support verification");
  return f;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

Mask rotate(Mask a, std::uint32_t b, std::uint32_t p) {
  if (b == 0) return a;
  const Mask full = (Mask{1} << p) - 1;
  return ((a << b) | (a >> (p - b))) & full;
}

Mask sumset_mask(Mask a, Mask b, std::uint32_t p) {
  Mask s = 0;
  for (std::uint32_t x = 0; x < p; ++x)
    if (b >> x & 1) s |= rotate(a, x, p);
  return s;
}

Mask to_mask(const std::vector<std::uint32_t>& xs, std::uint32_t p) {
  Mask m = 0;
  for (auto x : xs) m |= Mask{1} << (x % p);
  return m;
}

bool closed_mask(const Subgroup& H, Mask a) {
  const auto& F = *H.field;
  for (std::uint32_t x = 0; x < F.p(); ++x) {
    if (!(a >> x & 1)) continue;
    for (auto h : H.members)
      if (!(a >> F.mul(h, FieldElt{x}).v & 1)) return false;
  }
  return true;
}

}  // namespace

CdResult cd_check(const Subgroup& H, const std::vector<std::uint32_t>& A, const std::vector<std::uint32_t>& B) {
  const auto& F = *H.field;
  if (F.n() != 1) throw Error(ErrorCode::InvalidArgument, "sumset checks are over prime fields");
  const std::uint32_t p = F.p();
  if (p > 31) throw Error(ErrorCode::CapExceeded, "sumset checks support p <= 31");
  if (A.empty() || B.empty()) throw Error(ErrorCode::InvalidArgument, "A and B must be nonempty");
  const Mask a = to_mask(A, p), b = to_mask(B, p);
  const Mask s = sumset_mask(a, b, p);

  CdResult r;
  for (std::uint32_t x = 0; x < p; ++x)
    if (s >> x & 1) r.sumset.push_back(x);
  r.a_size = std::popcount(a);
  r.b_size = std::popcount(b);
  r.lhs = r.sumset.size();
  r.classical = std::min<std::size_t>(r.a_size + r.b_size - 1, p);
  r.classical_holds = r.lhs >= r.classical;
  r.h_nontrivial = !H.is_trivial();
  r.zero_not_in_a = !(a & 1);
  r.zero_not_in_b = !(b & 1);
  r.zero_not_in_sum = !(s & 1);
  r.a_closed = closed_mask(H, a);
  r.b_closed = closed_mask(H, b);
  r.improved_applicable = p % 2 == 1 && r.h_nontrivial && r.zero_not_in_a && r.zero_not_in_b &&
                          r.zero_not_in_sum && r.a_closed && r.b_closed;
  r.improved = r.a_size + r.b_size;
  r.improved_holds = r.a_size + r.b_size <= p - 1 && r.lhs >= r.improved;
  return r;
}

CdSweep cd_exhaustive(std::uint32_t p) {
  if (!is_prime(p) || p > 20) throw Error(ErrorCode::InvalidArgument, "exhaustive sweep needs a prime p <= 19");
  CdSweep sweep;
  sweep.p = p;
  const FieldRef F = FieldCtx::construct(p, 1);

  for (auto m64 : divisors(p - 1)) {
    const auto m = static_cast<std::uint32_t>(m64);
    const Subgroup H = subgroup_of_index(F, m);
    if (H.is_trivial() || p == 2) continue;
    const auto part = orbit_partition(H, false);
    std::vector<Mask> orbit_masks;
    for (const auto& o : part.orbits) {
      Mask om = 0;
      for (auto x : o) om |= Mask{1} << x.v;
      orbit_masks.push_back(om);
    }
    const std::uint32_t k = static_cast<std::uint32_t>(orbit_masks.size());
    for (std::uint32_t sa = 1; sa < (1u << k); ++sa) {
      Mask a = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        if (sa >> i & 1) a |= orbit_masks[i];
      for (std::uint32_t sb = 1; sb < (1u << k); ++sb) {
        Mask b = 0;
        for (std::uint32_t i = 0; i < k; ++i)
          if (sb >> i & 1) b |= orbit_masks[i];
        const Mask s = sumset_mask(a, b, p);
        if (s & 1) continue;
        ++sweep.closed_pairs;
        const int na = std::popcount(a), nb = std::popcount(b), ns = std::popcount(s);
        if (na + nb > static_cast<int>(p) - 1 || ns < na + nb)
          sweep.violations.push_back("p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                     " A=" + std::to_string(a) + " B=" + std::to_string(b));
      }
    }
  }

  const Mask top = Mask{1} << p;
  for (Mask a = 1; a < top; ++a) {
    const int na = std::popcount(a);
    for (Mask b = 1; b < top; ++b) {
      ++sweep.classical_pairs;
      const int need = std::min<int>(na + std::popcount(b) - 1, static_cast<int>(p));
      if (std::popcount(sumset_mask(a, b, p)) < need)
        sweep.violations.push_back("classical p=" + std::to_string(p) + " A=" + std::to_string(a) +
                                   " B=" + std::to_string(b));
    }
  }
  return sweep;
}

bool consecutive_closure_check(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::NotPrime, "p must be an odd prime");
  const std::uint64_t last = std::uint64_t{a} + b;
  const bool low = last <= (p - 1) / 2;
  const bool high = a >= (p + 1) / 2 && last <= p;  // p stands for 0
  if (a >= p || !(low || high)) throw Error(ErrorCode::RangeViolation, "A leaves both half-ranges");
  if (a == 0 && b == 0) throw Error(ErrorCode::RangeViolation, "A = {0} is excluded");

  const FieldRef F = FieldCtx::construct(p, 1);
  std::vector<FieldElt> A;
  for (std::uint64_t x = a; x <= last; ++x) A.push_back(FieldElt{static_cast<std::uint32_t>(x % p)});
  for (auto m64 : divisors(p - 1)) {
    const Subgroup H = subgroup_of_index(F, static_cast<std::uint32_t>(m64));
    if (H.is_trivial()) continue;
    if (is_h_closed(H, A)) return false;
  }
  return true;
}

}  // namespace ffm
