#include "ffm/cfm.hpp"

#include <algorithm>
#include <set>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"
#include "ffm/gring.hpp"

namespace ffm {

std::vector<FieldElt> lex_reps(const SubgroupChar& chi) {
  return orbit_partition(chi.H, chi.is_trivial()).reps;
}

std::vector<FieldElt> random_reps(const SubgroupChar& chi, std::mt19937_64& rng) {
  const auto part = orbit_partition(chi.H, chi.is_trivial());
  std::vector<FieldElt> R;
  for (const auto& orbit : part.orbits)
    R.push_back(orbit[bounded_draw(rng, 0, static_cast<std::int64_t>(orbit.size()) - 1)]);
  for (std::size_t i = R.size(); i > 1; --i)
    std::swap(R[i - 1], R[bounded_draw(rng, 0, static_cast<std::int64_t>(i) - 1)]);
  return R;
}

void validate_reps(const SubgroupChar& chi, const std::vector<FieldElt>& R) {
  const auto part = orbit_partition(chi.H, chi.is_trivial());
  std::set<std::int32_t> seen;
  for (auto r : R) {
    if (!chi.H.field->contains(r)) throw Error(ErrorCode::BadRepresentatives, "element out of range");
    const std::int32_t o = part.orbit_of[r.v];
    if (o < 0) throw Error(ErrorCode::BadRepresentatives, "0 is not a representative for a nontrivial character");
    if (!seen.insert(o).second)
      throw Error(ErrorCode::BadRepresentatives, "two representatives of one orbit");
  }
  if (seen.size() != part.size()) throw Error(ErrorCode::BadRepresentatives, "an orbit has no representative");
}

CycloNum direct_entry(const SubgroupChar& chi, FieldElt r, FieldElt s) {
  const Ambient amb = ambient(chi.H.field);
  const auto& F = *chi.H.field;
  const FieldElt rs = F.mul(r, s);
  CyclicSum acc(amb.cf);
  for (auto h : chi.H.members) acc.add_root(chi.exponent(h) + amb.zeta_p_exp() * F.abs_trace(F.mul(h, rs)));
  return acc.reduce();
}

CompressedMatrix build_matrix(const SubgroupChar& chi, const std::vector<FieldElt>& R,
                              const std::vector<FieldElt>& S) {
  validate_reps(chi, R);
  validate_reps(chi, S);
  const Ambient amb = ambient(chi.H.field);
  CompressedMatrix C{chi, R, S, CycloMatrix(amb.cf, R.size(), S.size())};
  for (std::size_t i = 0; i < R.size(); ++i) {
    C.M.row_labels[i] = R[i].v;
    for (std::size_t j = 0; j < S.size(); ++j) C.M.at(i, j) = direct_entry(chi, R[i], S[j]);
  }
  for (std::size_t j = 0; j < S.size(); ++j) C.M.col_labels[j] = S[j].v;
  return C;
}

CompressedMatrix build_matrix(const SubgroupChar& chi) {
  const auto R = lex_reps(chi);
  return build_matrix(chi, R, R);
}

namespace {

struct GaussAverager {
  Ambient amb;
  SubgroupChar chi;
  std::vector<MultChar> ext;
  std::vector<CycloNum> gauss;

  explicit GaussAverager(const SubgroupChar& c) : amb(ambient(c.H.field)), chi(c), ext(extensions(c)) {
    for (const auto& e : ext) gauss.push_back(gauss_sum(e));
  }

  CycloNum entry(FieldElt r, FieldElt s) const {
    const auto& F = *chi.H.field;
    const FieldElt rs = F.mul(r, s);
    if (rs.v == 0) return amb.integer(chi.is_trivial() ? chi.H.order : 0);
    CyclicSum acc(amb.cf);
    for (std::size_t i = 0; i < ext.size(); ++i) acc.add_rotated(gauss[i], -ext[i].exponent(rs));
    return acc.reduce().scalar_mul(mpq_class(1, chi.H.index));
  }
};

}  // namespace

CycloNum entry_via_gauss(const SubgroupChar& chi, FieldElt r, FieldElt s) {
  return GaussAverager(chi).entry(r, s);
}

CycloMatrix matrix_via_gauss(const SubgroupChar& chi, const std::vector<FieldElt>& R,
                             const std::vector<FieldElt>& S) {
  const GaussAverager avg(chi);
  CycloMatrix M(avg.amb.cf, R.size(), S.size());
  for (std::size_t i = 0; i < R.size(); ++i) {
    M.row_labels[i] = R[i].v;
    for (std::size_t j = 0; j < S.size(); ++j) M.at(i, j) = avg.entry(R[i], S[j]);
  }
  for (std::size_t j = 0; j < S.size(); ++j) M.col_labels[j] = S[j].v;
  return M;
}

namespace {

CycloMatrix trig_model(std::uint32_t n, std::uint32_t lo, std::uint32_t hi, int sign) {
  const CycloRef F = CycloField::get(n);
  const std::uint32_t dim = hi - lo + 1;
  CycloMatrix M(F, dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    const std::int64_t r = lo + i;
    M.row_labels[i] = r;
    M.col_labels[i] = r;
    for (std::uint32_t j = 0; j < dim; ++j) {
      const std::int64_t rs = r * (lo + j);
      CyclicSum acc(F);
      acc.add_root(rs, 1);
      if (sign != 0) acc.add_root(-rs, sign);
      M.at(i, j) = acc.reduce();
    }
  }
  return M;
}

void require_odd(std::uint32_t n, std::uint32_t min) {
  if (n % 2 == 0) throw Error(ErrorCode::ParityError, "order must be odd, got " + std::to_string(n));
  if (n < min) throw Error(ErrorCode::InvalidArgument, "order must be at least " + std::to_string(min));
}

}  // namespace

CycloMatrix classical_dft(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
  return trig_model(n, 0, n - 1, 0);
}

CycloMatrix classical_dct(std::uint32_t n) {
  require_odd(n, 1);
  return trig_model(n, 0, (n - 1) / 2, 1);
}

CycloMatrix classical_dst(std::uint32_t n) {
  require_odd(n, 3);
  return trig_model(n, 1, (n - 1) / 2, -1);
}

std::string classical_scaling(std::string_view kind, std::uint32_t n) {
  const std::string N = std::to_string(n);
  if (kind == "dft") return "F = n^(-1/2) * U, n = " + N;
  if (kind == "dct") return "C = n^(-1/2) * D * U * D, D = diag(2^(-1/2), 1, ..., 1), n = " + N;
  if (kind == "dst") return "S = (i * n^(1/2))^(-1) * U, n = " + N;
  throw Error(ErrorCode::InvalidArgument, "unknown classical kind");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AllMinorsNonzero: return "AllMinorsNonzero";
    case Verdict::ZeroMinorFound: return "ZeroMinorFound";
    case Verdict::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

std::optional<SubfieldWitness> subfield_witness(const CompressedMatrix& C) {
  const auto& F = *C.chi.H.field;
  const auto& H = C.chi.H;
  std::uint32_t k = 0;
  for (std::uint32_t d = 1; d < F.n() && k == 0; ++d) {
    if (F.n() % d != 0) continue;
    bool inside = true;
    for (auto h : H.members)
      if (!F.in_subfield(h, d)) {
        inside = false;
        break;
      }
    if (inside) k = d;
  }
  if (k == 0) return std::nullopt;

  FieldElt b{0};
  for (std::uint32_t x = 1; x < F.q(); ++x)
    if (F.rel_trace(FieldElt{x}, k).v == 0) {
      b = {x};
      break;
    }
  if (b.v == 0) return std::nullopt;

  const auto part = orbit_partition(H, C.chi.is_trivial());
  auto position = [&](const std::vector<FieldElt>& reps, FieldElt member) {
    const std::int32_t o = part.orbit_of[member.v];
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (part.orbit_of[reps[i].v] == o) return i;
    throw Error(ErrorCode::BadRepresentatives, "orbit missing from representatives");
  };

  SubfieldWitness w;
  w.subfield_degree = k;
  w.b = b;
  const std::size_t row_b = position(C.R, b);
  const std::size_t col_1 = position(C.S, F.one());
  if (C.chi.is_trivial()) {
    w.rows = {position(C.R, F.zero()), row_b};
    w.cols = {position(C.S, F.zero()), col_1};
    std::sort(w.rows.begin(), w.rows.end());
    std::sort(w.cols.begin(), w.cols.end());
  } else {
    w.rows = {row_b};
    w.cols = {col_1};
  }
  return w;
}

std::vector<ScanRow> nvm_scan(const ScanOptions& opt) {
  std::vector<ScanRow> rows;
  std::mt19937_64 rng(opt.seed);
  for (std::uint32_t q = std::max<std::uint32_t>(opt.qmin, 2); q <= opt.qmax; ++q) {
    const auto [p, n] = prime_power(q);
    if (p == 0) continue;
    const FieldRef F = FieldCtx::construct(p, n);
    for (auto m64 : divisors(q - 1)) {
      const auto m = static_cast<std::uint32_t>(m64);
      if (opt.index && *opt.index != m) continue;
      const Subgroup H = subgroup_of_index(F, m);
      for (std::uint32_t t = 0; t < H.order; ++t) {
        if (opt.chi && *opt.chi != t) continue;
        const SubgroupChar chi{H, t};
        std::vector<FieldElt> R = opt.random_reps ? random_reps(chi, rng) : lex_reps(chi);
        std::vector<FieldElt> S = opt.random_reps ? random_reps(chi, rng) : R;
        ScanRow row{q, p, n, m, t, {}};
        row.report = check_nvm(build_matrix(chi, R, S), opt.budget);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace ffm
