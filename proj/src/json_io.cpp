#include "ffm/json_io.hpp"

#include "ffm/error.hpp"

namespace ffm {

using nlohmann::json;

json to_json(const CycloNum& x) {
  json num = json::array(), den = json::array();
  for (std::size_t i = 0; i < x.num().size(); ++i) {
    const mpq_class c = x.coeff(i);
    num.push_back(c.get_num().get_str());
    den.push_back(c.get_den().get_str());
  }
  return {{"N", x.N()}, {"num", num}, {"den", den}};
}

CycloNum cyclo_from_json(const json& j) {
  const CycloRef F = CycloField::get(j.at("N").get<std::uint32_t>());
  const auto& num = j.at("num");
  const auto& den = j.at("den");
  if (num.size() != den.size()) throw Error(ErrorCode::InvalidArgument, "num and den lengths differ");
  std::vector<mpq_class> cs;
  mpz_class common = 1;
  for (std::size_t i = 0; i < num.size(); ++i) {
    mpq_class c(mpz_class(num[i].get<std::string>()), mpz_class(den[i].get<std::string>()));
    c.canonicalize();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den().get_mpz_t());
    cs.push_back(c);
  }
  std::vector<mpz_class> poly;
  for (const auto& c : cs) poly.push_back(c.get_num() * (common / c.get_den()));
  return CycloNum::from_poly(F, std::move(poly), common);
}

json approx_json(const CycloNum& x) {
  const auto z = x.to_complex();
  return json::array({z.real(), z.imag()});
}

json field_json(const FieldCtx& F) {
  return {{"p", F.p()}, {"n", F.n()}, {"modulus", F.modulus()}, {"generator", F.coeffs(F.generator())}};
}

FieldRef field_from_json(const json& j) {
  return FieldCtx::with_modulus(j.at("p").get<std::uint32_t>(), j.at("modulus").get<std::vector<std::uint32_t>>());
}

json elt_json(const FieldCtx& F, FieldElt x) { return F.coeffs(x); }

FieldElt elt_from_json(const FieldCtx& F, const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(F.q())) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return FieldElt{static_cast<std::uint32_t>(v)};
  }
  return F.from_coeffs(j.get<std::vector<std::uint32_t>>());
}

namespace {

json entries_json(const FieldCtx& F, const std::vector<CycloNum>& xs) {
  json out = json::array();
  for (std::uint32_t a = 0; a < xs.size(); ++a)
    if (!xs[a].is_zero()) out.push_back({{"element", elt_json(F, FieldElt{a})}, {"value", to_json(xs[a])}});
  return out;
}

std::vector<CycloNum> entries_from_json(const FieldRef& F, const json& j) {
  const Ambient amb = ambient(F);
  std::vector<CycloNum> xs(F->q(), amb.zero());
  for (const auto& e : j) {
    const FieldElt a = elt_from_json(*F, e.at("element"));
    CycloNum v = cyclo_from_json(e.at("value"));
    if (v.N() != amb.N) throw Error(ErrorCode::FieldMismatch, "coefficient conductor differs from the field's");
    xs[a.v] = std::move(v);
  }
  return xs;
}

}  // namespace

json to_json(const GroupRingElt& f) {
  return {{"field", field_json(*f.field)}, {"entries", entries_json(*f.field, f.coeffs)}};
}

GroupRingElt group_ring_from_json(const json& j) {
  const FieldRef F = field_from_json(j.at("field"));
  return {F, entries_from_json(F, j.at("entries"))};
}

json to_json(const SpectrumElt& s) {
  return {{"field", field_json(*s.field)}, {"spectrum", entries_json(*s.field, s.values)}};
}

SpectrumElt spectrum_from_json(const json& j) {
  const FieldRef F = field_from_json(j.at("field"));
  return {F, entries_from_json(F, j.at("spectrum"))};
}

json to_json(const CycloMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_json(M.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", M.rows()}, {"cols", M.cols()}, {"row_labels", M.row_labels}, {"col_labels", M.col_labels},
          {"entries", rows}};
}

json to_json(const NvmReport& r, std::uint64_t seed) {
  json j;
  if (r.has_subject) {
    j["q"] = r.q;
    j["p"] = r.p;
    j["n"] = r.n;
    j["m"] = r.m;
    j["chi"] = r.t;
  }
  j["dim"] = r.dim;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) {
    j["witness"] = {{"rows", r.witness->row_labels}, {"cols", r.witness->col_labels},
                    {"row_positions", r.witness->rows}, {"col_positions", r.witness->cols}};
  } else {
    j["witness"] = nullptr;
  }
  j["minors_checked"] = r.minors_checked;
  j["minors_required"] = r.minors_required;
  j["elapsed_ms"] = r.elapsed_ms;
  j["seed"] = seed;
  j["budget"] = {{"max_minors", r.budget.max_minors},
                 {"max_seconds", r.budget.max_seconds},
                 {"engine", r.budget.engine == MinorEngine::Modular ? "modular" : "exact"}};
  return j;
}

json to_json(const UncertaintyResult& r) {
  return {{"supp_f", r.supp_f},
          {"supp_fhat", r.supp_fhat},
          {"lhs", r.lhs},
          {"case", std::string(to_string(r.bound.kase))},
          {"bound", r.bound.bound},
          {"holds", r.holds},
          {"f0_zero", r.f0_zero},
          {"fhat0_zero", r.fhat0_zero},
          {"restricted", {{"supp_R_f", r.restricted_f},
                          {"supp_R_fhat", r.restricted_fhat},
                          {"orbits", r.orbit_count},
                          {"holds", r.restricted_holds}}}};
}

json to_json(const CdResult& r) {
  return {{"sumset", r.sumset},
          {"A_size", r.a_size},
          {"B_size", r.b_size},
          {"sumset_size", r.lhs},
          {"classical_bound", r.classical},
          {"classical_holds", r.classical_holds},
          {"hypotheses", {{"H_nontrivial", r.h_nontrivial},
                          {"zero_not_in_A", r.zero_not_in_a},
                          {"zero_not_in_B", r.zero_not_in_b},
                          {"zero_not_in_sum", r.zero_not_in_sum},
                          {"A_closed", r.a_closed},
                          {"B_closed", r.b_closed}}},
          {"improved_applicable", r.improved_applicable},
          {"improved_bound", r.improved},
          {"improved_holds", r.improved_holds}};
}

}  // namespace ffm
