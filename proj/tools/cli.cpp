#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"
#include "ffm/json_io.hpp"

namespace ffm::cli {

using nlohmann::json;

std::vector<std::uint32_t> parse_model(const std::string& text, std::uint32_t p) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty model polynomial");
  std::vector<std::int64_t> coef;
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t c = 1;
    bool has_digits = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      c = std::stoll(s.substr(start, i - start));
      has_digits = true;
    }
    std::size_t deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') ++i;
      start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > start) deg = std::stoul(s.substr(start, i - start));
    } else if (!has_digits) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse model '" + text + "'");
    }
    if (coef.size() <= deg) coef.resize(deg + 1, 0);
    coef[deg] += sign * c;
  }
  std::vector<std::uint32_t> out;
  for (auto c : coef) out.push_back(static_cast<std::uint32_t>(mod_floor(c, p)));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

namespace {

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

std::filesystem::path report_path(const std::string& explicit_path, const std::string& fallback) {
  std::filesystem::path path = explicit_path.empty() ? fallback : explicit_path;
  if (const char* dir = std::getenv("FFM_REPORT_DIR"); dir && *dir && path.is_relative())
    path = std::filesystem::path(dir) / path;
  return path;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

void write_report(const std::string& explicit_path, const std::string& fallback, const json& config,
                  const json& results) {
  const json report = {{"config", config}, {"results", results}, {"version", kVersion}};
  const auto path = report_path(explicit_path, fallback);
  write_text(path, report.dump(2) + "\n");
  std::cout << "report: " << path.string() << "\n";
}

FieldRef make_field(std::uint32_t p, std::uint32_t n, const std::string& model) {
  if (model.empty()) return FieldCtx::construct(p, n);
  auto coeffs = parse_model(model, p);
  if (coeffs.size() != n + 1)
    throw Error(ErrorCode::InvalidArgument, "model degree " + std::to_string(coeffs.size() - 1) +
                                                " does not match n = " + std::to_string(n));
  return FieldCtx::with_modulus(p, std::move(coeffs));
}

struct FieldOpts {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::string model;
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
  cmd->add_option("--p", f.p, "characteristic")->required();
  cmd->add_option("--n", f.n, "extension degree");
  cmd->add_option("--model", f.model, "modulus polynomial, e.g. x2-x+2");
}

json field_config(const FieldOpts& f) { return {{"p", f.p}, {"n", f.n}, {"model", f.model}}; }

struct BudgetOpts {
  std::uint64_t minors = 10'000'000;
  double seconds = 0;
  unsigned threads = 0;
  std::string engine = "modular";

  NvmBudget budget() const {
    NvmBudget b;
    b.max_minors = minors;
    b.max_seconds = seconds;
    b.threads = threads;
    b.engine = engine == "exact" ? MinorEngine::Exact : MinorEngine::Modular;
    return b;
  }
  json config() const {
    return {{"budget_minors", minors}, {"budget_seconds", seconds}, {"threads", threads}, {"engine", engine}};
  }
};

void add_budget_opts(CLI::App* cmd, BudgetOpts& b) {
  cmd->add_option("--budget-minors", b.minors, "largest number of minors to attempt");
  cmd->add_option("--budget-seconds", b.seconds, "wall-clock limit, 0 for none");
  cmd->add_option("--threads", b.threads, "worker threads, 0 for all cores");
  cmd->add_option("--engine", b.engine, "minor evaluation")->check(CLI::IsMember({"modular", "exact"}));
}

void print_report(const NvmReport& r) {
  std::cout << to_string(r.verdict) << ", " << r.minors_checked << " of " << r.minors_required << " minors";
  if (r.witness) {
    std::cout << ", witness rows {";
    for (std::size_t i = 0; i < r.witness->row_labels.size(); ++i)
      std::cout << (i ? "," : "") << r.witness->row_labels[i];
    std::cout << "} cols {";
    for (std::size_t i = 0; i < r.witness->col_labels.size(); ++i)
      std::cout << (i ? "," : "") << r.witness->col_labels[i];
    std::cout << "}";
  }
  std::cout << "\n";
}

json elements_json(const FieldCtx& F, const std::vector<FieldElt>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(elt_json(F, x));
  return out;
}

// Orbit representatives given as element indices, expanded to full orbits.
std::vector<FieldElt> expand_orbits(const Subgroup& H, const std::vector<std::uint32_t>& reps) {
  std::vector<FieldElt> out;
  for (auto r : reps) {
    const FieldElt x{r};
    if (!H.field->contains(x)) throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(r) + " out of range");
    if (r == 0) {
      out.push_back(x);
      continue;
    }
    for (auto h : H.members) out.push_back(H.field->mul(h, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Compressed Fourier matrices, Gauss sums and uncertainty bounds over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // field-info
  FieldOpts fi_f;
  std::string fi_json;
  auto* fi = app.add_subcommand("field-info", "describe the constructed field");
  add_field_opts(fi, fi_f);
  fi->add_option("--json", fi_json, "report path");

  // gauss-table
  FieldOpts gt_f;
  std::string gt_json, gt_csv;
  auto* gt = app.add_subcommand("gauss-table", "Gauss sums of every multiplicative character");
  add_field_opts(gt, gt_f);
  gt->add_option("--json", gt_json, "report path");
  gt->add_option("--csv", gt_csv, "CSV path");

  // cfm
  auto* cfm = app.add_subcommand("cfm", "compressed Fourier matrices");
  cfm->require_subcommand(1);
  struct CfmOpts {
    FieldOpts f;
    std::uint32_t index = 1;
    std::uint32_t chi = 0;
    std::string reps = "lex";
    std::uint64_t seed = 0;
    std::string json;
    BudgetOpts budget;
  };
  CfmOpts cb, cn;
  auto add_cfm = [](CLI::App* cmd, CfmOpts& o) {
    add_field_opts(cmd, o.f);
    cmd->add_option("--index", o.index, "index m of H in the unit group");
    cmd->add_option("--chi-exponent,--chi", o.chi, "character exponent t");
    cmd->add_option("--reps", o.reps, "representative policy")->check(CLI::IsMember({"lex", "random"}));
    cmd->add_option("--seed", o.seed, "seed for random representatives");
    cmd->add_option("--json", o.json, "report path");
  };
  auto* cfm_build = cfm->add_subcommand("build", "build the matrix");
  add_cfm(cfm_build, cb);
  auto* cfm_nvm = cfm->add_subcommand("nvm", "scan all minors");
  add_cfm(cfm_nvm, cn);
  add_budget_opts(cfm_nvm, cn.budget);

  std::uint32_t sc_qmin = 2, sc_qmax = 16;
  std::optional<std::uint32_t> sc_index, sc_chi;
  std::string sc_reps = "lex", sc_json, sc_csv;
  std::uint64_t sc_seed = 0;
  BudgetOpts sc_budget;
  auto* cfm_scan = cfm->add_subcommand("scan", "scan every (q, m, chi) up to qmax");
  cfm_scan->add_option("--qmin", sc_qmin);
  cfm_scan->add_option("--qmax", sc_qmax)->required();
  cfm_scan->add_option("--index", sc_index, "only this index");
  cfm_scan->add_option("--chi", sc_chi, "only this character exponent");
  cfm_scan->add_option("--reps", sc_reps)->check(CLI::IsMember({"lex", "random"}));
  cfm_scan->add_option("--seed", sc_seed);
  cfm_scan->add_option("--json", sc_json, "report path");
  cfm_scan->add_option("--csv", sc_csv, "CSV path");
  add_budget_opts(cfm_scan, sc_budget);

  // uncert
  auto* unc = app.add_subcommand("uncert", "uncertainty bounds");
  unc->require_subcommand(1);
  FieldOpts uv_f;
  std::uint32_t uv_index = 1, uv_chi = 0, uv_trials = 100;
  std::uint64_t uv_seed = 0;
  std::int64_t uv_box = 1;
  std::string uv_json;
  auto* unc_verify = unc->add_subcommand("verify", "check the bound on random symmetric elements");
  add_field_opts(unc_verify, uv_f);
  unc_verify->add_option("--index", uv_index);
  unc_verify->add_option("--chi", uv_chi);
  unc_verify->add_option("--seed", uv_seed);
  unc_verify->add_option("--trials", uv_trials);
  unc_verify->add_option("--box", uv_box, "coefficients drawn from [-box, box]");
  unc_verify->add_option("--json", uv_json, "report path");

  FieldOpts ue_f;
  std::uint32_t ue_index = 1, ue_chi = 0;
  std::string ue_A, ue_B, ue_json;
  auto* unc_ext = unc->add_subcommand("extremal", "construct an element with prescribed supports");
  add_field_opts(unc_ext, ue_f);
  unc_ext->add_option("--index", ue_index);
  unc_ext->add_option("--chi", ue_chi);
  unc_ext->add_option("--A", ue_A, "orbit representatives of supp(f), comma separated")->required();
  unc_ext->add_option("--B", ue_B, "orbit representatives of supp(fhat), comma separated")->required();
  unc_ext->add_option("--json", ue_json, "report path");

  std::uint32_t cd_p = 0, cd_index = 2;
  bool cd_exh = false;
  std::string cd_A, cd_B, cd_json;
  auto* unc_cd = unc->add_subcommand("cd", "Cauchy-Davenport checks");
  unc_cd->add_option("--p", cd_p)->required();
  unc_cd->add_option("--index", cd_index);
  unc_cd->add_flag("--exhaustive", cd_exh, "sweep every pair of sets");
  unc_cd->add_option("--A", cd_A, "residues, comma separated");
  unc_cd->add_option("--B", cd_B, "residues, comma separated");
  unc_cd->add_option("--json", cd_json, "report path");

  // classical
  std::string cl_kind, cl_action = "nvm", cl_json;
  std::uint32_t cl_order = 0;
  BudgetOpts cl_budget;
  auto* cl = app.add_subcommand("classical", "unscaled DFT, DCT and DST models");
  cl->add_option("kind", cl_kind)->required()->check(CLI::IsMember({"dft", "dct", "dst"}));
  cl->add_option("action", cl_action)->check(CLI::IsMember({"build", "nvm"}));
  cl->add_option("--order", cl_order)->required();
  cl->add_option("--json", cl_json, "report path");
  add_budget_opts(cl, cl_budget);

  // transform
  std::string tr_in, tr_out, tr_json;
  bool tr_inverse = false;
  auto* tr = app.add_subcommand("transform", "Fourier transform of a group ring element file");
  tr->add_option("--in", tr_in)->required();
  tr->add_option("--out", tr_out)->required();
  tr->add_flag("--inverse", tr_inverse, "input is a spectrum");
  tr->add_option("--json", tr_json, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*fi) {
      const FieldRef F = make_field(fi_f.p, fi_f.n, fi_f.model);
      json res = field_json(*F);
      res["q"] = F->q();
      res["generator_index"] = F->generator().v;
      std::cout << "GF(" << F->q() << "), modulus";
      for (auto c : F->modulus()) std::cout << " " << c;
      std::cout << ", generator index " << F->generator().v << "\n";
      write_report(fi_json, "field-info.json", field_config(fi_f), res);
      return 0;
    }

    if (*gt) {
      const FieldRef F = make_field(gt_f.p, gt_f.n, gt_f.model);
      const Ambient amb = ambient(F);
      json rows = json::array();
      std::ostringstream csv;
      csv << "j,re,im,value\n";
      for (std::uint32_t j = 0; j + 1 < F->q(); ++j) {
        const CycloNum G = gauss_sum({F, j});
        const auto z = G.to_complex();
        rows.push_back({{"j", j}, {"value", to_json(G)}, {"approx", approx_json(G)}});
        csv << j << "," << z.real() << "," << z.imag() << ",\"" << G.to_string() << "\"\n";
        std::cout << "G(w^" << j << ") ~ " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i\n";
      }
      json res = {{"field", field_json(*F)},
                  {"embedding", {{"N", amb.N}, {"zeta_p", amb.zeta_p_exp()}, {"zeta_units", amb.zeta_unit_exp()}}},
                  {"rows", rows}};
      write_report(gt_json, "gauss-table.json", field_config(gt_f), res);
      if (!gt_csv.empty()) write_text(report_path(gt_csv, gt_csv), csv.str());
      return 0;
    }

    if (*cfm) {
      if (*cfm_build || *cfm_nvm) {
        CfmOpts& o = *cfm_build ? cb : cn;
        const FieldRef F = make_field(o.f.p, o.f.n, o.f.model);
        const Subgroup H = subgroup_of_index(F, o.index);
        const SubgroupChar chi = subgroup_char(H, o.chi);
        std::mt19937_64 rng(o.seed);
        const auto R = o.reps == "random" ? random_reps(chi, rng) : lex_reps(chi);
        const auto S = o.reps == "random" ? random_reps(chi, rng) : R;
        const CompressedMatrix C = build_matrix(chi, R, S);
        json config = field_config(o.f);
        config.update({{"index", o.index}, {"chi", o.chi}, {"reps", o.reps}, {"seed", o.seed}});
        if (*cfm_build) {
          json res = {{"field", field_json(*F)},
                      {"R", elements_json(*F, R)},
                      {"S", elements_json(*F, S)},
                      {"matrix", to_json(C.M)},
                      {"gauss_entries_agree", matrix_via_gauss(chi, R, S) == C.M}};
          std::cout << C.M.rows() << "x" << C.M.cols() << " compressed matrix over Q(zeta_" << C.M.field()->N()
                    << ")\n";
          write_report(o.json, "cfm-build.json", config, res);
          return 0;
        }
        config.update(o.budget.config());
        const NvmReport rep = check_nvm(C, o.budget.budget());
        print_report(rep);
        write_report(o.json, "cfm-nvm.json", config, to_json(rep, o.seed));
        return rep.verdict == Verdict::BudgetExhausted ? 2 : 0;
      }
      ScanOptions opt;
      opt.qmin = sc_qmin;
      opt.qmax = sc_qmax;
      opt.index = sc_index;
      opt.chi = sc_chi;
      opt.random_reps = sc_reps == "random";
      opt.seed = sc_seed;
      opt.budget = sc_budget.budget();
      const auto rows = nvm_scan(opt);
      json list = json::array();
      std::ostringstream csv;
      csv << "q,p,n,m,chi,verdict,witness_rows,witness_cols,minors_checked\n";
      bool exhausted = false;
      for (const auto& r : rows) {
        list.push_back(to_json(r.report, sc_seed));
        exhausted |= r.report.verdict == Verdict::BudgetExhausted;
        std::string wr, wc;
        if (r.report.witness) {
          for (auto x : r.report.witness->row_labels) wr += (wr.empty() ? "" : " ") + std::to_string(x);
          for (auto x : r.report.witness->col_labels) wc += (wc.empty() ? "" : " ") + std::to_string(x);
        }
        csv << r.q << "," << r.p << "," << r.n << "," << r.m << "," << r.t << "," << to_string(r.report.verdict)
            << "," << wr << "," << wc << "," << r.report.minors_checked << "\n";
        std::cout << "q=" << r.q << " m=" << r.m << " chi=" << r.t << ": ";
        print_report(r.report);
      }
      json config = {{"qmin", sc_qmin}, {"qmax", sc_qmax}, {"reps", sc_reps}, {"seed", sc_seed}};
      config["index"] = sc_index ? json(*sc_index) : json(nullptr);
      config["chi"] = sc_chi ? json(*sc_chi) : json(nullptr);
      config.update(sc_budget.config());
      write_report(sc_json, "cfm-scan.json", config, list);
      if (!sc_csv.empty()) write_text(report_path(sc_csv, sc_csv), csv.str());
      return exhausted ? 2 : 0;
    }

    if (*unc) {
      if (*unc_verify) {
        const FieldRef F = make_field(uv_f.p, uv_f.n, uv_f.model);
        const SubgroupChar chi = subgroup_char(subgroup_of_index(F, uv_index), uv_chi);
        const NvmReport cert = establish_nvm(chi);
        if (cert.verdict == Verdict::BudgetExhausted) {
          std::cout << "NVM scan exhausted its budget\n";
          return 2;
        }
        std::mt19937_64 rng(uv_seed);
        json cases = json::object();
        json violations = json::array();
        std::uint64_t min_margin = std::numeric_limits<std::uint64_t>::max();
        for (std::uint32_t i = 0; i < uv_trials; ++i) {
          GroupRingElt f = random_symmetric(chi, rng, uv_box);
          while (f.is_zero()) f = random_symmetric(chi, rng, uv_box);
          const auto r = verify_uncertainty(f, chi, cert);
          const std::string key(to_string(r.bound.kase));
          cases[key] = cases.value(key, 0) + 1;
          if (!r.holds || !r.restricted_holds) violations.push_back({{"f", to_json(f)}, {"result", to_json(r)}});
          else min_margin = std::min(min_margin, r.lhs - r.bound.bound);
        }
        json config = field_config(uv_f);
        config.update({{"index", uv_index}, {"chi", uv_chi}, {"seed", uv_seed}, {"trials", uv_trials}, {"box", uv_box}});
        json res = {{"certificate", to_json(cert)}, {"trials", uv_trials}, {"cases", cases},
                    {"violations", violations},
                    {"min_margin", violations.size() == uv_trials ? json(nullptr) : json(min_margin)}};
        std::cout << uv_trials << " trials, " << violations.size() << " violations\n";
        write_report(uv_json, "uncert-verify.json", config, res);
        return violations.empty() ? 0 : 1;
      }
      if (*unc_ext) {
        const FieldRef F = make_field(ue_f.p, ue_f.n, ue_f.model);
        const SubgroupChar chi = subgroup_char(subgroup_of_index(F, ue_index), ue_chi);
        const SupportSpec spec{expand_orbits(chi.H, parse_list(ue_A)), expand_orbits(chi.H, parse_list(ue_B))};
        const NvmReport cert = establish_nvm(chi);
        const GroupRingElt f = construct_extremal(chi, spec, cert);
        const SpectrumElt fh = fourier(f);
        json config = field_config(ue_f);
        config.update({{"index", ue_index}, {"chi", ue_chi}, {"A", ue_A}, {"B", ue_B}});
        json res = {{"A", elements_json(*F, spec.A)},
                    {"B", elements_json(*F, spec.B)},
                    {"f", to_json(f)},
                    {"supp_f", support(f).size()},
                    {"supp_fhat", support(fh).size()},
                    {"verified", true}};
        std::cout << "supp(f) = " << support(f).size() << ", supp(fhat) = " << support(fh).size() << ", verified\n";
        write_report(ue_json, "uncert-extremal.json", config, res);
        return 0;
      }
      // cd
      json config = {{"p", cd_p}, {"index", cd_index}, {"exhaustive", cd_exh}, {"A", cd_A}, {"B", cd_B}};
      if (cd_exh) {
        const CdSweep s = cd_exhaustive(cd_p);
        json res = {{"p", s.p}, {"closed_pairs", s.closed_pairs}, {"classical_pairs", s.classical_pairs},
                    {"violations", s.violations}};
        std::cout << s.closed_pairs << " closed pairs, " << s.classical_pairs << " classical pairs, "
                  << s.violations.size() << " violations\n";
        write_report(cd_json, "uncert-cd.json", config, res);
        return s.violations.empty() ? 0 : 1;
      }
      if (cd_A.empty() || cd_B.empty()) throw Error(ErrorCode::InvalidArgument, "--A and --B are required without --exhaustive");
      const FieldRef F = FieldCtx::construct(cd_p, 1);
      const CdResult r = cd_check(subgroup_of_index(F, cd_index), parse_list(cd_A), parse_list(cd_B));
      std::cout << "|A+B| = " << r.lhs << ", |A|+|B| = " << r.improved << ", classical bound " << r.classical << "\n";
      write_report(cd_json, "uncert-cd.json", config, to_json(r));
      return 0;
    }

    if (*cl) {
      const CycloMatrix M = cl_kind == "dft" ? classical_dft(cl_order)
                            : cl_kind == "dct" ? classical_dct(cl_order)
                                               : classical_dst(cl_order);
      json config = {{"kind", cl_kind}, {"order", cl_order}, {"action", cl_action}};
      if (cl_action == "build") {
        json res = {{"matrix", to_json(M)}, {"scaling", classical_scaling(cl_kind, cl_order)}};
        std::cout << M.rows() << "x" << M.cols() << " " << cl_kind << " model over Q(zeta_" << cl_order << ")\n";
        write_report(cl_json, "classical-" + cl_kind + ".json", config, res);
        return 0;
      }
      config.update(cl_budget.config());
      const NvmReport rep = check_nvm(M, cl_budget.budget());
      print_report(rep);
      json res = to_json(rep);
      res["scaling"] = classical_scaling(cl_kind, cl_order);
      write_report(cl_json, "classical-" + cl_kind + ".json", config, res);
      return rep.verdict == Verdict::BudgetExhausted ? 2 : 0;
    }

    if (*tr) {
      std::ifstream in(tr_in);
      if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + tr_in);
      const json input = json::parse(in);
      json output;
      bool round_trip = false;
      if (tr_inverse) {
        const SpectrumElt s = spectrum_from_json(input);
        const GroupRingElt f = inv_fourier(s);
        round_trip = fourier(f) == s;
        output = to_json(f);
      } else {
        const GroupRingElt f = group_ring_from_json(input);
        const SpectrumElt s = fourier(f);
        round_trip = inv_fourier(s) == f;
        output = to_json(s);
      }
      write_text(tr_out, output.dump(2) + "\n");
      std::cout << "wrote " << tr_out << (round_trip ? ", round trip exact\n" : ", round trip FAILED\n");
      write_report(tr_json, "transform.json", {{"in", tr_in}, {"out", tr_out}, {"inverse", tr_inverse}},
                   {{"round_trip_exact", round_trip}});
      return round_trip ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("ffm");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ffm::cli
