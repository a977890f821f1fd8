#pragma once

// Compressed Fourier matrices M[r][s] = eps_s(u_{chi,r}), the classical
// DFT/DCT/DST models, and the nonvanishing-minors scan.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ffm/chars.hpp"
#include "ffm/cyclo.hpp"

namespace ffm {

struct CompressedMatrix {
  SubgroupChar chi;
  std::vector<FieldElt> R;
  std::vector<FieldElt> S;
  CycloMatrix M;
};

// Representatives: one per H-orbit of F_q (trivial chi) or F_q^x (otherwise).
std::vector<FieldElt> lex_reps(const SubgroupChar& chi);
// A random member of each orbit, in shuffled order.
std::vector<FieldElt> random_reps(const SubgroupChar& chi, std::mt19937_64& rng);
// Throws BadRepresentatives.
void validate_reps(const SubgroupChar& chi, const std::vector<FieldElt>& R);

CycloNum direct_entry(const SubgroupChar& chi, FieldElt r, FieldElt s);
CompressedMatrix build_matrix(const SubgroupChar& chi, const std::vector<FieldElt>& R,
                              const std::vector<FieldElt>& S);
CompressedMatrix build_matrix(const SubgroupChar& chi);

// (1/m) sum over extensions chi' of conj(chi')(rs) G(chi'), or the rs = 0 value.
CycloNum entry_via_gauss(const SubgroupChar& chi, FieldElt r, FieldElt s);
// Same formula for a whole matrix, computing each Gauss sum once.
CycloMatrix matrix_via_gauss(const SubgroupChar& chi, const std::vector<FieldElt>& R,
                             const std::vector<FieldElt>& S);

// Unscaled integral models over Q(zeta_n). Labels are the index values r, s.
CycloMatrix classical_dft(std::uint32_t n);
CycloMatrix classical_dct(std::uint32_t n);
CycloMatrix classical_dst(std::uint32_t n);
// Diagonal scaling relating the unscaled model to the normalized matrix.
std::string classical_scaling(std::string_view kind, std::uint32_t n);

enum class Verdict { AllMinorsNonzero, ZeroMinorFound, BudgetExhausted };
std::string_view to_string(Verdict v);

enum class MinorEngine {
  // Nonzero images mod a split prime certify nonzero minors; zero images
  // are confirmed with det_exact.
  Modular,
  // det_exact on every minor.
  Exact,
};

struct NvmBudget {
  std::uint64_t max_minors = 10'000'000;
  double max_seconds = 0;  // 0: unlimited
  unsigned threads = 0;    // 0: hardware concurrency
  MinorEngine engine = MinorEngine::Modular;
};

struct Witness {
  std::vector<std::size_t> rows;  // positions
  std::vector<std::size_t> cols;
  std::vector<std::int64_t> row_labels;
  std::vector<std::int64_t> col_labels;
};

struct NvmReport {
  Verdict verdict = Verdict::BudgetExhausted;
  std::optional<Witness> witness;
  std::uint64_t minors_checked = 0;   // schedule position of the witness, or all evaluated
  std::uint64_t minors_required = 0;  // sum over k of C(dim, k)^2
  double elapsed_ms = 0;
  NvmBudget budget;
  std::size_t dim = 0;

  // What was scanned, when it is a compressed matrix.
  bool has_subject = false;
  std::uint32_t p = 0, n = 0, q = 0, m = 0, t = 0;
  std::vector<std::uint32_t> modulus;
};

std::uint64_t minors_total(std::size_t dim);

// Minors in order of increasing k, then row subset, then column subset
// (both lex). The reported witness is the first zero minor in that order.
NvmReport check_nvm(const CycloMatrix& M, const NvmBudget& budget = {});
NvmReport check_nvm(const CompressedMatrix& C, const NvmBudget& budget = {});

// The zero minor forced when H lies in a proper subfield K: positions in C.R
// and C.S, plus the subfield degree and the element b with Tr_{F/K}(b) = 0.
struct SubfieldWitness {
  std::uint32_t subfield_degree = 0;
  FieldElt b{};
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
std::optional<SubfieldWitness> subfield_witness(const CompressedMatrix& C);

struct ScanOptions {
  std::uint32_t qmin = 2;
  std::uint32_t qmax = 16;
  std::optional<std::uint32_t> index;  // only this m
  std::optional<std::uint32_t> chi;    // only this t
  bool random_reps = false;
  std::uint64_t seed = 0;
  NvmBudget budget;
};

struct ScanRow {
  std::uint32_t q = 0, p = 0, n = 0, m = 0, t = 0;
  NvmReport report;
};

std::vector<ScanRow> nvm_scan(const ScanOptions& opt);

}  // namespace ffm
