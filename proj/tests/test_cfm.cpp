#include <doctest.h>

#include <map>
#include <random>

#include "ffm/arith.hpp"
#include "ffm/cfm.hpp"
#include "ffm/error.hpp"

using namespace ffm;

namespace {

CycloMatrix from_rows(const CycloRef& F, const std::vector<std::vector<CycloNum>>& rows) {
  CycloMatrix M(F, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    M.row_labels.push_back(static_cast<std::int64_t>(i));
    M.col_labels.push_back(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = rows[i][j];
  }
  return M;
}

}  // namespace

TEST_SUITE("cfm") {
  TEST_CASE("prime field with trivial H is the DFT") {
    const auto F = FieldCtx::construct(5, 1);
    const auto C = build_matrix(subgroup_char(subgroup_of_index(F, 4), 0));
    const Ambient A = ambient(F);
    REQUIRE(C.M.rows() == 5);
    for (std::uint32_t r = 0; r < 5; ++r)
      for (std::uint32_t s = 0; s < 5; ++s) CHECK(C.M.at(r, s) == A.zeta(A.zeta_p_exp() * r * s));
  }

  TEST_CASE("H the whole unit group") {
    const auto F = FieldCtx::construct(3, 2);
    const Ambient A = ambient(F);
    const Subgroup H = subgroup_of_index(F, 1);
    const auto C = build_matrix(subgroup_char(H, 0));
    REQUIRE(C.M.rows() == 2);
    CHECK(C.M.at(0, 0) == A.integer(8));
    CHECK(C.M.at(0, 1) == A.integer(8));
    CHECK(C.M.at(1, 1) == A.integer(-1));
    const auto N = build_matrix(subgroup_char(H, 3));
    REQUIRE(N.M.rows() == 1);
    CHECK(N.M.at(0, 0) == gauss_sum({F, 3}));
    CHECK(check_nvm(N).verdict == Verdict::AllMinorsNonzero);
  }

  TEST_CASE("representatives") {
    const auto F = FieldCtx::construct(7, 1);
    const SubgroupChar triv = subgroup_char(subgroup_of_index(F, 3), 0);
    const SubgroupChar sign = subgroup_char(subgroup_of_index(F, 3), 1);
    CHECK(lex_reps(triv) == std::vector<FieldElt>{FieldElt{0}, FieldElt{1}, FieldElt{2}, FieldElt{3}});
    CHECK(lex_reps(sign) == std::vector<FieldElt>{FieldElt{1}, FieldElt{2}, FieldElt{3}});
    CHECK_THROWS_AS(validate_reps(triv, {FieldElt{1}, FieldElt{2}, FieldElt{3}}), Error);
    CHECK_THROWS_AS(validate_reps(sign, {FieldElt{0}, FieldElt{1}, FieldElt{2}}), Error);
    CHECK_THROWS_AS(validate_reps(sign, {FieldElt{1}, FieldElt{6}, FieldElt{2}}), Error);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 5; ++i) CHECK_NOTHROW(validate_reps(sign, random_reps(sign, rng)));
  }

  TEST_CASE("symmetric when R = S, and Gauss-sum entries agree") {
    for (std::uint32_t q : {7u, 9u, 16u, 25u}) {
      const auto [p, n] = prime_power(q);
      const auto F = FieldCtx::construct(p, n);
      for (auto m : divisors(q - 1)) {
        const Subgroup H = subgroup_of_index(F, static_cast<std::uint32_t>(m));
        for (std::uint32_t t = 0; t < H.order; ++t) {
          const SubgroupChar chi = subgroup_char(H, t);
          const auto C = build_matrix(chi);
          CHECK(C.M == C.M.transpose());
          CHECK(C.M == matrix_via_gauss(chi, C.R, C.S));
          CHECK(entry_via_gauss(chi, C.R.back(), C.S.back()) == direct_entry(chi, C.R.back(), C.S.back()));
        }
      }
    }
    const auto F = FieldCtx::construct(5, 2);
    const SubgroupChar chi = subgroup_char(subgroup_of_index(F, 2), 0);
    const Ambient A = ambient(F);
    CHECK(entry_via_gauss(chi, FieldElt{0}, FieldElt{3}) == A.integer(12));
    const FieldElt sq = F->pow(F->generator(), 2);
    CHECK(entry_via_gauss(chi, F->one(), sq) == (A.integer(-1) + gauss_sum(quadratic_char(F))).scalar_mul(mpq_class(1, 2)));
  }

  TEST_CASE("classical models") {
    const auto D6 = classical_dft(6);
    CHECK(det_exact(D6.submatrix({0, 2}, {0, 3})).is_zero());
    const auto S9 = classical_dst(9);
    CHECK(S9.row_labels.front() == 1);
    CHECK(S9.at(2, 2).is_zero());
    const auto C9 = classical_dct(9);
    CHECK(C9.rows() == 5);
    CHECK(det_exact(C9.submatrix({0, 3}, {0, 3})).is_zero());
    CHECK_THROWS_AS(classical_dct(8), Error);
    CHECK_THROWS_AS(classical_dst(1), Error);
    CHECK(classical_scaling("dst", 7).size() > 0);
  }

  TEST_CASE("minor scan") {
    const auto F7 = FieldCtx::construct(7, 1);
    const auto r = check_nvm(build_matrix(subgroup_char(subgroup_of_index(F7, 6), 0)));
    CHECK(r.verdict == Verdict::AllMinorsNonzero);
    CHECK(r.minors_checked == 3431);
    CHECK(r.minors_required == 3431);
    CHECK_FALSE(r.witness);

    const auto F4 = FieldCtx::construct(2, 2);
    const auto z = check_nvm(build_matrix(subgroup_char(subgroup_of_index(F4, 3), 0)));
    CHECK(z.verdict == Verdict::ZeroMinorFound);
    REQUIRE(z.witness);

    const auto K = CycloField::get(1);
    const auto zero = check_nvm(from_rows(K, {{CycloNum(K)}}));
    CHECK(zero.verdict == Verdict::ZeroMinorFound);
    CHECK(zero.witness->rows == std::vector<std::size_t>{0});
    CHECK(zero.witness->cols == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(check_nvm(CycloMatrix(K, 2, 3)), Error);
  }

  TEST_CASE("witness is the first zero minor in schedule order") {
    const auto K = CycloField::get(1);
    auto c = [&](long v) { return CycloNum::from_int(K, v); };
    // 2x2 zero minors at rows {0,1} cols {0,1} and rows {1,2} cols {1,2}
    const auto M = from_rows(K, {{c(1), c(2), c(5)}, {c(2), c(4), c(3)}, {c(7), c(6), c(9)}});
    for (unsigned threads : {1u, 3u}) {
      NvmBudget b;
      b.threads = threads;
      for (auto engine : {MinorEngine::Modular, MinorEngine::Exact}) {
        b.engine = engine;
        const auto r = check_nvm(M, b);
        REQUIRE(r.verdict == Verdict::ZeroMinorFound);
        CHECK(r.witness->rows == std::vector<std::size_t>{0, 1});
        CHECK(r.witness->cols == std::vector<std::size_t>{0, 1});
        CHECK(r.minors_checked == 9 + 1);
      }
    }
  }

  TEST_CASE("engines agree") {
    for (std::uint32_t n : {5u, 6u, 7u, 9u}) {
      NvmBudget exact;
      exact.engine = MinorEngine::Exact;
      const auto a = check_nvm(classical_dft(n)), b = check_nvm(classical_dft(n), exact);
      CHECK(a.verdict == b.verdict);
      CHECK(a.minors_checked == b.minors_checked);
    }
  }

  TEST_CASE("budgets") {
    NvmBudget b;
    b.max_minors = 100;
    const auto r = check_nvm(classical_dft(7), b);
    CHECK(r.verdict == Verdict::BudgetExhausted);
    CHECK(r.minors_checked == 100);
    CHECK(r.minors_required == 3431);
    // a zero minor inside the budget is still found
    const auto z = check_nvm(classical_dft(6), b);
    CHECK(z.verdict == Verdict::ZeroMinorFound);
  }

  TEST_CASE("scaling rows keeps the verdict") {
    const auto M = classical_dft(5);
    CycloMatrix S = M;
    const auto K = M.field();
    for (std::size_t j = 0; j < 5; ++j) S.at(2, j) = S.at(2, j) * CycloNum::zeta_pow(K, 3).scalar_mul(7);
    CHECK(check_nvm(S).verdict == check_nvm(M).verdict);
  }

  TEST_CASE("subfield witnesses") {
    const auto F9 = FieldCtx::construct(3, 2);
    const auto sign = build_matrix(subgroup_char(subgroup_of_index(F9, 4), 1));
    const auto w = subfield_witness(sign);
    REQUIRE(w);
    CHECK(w->rows.size() == 1);
    CHECK(sign.M.at(w->rows[0], w->cols[0]).is_zero());

    const auto F4 = FieldCtx::construct(2, 2);
    const auto t = build_matrix(subgroup_char(subgroup_of_index(F4, 3), 0));
    const auto w4 = subfield_witness(t);
    REQUIRE(w4);
    CHECK(w4->rows.size() == 2);
    CHECK(det_exact(t.M.submatrix(w4->rows, w4->cols)).is_zero());

    const auto F5 = FieldCtx::construct(5, 1);
    CHECK_FALSE(subfield_witness(build_matrix(subgroup_char(subgroup_of_index(F5, 2), 0))));
  }

  TEST_CASE("scan") {
    ScanOptions opt;
    opt.qmin = 4;
    opt.qmax = 16;
    opt.index = 3;
    opt.chi = 0;
    const auto rows = nvm_scan(opt);
    std::map<std::uint32_t, Verdict> v;
    for (const auto& r : rows) v[r.q] = r.report.verdict;
    CHECK(v.at(4) == Verdict::ZeroMinorFound);
    CHECK(v.at(16) == Verdict::ZeroMinorFound);
    CHECK(v.at(7) == Verdict::AllMinorsNonzero);
    CHECK(v.at(13) == Verdict::AllMinorsNonzero);
    CHECK(v.size() == 4);

    ScanOptions r25;
    r25.qmin = r25.qmax = 25;
    r25.index = 2;
    for (const auto& r : nvm_scan(r25)) {
      const SubgroupChar chi = subgroup_char(subgroup_of_index(FieldCtx::construct(5, 2), 2), r.t);
      const bool zero = chi.order() == 3 || chi.order() == 4;
      CHECK((r.report.verdict == Verdict::ZeroMinorFound) == zero);
    }
  }
}
