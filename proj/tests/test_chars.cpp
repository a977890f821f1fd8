#include <doctest.h>

#include <set>

#include "ffm/arith.hpp"
#include "ffm/chars.hpp"
#include "ffm/error.hpp"
#include "oracles.hpp"

using namespace ffm;

TEST_SUITE("chars") {
  TEST_CASE("ambient conductor") {
    CHECK(ambient_conductor(*FieldCtx::construct(5, 2)) == 120);
    CHECK(ambient_conductor(*FieldCtx::construct(7, 1)) == 42);
    CHECK(ambient_conductor(*FieldCtx::construct(2, 1)) == 2);
  }

  TEST_CASE("additive characters") {
    const auto F5 = FieldCtx::construct(5, 1);
    const Ambient A = ambient(F5);
    CHECK(eval_additive({F5, FieldElt{0}}, FieldElt{3}).is_one());
    CHECK(eval_additive({F5, FieldElt{1}}, FieldElt{1}) == A.zeta(A.zeta_p_exp()));
    const auto F4 = FieldCtx::construct(2, 2);
    CHECK(eval_additive({F4, FieldElt{1}}, F4->generator()) == ambient(F4).integer(-1));

    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {7u, 1u}}) {
      const auto F = FieldCtx::construct(p, n);
      const Ambient B = ambient(F);
      std::set<std::vector<std::int64_t>> seen;
      for (auto a : F->elements()) {
        CycloNum sum = B.zero();
        std::vector<std::int64_t> row;
        for (auto x : F->elements()) {
          sum += eval_additive({F, a}, x);
          row.push_back(AdditiveChar{F, a}.exponent(x) % B.N);
          for (auto y : F->elements())
            REQUIRE(eval_additive({F, a}, F->add(x, y)) == eval_additive({F, a}, x) * eval_additive({F, a}, y));
        }
        seen.insert(row);
        CHECK(sum == B.integer(a == FieldElt{0} ? F->q() : 0));
      }
      CHECK(seen.size() == F->q());
    }
  }

  TEST_CASE("multiplicative characters") {
    const auto F5 = FieldCtx::construct(5, 1);
    const MultChar eta = quadratic_char(F5);
    CHECK(eta.j == 2);
    CHECK(eval_mult(eta, FieldElt{2}) == ambient(F5).integer(-1));
    CHECK(eval_mult(eta, FieldElt{4}).is_one());
    CHECK(eval_mult({F5, 0}, FieldElt{3}).is_one());
    CHECK_THROWS_AS(eval_mult(eta, FieldElt{0}), Error);
    CHECK(MultChar{F5, 1}.order() == 4);
    CHECK(MultChar{F5, 2}.order() == 2);

    const auto F = FieldCtx::construct(3, 2);
    const Ambient A = ambient(F);
    for (std::uint32_t j = 0; j < 8; ++j) {
      const MultChar phi{F, j};
      CycloNum sum = A.zero();
      for (auto u : F->units()) {
        sum += eval_mult(phi, u);
        for (auto v : F->units()) REQUIRE(eval_mult(phi, F->mul(u, v)) == eval_mult(phi, u) * eval_mult(phi, v));
      }
      CHECK(sum == A.integer(j == 0 ? 8 : 0));
    }
  }

  TEST_CASE("subgroup characters and extensions") {
    const auto F = FieldCtx::construct(5, 2);
    const Subgroup H = subgroup_of_index(F, 2);
    const SubgroupChar chi = subgroup_char(H, 1);
    CHECK(chi.order() == 12);
    const Ambient A = ambient(F);
    CHECK(eval_subgroup(chi, F->pow(F->generator(), 2)) == A.zeta(10));  // zeta_12
    CHECK_THROWS_AS(eval_subgroup(chi, F->generator()), Error);

    const auto triv = extensions(subgroup_char(H, 0));
    REQUIRE(triv.size() == 2);
    CHECK(triv[0].j == 0);
    CHECK(triv[1].j == 12);
    for (std::uint32_t t = 0; t < 12; ++t) {
      const auto ext = extensions(subgroup_char(H, t));
      REQUIRE(ext.size() == 2);
      CHECK(ext[0].j == t);
      CHECK(ext[1].j == t + 12);
      for (const auto& e : ext) CHECK(restrict_to(e, H).t == t);
    }
    const auto whole = extensions(subgroup_char(subgroup_of_index(F, 1), 5));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].j == 5);
  }

  TEST_CASE("averaging over characters trivial on H detects m-th powers") {
    const auto F = FieldCtx::construct(13, 1);
    const Ambient A = ambient(F);
    for (auto m64 : divisors(12)) {
      const auto m = static_cast<std::uint32_t>(m64);
      const Subgroup H = subgroup_of_index(F, m);
      const auto theta = extensions(subgroup_char(H, 0));
      for (auto a : F->units()) {
        CycloNum s = A.zero();
        for (const auto& th : theta) s += eval_mult(th, a);
        CHECK(s.scalar_mul(mpq_class(1, m)) == A.integer(H.contains(a) ? 1 : 0));
      }
    }
  }

  TEST_CASE("Gauss sums") {
    const auto F5 = FieldCtx::construct(5, 1);
    const Ambient A5 = ambient(F5);
    const auto xi = [&](int k) { return A5.zeta(A5.zeta_p_exp() * k); };
    CHECK(gauss_sum(quadratic_char(F5)) == xi(1) + xi(4) - xi(2) - xi(3));
    for (auto [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {7u, 1u}, {2u, 3u}, {13u, 1u}}) {
      const auto F = FieldCtx::construct(p, n);
      const Ambient A = ambient(F);
      CHECK(gauss_sum({F, 0}) == A.integer(-1));
      for (std::uint32_t j = 1; j + 1 < F->q(); ++j) {
        const MultChar phi{F, j};
        const CycloNum G = gauss_sum(phi);
        CHECK(G * G.conj() == A.integer(F->q()));
        CHECK(gauss_sum(phi.conj()) == eval_mult(phi, F->from_int(-1)) * G.conj());
      }
    }
  }

  TEST_CASE("Gauss sums of GF(25) under x^2 - x + 2") {
    const auto F = FieldCtx::with_modulus(5, {2, 4, 1});
    const Ambient A = ambient(F);
    CHECK(gauss_sum({F, 8}) == A.integer(5));
    CHECK(gauss_sum({F, 4}) == A.integer(-5));
    for (const auto& row : oracle::gf25_table(A))
      for (auto j : row.js) CHECK(gauss_sum({F, j}) == row.value);
  }

  TEST_CASE("Jacobi sums") {
    const auto F5 = FieldCtx::construct(5, 1);
    const MultChar eta = quadratic_char(F5);
    const Ambient A5 = ambient(F5);
    CycloNum direct = A5.zero();
    for (std::uint32_t a = 2; a < 5; ++a) direct += eval_mult(eta, FieldElt{a}) * eval_mult(eta, F5->sub(F5->one(), FieldElt{a}));
    CHECK(jacobi_sum(eta, eta) == direct);
    const CycloNum J = jacobi_sum({F5, 1}, eta);
    CHECK(std::abs(J.to_complex().imag()) > 0.5);

    const auto F13 = FieldCtx::construct(13, 1);
    const CycloNum J13 = jacobi_sum({F13, 4}, quadratic_char(F13));
    CHECK(J13 * J13.conj() == ambient(F13).integer(13));
  }
}
