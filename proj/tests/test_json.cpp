#include <doctest.h>

#include <random>

#include "ffm/json_io.hpp"
#include "oracles.hpp"

using namespace ffm;

TEST_SUITE("json") {
  TEST_CASE("cyclotomic numbers") {
    const auto F = CycloField::get(12);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
      const auto x = oracle::random_cyclo(F, rng);
      const auto j = to_json(x);
      CHECK(j["N"] == 12);
      CHECK(j["num"].size() == 4);
      CHECK(j["num"][0].is_string());
      CHECK(cyclo_from_json(j) == x);
    }
    const auto half = to_json(CycloNum::from_rational(F, mpq_class(1, 2)));
    CHECK(half["num"][0] == "1");
    CHECK(half["den"][0] == "2");
  }

  TEST_CASE("fields and elements") {
    const auto F = FieldCtx::with_modulus(5, {2, 4, 1});
    const auto j = field_json(*F);
    CHECK(j["modulus"] == nlohmann::json::array({2, 4, 1}));
    CHECK(j["generator"] == nlohmann::json::array({0, 1}));
    const auto G = field_from_json(j);
    CHECK(G->modulus() == F->modulus());
    for (auto x : F->elements()) CHECK(elt_from_json(*F, elt_json(*F, x)) == x);
    CHECK(elt_from_json(*F, nlohmann::json(7)) == FieldElt{7});
  }

  TEST_CASE("group ring elements and spectra") {
    const auto F = FieldCtx::construct(7, 1);
    const SubgroupChar chi = subgroup_char(subgroup_of_index(F, 2), 1);
    std::mt19937_64 rng(9);
    const auto f = random_symmetric(chi, rng, 3);
    CHECK(group_ring_from_json(to_json(f)) == f);
    const auto s = fourier(f);
    CHECK(spectrum_from_json(to_json(s)) == s);
  }

  TEST_CASE("reports") {
    const auto F = FieldCtx::construct(5, 1);
    const auto C = build_matrix(subgroup_char(subgroup_of_index(F, 2), 0));
    const auto r = check_nvm(C);
    const auto j = to_json(r, 42);
    CHECK(j["verdict"] == "AllMinorsNonzero");
    CHECK(j["q"] == 5);
    CHECK(j["m"] == 2);
    CHECK(j["chi"] == 0);
    CHECK(j["seed"] == 42);
    CHECK(j["witness"].is_null());
    CHECK(j.contains("elapsed_ms"));
    CHECK(to_json(C.M)["rows"] == 3);
  }
}
