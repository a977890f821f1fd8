#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"
#include "ffm/field.hpp"

using namespace ffm;

TEST_SUITE("field") {
  TEST_CASE("prime field arithmetic") {
    const auto F = FieldCtx::construct(5, 1);
    CHECK(F->add(FieldElt{3}, FieldElt{4}) == FieldElt{2});
    CHECK(F->mul(FieldElt{3}, FieldElt{4}) == FieldElt{2});
    CHECK(F->neg(FieldElt{1}) == FieldElt{4});
    CHECK(F->inv(FieldElt{2}) == FieldElt{3});
    CHECK(F->from_int(-1) == FieldElt{4});
    CHECK_THROWS_AS(F->inv(FieldElt{0}), Error);
  }

  TEST_CASE("GF(4) with x^2 + x + 1") {
    const auto F = FieldCtx::construct(2, 2);
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const FieldElt x{2};
    CHECK(F->mul(x, x) == FieldElt{3});  // x + 1
    CHECK(F->abs_trace(FieldElt{0}) == 0);
    CHECK(F->abs_trace(x) == 1);
    CHECK(F->rel_trace(x, 1) == F->one());
    CHECK(F->rel_trace(x, 2) == x);
  }

  TEST_CASE("default models") {
    const auto F = FieldCtx::construct(5, 2);
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(F->generator() == FieldElt{7});
    const auto G = FieldCtx::with_modulus(5, {2, 4, 1});
    CHECK(G->generator() == FieldElt{5});
    CHECK(G->coeffs(G->generator()) == std::vector<std::uint32_t>{0, 1});
    CHECK_THROWS_AS(FieldCtx::with_modulus(5, {1, 0, 1}), Error);  // x^2 + 1 = (x-2)(x+2)
    CHECK_THROWS_AS(FieldCtx::construct(6, 1), Error);
  }

  TEST_CASE("every unit of GF(25) has an inverse and a logarithm") {
    const auto F = FieldCtx::construct(5, 2);
    for (auto a : F->units()) {
      CHECK(F->mul(a, F->inv(a)) == F->one());
      CHECK(F->exp_g(F->discrete_log(a)) == a);
    }
    CHECK(F->discrete_log(F->one()) == 0);
    CHECK(F->discrete_log(F->generator()) == 1);
    CHECK_THROWS_AS(F->discrete_log(FieldElt{0}), Error);
  }

  TEST_CASE("trace is additive and balanced") {
    for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 1u}}) {
      const auto F = FieldCtx::construct(p, n);
      std::map<std::uint32_t, std::uint32_t> count;
      for (auto x : F->elements()) {
        ++count[F->abs_trace(x)];
        for (auto y : F->elements())
          REQUIRE(F->abs_trace(F->add(x, y)) == (F->abs_trace(x) + F->abs_trace(y)) % p);
      }
      CHECK(count.size() == p);
      for (auto& [t, c] : count) CHECK(c == F->q() / p);
    }
    const auto F7 = FieldCtx::construct(7, 1);
    CHECK(F7->abs_trace(FieldElt{3}) == 3);
  }

  TEST_CASE("relative trace") {
    const auto F = FieldCtx::construct(2, 4);
    std::size_t kernel = 0;
    for (auto x : F->elements()) {
      const FieldElt t = F->rel_trace(x, 2);
      CHECK(F->in_subfield(t, 2));
      // Tr = Tr_{K/F_2} o Tr_{F/K}, with Tr_{K/F_2}(t) = t + t^2
      CHECK(FieldElt{F->abs_trace(x)} == F->add(t, F->mul(t, t)));
      if (t == FieldElt{0}) ++kernel;
    }
    CHECK(kernel == 4);
    CHECK_THROWS_AS(F->rel_trace(F->one(), 3), Error);
  }

  TEST_CASE("subgroups") {
    const auto F = FieldCtx::construct(37, 1);
    const auto H = subgroup_of_index(F, 9);
    std::vector<std::uint32_t> m;
    for (auto h : H.members) m.push_back(h.v);
    CHECK(m == std::vector<std::uint32_t>{1, 6, 31, 36});
    CHECK(subgroup_of_index(F, 1).order == 36);
    CHECK(subgroup_of_index(F, 36).is_trivial());
    CHECK_THROWS_AS(subgroup_of_index(F, 5), Error);
  }

  TEST_CASE("orbits") {
    const auto F = FieldCtx::construct(37, 1);
    const auto H = subgroup_of_index(F, 9);
    const auto part = orbit_partition(H, true);
    REQUIRE(part.size() == 10);
    CHECK(part.orbits[0] == std::vector<FieldElt>{FieldElt{0}});
    std::set<std::vector<std::uint32_t>> orbits;
    for (const auto& o : part.orbits) {
      std::vector<std::uint32_t> v;
      for (auto x : o) v.push_back(x.v);
      orbits.insert(v);
    }
    CHECK(orbits.count({2, 12, 25, 35}));
    CHECK(orbits.count({1, 6, 31, 36}));
    for (std::size_t i = 1; i < part.size(); ++i) CHECK(part.orbits[i].size() == 4);

    const auto all = orbit_partition(subgroup_of_index(F, 1), true);
    CHECK(all.size() == 2);
    const auto F7 = FieldCtx::construct(7, 1);
    const auto pm = orbit_partition(subgroup_of_index(F7, 3), false);
    CHECK(pm.size() == 3);
    for (const auto& o : pm.orbits) CHECK(o.size() == 2);
  }

  TEST_CASE("H-closed sets") {
    const auto F = FieldCtx::construct(7, 1);
    const auto H = subgroup_of_index(F, 3);  // {1, 6}
    const std::vector<FieldElt> good = {FieldElt{1}, FieldElt{6}};
    const std::vector<FieldElt> bad = {FieldElt{1}, FieldElt{2}};
    CHECK(is_h_closed(H, good));
    CHECK_FALSE(is_h_closed(H, bad));
  }

  TEST_CASE("rebuilding is deterministic") {
    const auto a = FieldCtx::construct(3, 3), b = FieldCtx::construct(3, 3);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->generator() == b->generator());
    CHECK(a->order(a->generator()) == 26);
  }

  TEST_CASE("arith helpers") {
    CHECK(prime_power(27) == std::pair<std::uint32_t, std::uint32_t>{3, 3});
    CHECK(prime_power(12).first == 0);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(binomial(22, 11) == 705432);
    CHECK(mod_floor(-3, 5) == 2);
  }
}
