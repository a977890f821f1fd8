#include <doctest.h>

#include <cmath>
#include <random>

#include "ffm/error.hpp"
#include "oracles.hpp"

using namespace ffm;

namespace {

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

CycloNum z(const CycloRef& F, std::int64_t k) { return CycloNum::zeta_pow(F, k); }

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(as_longs(cyclotomic_poly(1)) == std::vector<long>{-1, 1});
    CHECK(as_longs(cyclotomic_poly(4)) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(cyclotomic_poly(6)) == std::vector<long>{1, -1, 1});
    CHECK(as_longs(cyclotomic_poly(12)) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(CycloField::get(120)->degree() == 32);
  }

  TEST_CASE("roots of unity") {
    const auto F3 = CycloField::get(3);
    CHECK((z(F3, 0) + z(F3, 1) + z(F3, 2)).is_zero());
    CHECK(z(F3, 0).is_one());
    const auto F12 = CycloField::get(12);
    CHECK(z(F12, 6) == CycloNum::from_int(F12, -1));
    CHECK(z(F12, 5) * z(F12, 9) == z(F12, 2));
    CHECK(z(F12, -1) == z(F12, 11));
  }

  TEST_CASE("field operations") {
    const auto F5 = CycloField::get(5);
    const CycloNum g = z(F5, 1) + z(F5, 4) - z(F5, 2) - z(F5, 3);
    CHECK(g * g == CycloNum::from_int(F5, 5));
    CHECK((g + (-g)).is_zero());
    CHECK(CycloNum::from_int(F5, 2).inv() == CycloNum::from_rational(F5, mpq_class(1, 2)));
    CHECK_THROWS_AS(CycloNum(F5).inv(), Error);
    std::mt19937_64 rng(5);
    for (std::uint32_t N : {5u, 12u, 42u, 120u}) {
      const auto F = CycloField::get(N);
      for (int i = 0; i < 20; ++i) {
        const auto x = oracle::random_cyclo(F, rng), y = oracle::random_cyclo(F, rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inv() == CycloNum::from_int(F, 1));
        CHECK((x + y) * x == x * x + y * x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        const auto cx = x.to_complex(), cy = y.to_complex(), cxy = (x * y).to_complex();
        CHECK(std::abs(cxy - cx * cy) < 1e-9);
      }
    }
  }

  TEST_CASE("conjugation") {
    const auto F5 = CycloField::get(5);
    CHECK((z(F5, 1) + CycloNum::from_int(F5, 2) * z(F5, 2)).conj() == z(F5, 4) + CycloNum::from_int(F5, 2) * z(F5, 3));
    const auto r = CycloNum::from_rational(F5, mpq_class(3, 7));
    CHECK(r.conj() == r);
    mpq_class v;
    CHECK(r.is_rational(&v));
    CHECK(v == mpq_class(3, 7));
  }

  TEST_CASE("complex values") {
    const auto F4 = CycloField::get(4);
    const auto i = z(F4, 1).to_complex();
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
    const auto F5 = CycloField::get(5);
    const auto g = (z(F5, 1) + z(F5, 4) - z(F5, 2) - z(F5, 3)).to_complex();
    CHECK(std::abs(g - std::sqrt(5.0)) < 1e-12);
  }

  TEST_CASE("canonical form") {
    const auto F = CycloField::get(12);
    const auto a = CycloNum::from_poly(F, {1, 0, 0, 0, 0, 0, 1});  // 1 + z^6 = 0
    CHECK(a.is_zero());
    const auto b = CycloNum::from_poly(F, {2, 4}, 6);
    CHECK(b.den() == 3);
    CHECK(b == CycloNum::from_poly(F, {1, 2}, 3));
  }

  TEST_CASE("determinants") {
    const auto F = CycloField::get(5);
    CycloMatrix I(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) I.at(i, j) = CycloNum::from_int(F, i == j);
    CHECK(det_exact(I).is_one());
    CycloMatrix ones(F, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) ones.at(i, j) = CycloNum::from_int(F, 1);
    CHECK(det_exact(ones).is_zero());
    CHECK_THROWS_AS(det_exact(CycloMatrix(F, 2, 3)), Error);

    std::mt19937_64 rng(7);
    for (std::uint32_t N : {1u, 5u, 12u}) {
      const auto K = CycloField::get(N);
      for (std::size_t n = 1; n <= 4; ++n) {
        const auto A = oracle::random_matrix(K, n, rng), B = oracle::random_matrix(K, n, rng);
        CHECK(det_exact(A) == oracle::det_cofactor(A));
        CHECK(det_gauss(A) == det_exact(A));
        if (auto b = det_bareiss(A)) CHECK(*b == det_gauss(A));
        CHECK(det_exact(A * B) == det_exact(A) * det_exact(B));
        CHECK(det_exact(A.transpose()) == det_exact(A));
      }
    }
  }

  TEST_CASE("linear solve") {
    const auto F = CycloField::get(5);
    CycloMatrix D(F, 2, 2);
    D.at(0, 0) = CycloNum::from_int(F, 2);
    D.at(0, 1) = CycloNum(F);
    D.at(1, 0) = CycloNum(F);
    D.at(1, 1) = CycloNum::from_int(F, 3);
    const auto x = solve_exact(D, {CycloNum::from_int(F, 1), CycloNum::from_int(F, 1)});
    CHECK(x[0] == CycloNum::from_rational(F, mpq_class(1, 2)));
    CHECK(x[1] == CycloNum::from_rational(F, mpq_class(1, 3)));

    std::mt19937_64 rng(11);
    const auto M = oracle::random_matrix(F, 4, rng);
    std::vector<CycloNum> x0, b(4, CycloNum(F));
    for (int i = 0; i < 4; ++i) x0.push_back(oracle::random_cyclo(F, rng));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) b[i] += M.at(i, j) * x0[j];
    if (!det_exact(M).is_zero()) CHECK(solve_exact(M, b) == x0);

    CycloMatrix S(F, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) S.at(i, j) = CycloNum::from_int(F, 1);
    CHECK_THROWS_AS(solve_exact(S, {CycloNum(F), CycloNum(F)}), Error);
  }

  TEST_CASE("cyclic sums reduce to the same canonical value") {
    const auto F = CycloField::get(10);
    CyclicSum s(F);
    for (int k = 0; k < 10; ++k) s.add_root(k);
    CHECK(s.reduce().is_zero());
    CyclicSum t(F);
    t.add_rotated(CycloNum::from_rational(F, mpq_class(1, 2)), 3);
    t.add_root(3);
    CHECK(t.reduce() == z(F, 3).scalar_mul(mpq_class(3, 2)));
  }
}
