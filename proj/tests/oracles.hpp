#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ffm/chars.hpp"
#include "ffm/cyclo.hpp"
#include "ffm/field.hpp"
#include "ffm/gring.hpp"

namespace ffm::oracle {

// Laplace expansion along the first row.
inline CycloNum det_cofactor(const CycloMatrix& M) {
  const std::size_t n = M.rows();
  if (n == 0) return CycloNum::from_int(M.field(), 1);
  if (n == 1) return M.at(0, 0);
  CycloNum acc(M.field());
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const CycloNum term = M.at(0, j) * det_cofactor(M.submatrix(rows, cols));
    acc = j % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Small random rational combination of roots of unity.
inline CycloNum random_cyclo(const CycloRef& F, std::mt19937_64& rng, int terms = 3, int box = 4) {
  CycloNum x(F);
  for (int i = 0; i < terms; ++i) {
    const auto k = bounded_draw(rng, 0, F->N() - 1);
    const auto c = bounded_draw(rng, -box, box);
    const auto d = bounded_draw(rng, 1, 3);
    x += CycloNum::zeta_pow(F, k).scalar_mul(mpq_class(c, d));
  }
  return x;
}

inline CycloMatrix random_matrix(const CycloRef& F, std::size_t n, std::mt19937_64& rng) {
  CycloMatrix M(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) = random_cyclo(F, rng);
  return M;
}

// Tabulated Gauss sums of GF(25) under the model x^2 - x + 2, written with
// xi = exp(2 pi i / 5) and zeta = exp(2 pi i / 24). Each row lists the
// exponents j it covers and the expression.
struct TableRow {
  std::vector<std::uint32_t> js;
  CycloNum value;
};

inline std::vector<TableRow> gf25_table(const Ambient& A) {
  // xi = zeta_120^24, zeta = zeta_120^5
  auto xi = [&](int k) { return A.zeta(24 * k); };
  auto z = [&](int k) { return A.zeta(5 * k); };
  auto c = [&](long k) { return A.integer(k); };
  const CycloNum s14 = xi(1) + xi(4), s23 = xi(2) + xi(3);
  const CycloNum d14 = xi(1) - xi(4), d23 = xi(2) - xi(3);
  const CycloNum z6 = z(6);
  std::vector<TableRow> rows;
  rows.push_back({{0}, s14 * c(1) + s23 * c(1)});
  rows.push_back({{4, 12, 20}, s14 * c(5) + s23 * c(5)});
  rows.push_back({{8, 16}, s14 * c(-5) + s23 * c(-5)});
  rows.push_back({{6}, s14 * (c(1) + c(2) * z6) + s23 * (c(-1) - c(2) * z6)});
  rows.push_back({{18}, s14 * (c(1) - c(2) * z6) + s23 * (c(-1) + c(2) * z6)});
  rows.push_back({{2, 10}, s14 * (c(-2) + z6) + s23 * (c(2) - z6)});
  rows.push_back({{14, 22}, s14 * (c(-2) - z6) + s23 * (c(2) + z6)});
  rows.push_back({{3, 15}, d14 * (c(-2) + z6) + d23 * (c(1) + c(2) * z6)});
  rows.push_back({{9, 21}, d14 * (c(-2) - z6) + d23 * (c(1) - c(2) * z6)});
  const CycloNum p1 = c(1) + z(1) + z(5) - z6;
  const CycloNum p2 = c(1) - z(3) + z6 + c(2) * z(7);
  const CycloNum p3 = c(1) + z(3) + z6 - c(2) * z(7);
  const CycloNum p4 = c(1) - z(1) - z(5) - z6;
  rows.push_back({{1, 5}, d14 * p1 + d23 * p2});
  rows.push_back({{19, 23}, d14 * p3 + d23 * p4});
  rows.push_back({{7, 11}, d14 * p2 + d23 * p1});
  rows.push_back({{13, 17}, d14 * p4 + d23 * p3});
  return rows;
}

// Plain double-loop transform, for comparison with the library's.
inline SpectrumElt fourier_naive(const GroupRingElt& f) {
  const auto& F = *f.field;
  const Ambient A = ambient(f.field);
  SpectrumElt out{f.field, std::vector<CycloNum>(F.q(), A.zero())};
  for (std::uint32_t a = 0; a < F.q(); ++a)
    for (std::uint32_t x = 0; x < F.q(); ++x)
      out.values[a] += f.coeffs[x] * eval_additive({f.field, FieldElt{a}}, FieldElt{x});
  return out;
}

}  // namespace ffm::oracle
