#pragma once

// Exact arithmetic in Q(zeta_N).
//
// A CycloNum is num(zeta)/den where num is an integer polynomial of degree
// < phi(N), reduced modulo the N-th cyclotomic polynomial, and den > 0 is a
// single integer with gcd(den, all numerator coefficients) = 1.  With that
// normalization two values are equal iff their stored data is equal.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ffm {

// Integer coefficients of Phi_N, constant term first.
std::vector<mpz_class> cyclotomic_poly(std::uint32_t N);

class CycloField;
using CycloRef = std::shared_ptr<const CycloField>;

class CycloField {
 public:
  // Shared, cached instance for conductor N.
  static CycloRef get(std::uint32_t N);

  std::uint32_t N() const { return N_; }
  std::uint32_t degree() const { return d_; }
  const std::vector<mpz_class>& phi() const { return phi_; }

  // In-place reduction of an integer polynomial modulo Phi_N. On return
  // poly.size() == degree().
  void reduce(std::vector<mpz_class>& poly) const;

 private:
  explicit CycloField(std::uint32_t N);

  std::uint32_t N_;
  std::uint32_t d_;
  std::vector<mpz_class> phi_;
  // Nonzero (index, coefficient) pairs of Phi_N below the leading term.
  std::vector<std::pair<std::uint32_t, mpz_class>> tail_;
};

class CycloNum {
 public:
  CycloNum() = default;  // detached zero; only useful as a placeholder
  explicit CycloNum(CycloRef F);

  static CycloNum from_int(CycloRef F, const mpz_class& k);
  static CycloNum from_rational(CycloRef F, const mpq_class& r);
  static CycloNum zeta_pow(CycloRef F, std::int64_t k);
  // From integer numerator coefficients (any length, reduced here) over den.
  static CycloNum from_poly(CycloRef F, std::vector<mpz_class> num, mpz_class den = 1);

  const CycloRef& field() const { return F_; }
  std::uint32_t N() const;
  const std::vector<mpz_class>& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  mpq_class coeff(std::size_t i) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_integral() const { return den_ == 1; }
  // True iff the value lies in Q; writes it to *out when given.
  bool is_rational(mpq_class* out = nullptr) const;

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const { return *this * o.inv(); }
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  CycloNum scalar_mul(const mpq_class& r) const;
  // this * zeta^k, done by shifting.
  CycloNum mul_zeta(std::int64_t k) const;
  CycloNum inv() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycloNum galois(std::int64_t k) const;
  CycloNum conj() const { return galois(-1); }

  // Floating point value at exp(2 pi i / N). Display only. Computed in long
  // double; precision_bits must be >= 53 and bits beyond 64 are not honoured.
  std::complex<double> to_complex(int precision_bits = 53) const;
  std::string to_string() const;

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

 private:
  friend class CyclicSum;
  void normalize();
  void check_same(const CycloNum& o) const;

  CycloRef F_;
  std::vector<mpz_class> num_;
  mpz_class den_{1};
};

// Accumulator in Q[x]/(x^N - 1) with one common denominator. Sums of roots
// of unity are built here and reduced once at the end.
class CyclicSum {
 public:
  explicit CyclicSum(CycloRef F);

  void add_root(std::int64_t k, long c = 1);
  // += x * zeta^k
  void add_rotated(const CycloNum& x, std::int64_t k);
  CycloNum reduce() const;

 private:
  void rescale_to(const mpz_class& den);

  CycloRef F_;
  std::vector<mpz_class> acc_;
  mpz_class den_{1};
};

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(CycloRef F, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const CycloRef& field() const { return F_; }

  CycloNum& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const CycloNum& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  CycloMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  CycloMatrix transpose() const;
  CycloMatrix operator*(const CycloMatrix& o) const;
  bool operator==(const CycloMatrix& o) const;

  std::vector<std::int64_t> row_labels;
  std::vector<std::int64_t> col_labels;

 private:
  CycloRef F_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> entries_;
};

// Fraction-free elimination over Z[zeta_N] after clearing row denominators.
// Empty if an exact division fails its integrality check.
std::optional<CycloNum> det_bareiss(const CycloMatrix& M);
// Plain elimination with field inverses.
CycloNum det_gauss(const CycloMatrix& M);
// Bareiss, falling back to Gauss. Throws NotSquare.
CycloNum det_exact(const CycloMatrix& M);
// Unique x with M x = b. Throws NotSquare or Singular.
std::vector<CycloNum> solve_exact(const CycloMatrix& M, const std::vector<CycloNum>& b);

}  // namespace ffm
