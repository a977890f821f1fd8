#include "ffm/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "ffm/arith.hpp"
#include "ffm/error.hpp"

namespace ffm {

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

// a / b for monic b, exact.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  ZPoly quot(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
  return quot;
}

ZPoly x_pow_minus_one(std::uint32_t n) {
  ZPoly r(n + 1);
  r[0] = -1;
  r[n] = 1;
  return r;
}

// q, r with a = q b + r, deg r < deg b.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QPoly quot(a.size() - db);
  const mpq_class lead_inv = 1 / b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const mpq_class c = a[i] * lead_inv;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  return {quot, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(std::uint32_t N) {
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be >= 1");
  std::map<std::uint64_t, ZPoly> memo;
  for (auto d : divisors(N)) {
    ZPoly num = x_pow_minus_one(static_cast<std::uint32_t>(d));
    for (auto& [e, phi_e] : memo)
      if (d % e == 0) num = zdiv_exact(std::move(num), phi_e);
    memo[d] = std::move(num);
  }
  return memo[N];
}

CycloField::CycloField(std::uint32_t N) : N_(N) {
  phi_ = cyclotomic_poly(N);
  d_ = static_cast<std::uint32_t>(phi_.size() - 1);
  if (phi_.back() != 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial not monic");

  ZPoly prod{1};
  for (auto d : divisors(N)) prod = zmul(prod, d == N ? phi_ : cyclotomic_poly(static_cast<std::uint32_t>(d)));
  if (prod != x_pow_minus_one(N))
    throw Error(ErrorCode::InvalidArgument, "product of cyclotomic polynomials is not x^N - 1");

  for (std::uint32_t j = 0; j < d_; ++j)
    if (phi_[j] != 0) tail_.emplace_back(j, phi_[j]);
}

CycloRef CycloField::get(std::uint32_t N) {
  static std::mutex mu;
  static std::map<std::uint32_t, CycloRef> registry;
  {
    std::lock_guard lock(mu);
    auto it = registry.find(N);
    if (it != registry.end()) return it->second;
  }
  CycloRef F(new CycloField(N));
  std::lock_guard lock(mu);
  return registry.emplace(N, F).first->second;
}

void CycloField::reduce(std::vector<mpz_class>& poly) const {
  for (std::size_t i = poly.size(); i-- > d_;) {
    if (poly[i] == 0) continue;
    const mpz_class c = poly[i];
    const std::size_t base = i - d_;
    for (const auto& [j, coef] : tail_) poly[base + j] -= c * coef;
  }
  poly.resize(d_);
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum(CycloRef F) : F_(std::move(F)) { num_.resize(F_->degree()); }

CycloNum CycloNum::from_int(CycloRef F, const mpz_class& k) {
  CycloNum x(std::move(F));
  x.num_[0] = k;
  return x;
}

CycloNum CycloNum::from_rational(CycloRef F, const mpq_class& r) {
  CycloNum x(std::move(F));
  x.num_[0] = r.get_num();
  x.den_ = r.get_den();
  x.normalize();
  return x;
}

CycloNum CycloNum::zeta_pow(CycloRef F, std::int64_t k) {
  const auto N = static_cast<std::int64_t>(F->N());
  ZPoly v(mod_floor(k, N) + 1);
  v.back() = 1;
  return from_poly(std::move(F), std::move(v));
}

CycloNum CycloNum::from_poly(CycloRef F, std::vector<mpz_class> num, mpz_class den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  CycloNum x;
  x.F_ = std::move(F);
  if (num.size() < x.F_->degree()) num.resize(x.F_->degree());
  x.F_->reduce(num);
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

std::uint32_t CycloNum::N() const { return F_ ? F_->N() : 0; }

mpq_class CycloNum::coeff(std::size_t i) const {
  mpq_class r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  bool any = false;
  for (const auto& c : num_) {
    if (c == 0) continue;
    any = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (!any) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycloNum::check_same(const CycloNum& o) const {
  if (!F_ || !o.F_ || F_->N() != o.F_->N())
    throw Error(ErrorCode::FieldMismatch, "cyclotomic values from different fields");
}

bool CycloNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycloNum::is_rational(mpq_class* out) const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  if (out) *out = num_.empty() ? mpq_class(0) : coeff(0);
  return true;
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (N() != o.N()) return false;
  return den_ == o.den_ && num_ == o.num_;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  check_same(o);
  CycloNum r(F_);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] + o.num_[i];
    r.den_ = den_;
  } else {
    const mpz_class l = lcm(den_, o.den_);
    const mpz_class a = l / den_, b = l / o.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * a + o.num_[i] * b;
    r.den_ = l;
  }
  r.normalize();
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  check_same(o);
  ZPoly prod = zmul(num_, o.num_);
  if (prod.empty()) return CycloNum(F_);
  return from_poly(F_, std::move(prod), den_ * o.den_);
}

CycloNum CycloNum::scalar_mul(const mpq_class& r) const {
  CycloNum x = *this;
  for (auto& c : x.num_) c *= r.get_num();
  x.den_ *= r.get_den();
  if (r == 0) x.den_ = 1;
  x.normalize();
  return x;
}

CycloNum CycloNum::mul_zeta(std::int64_t k) const {
  const auto N = static_cast<std::int64_t>(F_->N());
  const std::size_t shift = mod_floor(k, N);
  if (shift == 0) return *this;
  ZPoly v(num_.size() + shift);
  for (std::size_t i = 0; i < num_.size(); ++i) v[i + shift] = num_[i];
  return from_poly(F_, std::move(v), den_);
}

CycloNum CycloNum::galois(std::int64_t k) const {
  const auto N = static_cast<std::int64_t>(F_->N());
  const std::int64_t kk = mod_floor(k, N);
  if (std::gcd(kk, N) != 1 && N > 1)
    throw Error(ErrorCode::InvalidArgument, "Galois exponent not coprime to conductor");
  ZPoly v(std::max<std::int64_t>(N, num_.size()));
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) v[(static_cast<std::int64_t>(i) * kk) % N] += num_[i];
  return from_poly(F_, std::move(v), den_);
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class r;
  if (is_rational(&r)) return from_rational(F_, 1 / r);

  // Extended Euclid on (Phi_N, num); r_i = s_i * num mod Phi_N throughout.
  QPoly r0(F_->phi().begin(), F_->phi().end());
  QPoly r1(num_.begin(), num_.end());
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [quot, rem] = qdivmod(r0, r1);
    if (rem.empty()) throw Error(ErrorCode::DivisionByZero, "value shares a factor with the modulus");
    QPoly s2 = qsub(s0, qmul(quot, s1));
    const mpq_class lead_inv = 1 / rem.back();
    for (auto& c : rem) c *= lead_inv;
    for (auto& c : s2) c *= lead_inv;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c: inverse of num is s1 / c, of num/den is den*s1/c.
  const mpq_class scale = mpq_class(den_) / r1[0];
  mpz_class common = 1;
  for (auto& c : s1) {
    c *= scale;
    common = lcm(common, c.get_den());
  }
  ZPoly out(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i].get_num() * (common / s1[i].get_den());
  return from_poly(F_, std::move(out), common);
}

std::complex<double> CycloNum::to_complex(int precision_bits) const {
  if (precision_bits < 53) throw Error(ErrorCode::InvalidArgument, "precision_bits must be >= 53");
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0, im = 0;
  const long double N = F_ ? F_->N() : 1;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const long double c = mpz_get_d(num_[i].get_mpz_t());
    const long double ang = two_pi * static_cast<long double>(i) / N;
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  const long double d = mpz_get_d(den_.get_mpz_t());
  return {static_cast<double>(re / d), static_cast<double>(im / d)};
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const mpz_class& c = num_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpz_class a = abs(c);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  if (den_ == 1) return os.str();
  return "(" + os.str() + ")/" + den_.get_str();
}

// ---------------------------------------------------------------------------

CyclicSum::CyclicSum(CycloRef F) : F_(std::move(F)), acc_(F_->N()) {}

void CyclicSum::add_root(std::int64_t k, long c) {
  const auto N = static_cast<std::int64_t>(F_->N());
  auto& slot = acc_[mod_floor(k, N)];
  if (den_ == 1) slot += c;
  else slot += den_ * c;
}

void CyclicSum::rescale_to(const mpz_class& den) {
  const mpz_class f = den / den_;
  for (auto& c : acc_)
    if (c != 0) c *= f;
  den_ = den;
}

void CyclicSum::add_rotated(const CycloNum& x, std::int64_t k) {
  if (x.N() != F_->N()) throw Error(ErrorCode::FieldMismatch, "cyclic sum over a different conductor");
  if (x.den_ != den_) {
    const mpz_class l = lcm(den_, x.den_);
    if (l != den_) rescale_to(l);
  }
  const auto N = static_cast<std::int64_t>(F_->N());
  const std::size_t shift = mod_floor(k, N);
  const bool plain = x.den_ == den_;
  const mpz_class f = plain ? mpz_class(1) : den_ / x.den_;
  for (std::size_t i = 0; i < x.num_.size(); ++i) {
    if (x.num_[i] == 0) continue;
    std::size_t j = i + shift;
    if (j >= acc_.size()) j -= acc_.size();
    if (plain) acc_[j] += x.num_[i];
    else acc_[j] += x.num_[i] * f;
  }
}

CycloNum CyclicSum::reduce() const { return CycloNum::from_poly(F_, acc_, den_); }

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(CycloRef F, std::size_t rows, std::size_t cols)
    : F_(std::move(F)), rows_(rows), cols_(cols), entries_(rows * cols, CycloNum(F_)) {
  for (std::size_t i = 0; i < rows; ++i) row_labels.push_back(static_cast<std::int64_t>(i));
  for (std::size_t j = 0; j < cols; ++j) col_labels.push_back(static_cast<std::int64_t>(j));
}

CycloMatrix CycloMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  CycloMatrix S(F_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    S.row_labels[i] = row_labels.at(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) S.at(i, j) = at(rows[i], cols[j]);
  }
  for (std::size_t j = 0; j < cols.size(); ++j) S.col_labels[j] = col_labels.at(cols[j]);
  return S;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix T(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  T.row_labels = col_labels;
  T.col_labels = row_labels;
  return T;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "dimension mismatch in matrix product");
  CycloMatrix P(F_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      CycloNum s(F_);
      for (std::size_t k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
      P.at(i, j) = s;
    }
  return P;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

// ---------------------------------------------------------------------------

namespace {

void require_square(const CycloMatrix& M) {
  if (M.rows() != M.cols())
    throw Error(ErrorCode::NotSquare,
                std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + " matrix");
}

using Grid = std::vector<std::vector<CycloNum>>;

Grid to_grid(const CycloMatrix& M) {
  Grid a(M.rows(), std::vector<CycloNum>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = M.at(i, j);
  return a;
}

}  // namespace

std::optional<CycloNum> det_bareiss(const CycloMatrix& M) {
  require_square(M);
  const CycloRef& F = M.field();
  const std::size_t n = M.rows();
  if (n == 0) return CycloNum::from_int(F, 1);

  Grid a = to_grid(M);
  mpz_class scale = 1;
  for (auto& row : a) {
    mpz_class l = 1;
    for (const auto& x : row) l = lcm(l, x.den());
    if (l == 1) continue;
    scale *= l;
    for (auto& x : row) x = x.scalar_mul(mpq_class(l));
  }

  int sign = 1;
  CycloNum prev_inv = CycloNum::from_int(F, 1);
  bool have_prev = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return CycloNum(F);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycloNum v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (have_prev) {
          v = v * prev_inv;
          if (!v.is_integral()) return std::nullopt;
        }
        a[i][j] = std::move(v);
      }
      a[i][k] = CycloNum(F);
    }
    prev_inv = a[k][k].inv();
    have_prev = true;
  }
  CycloNum det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  if (scale != 1) det = det.scalar_mul(mpq_class(1, 1) / mpq_class(scale));
  return det;
}

CycloNum det_gauss(const CycloMatrix& M) {
  require_square(M);
  const CycloRef& F = M.field();
  const std::size_t n = M.rows();
  Grid a = to_grid(M);
  CycloNum det = CycloNum::from_int(F, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return CycloNum(F);
    if (piv != k) {
      std::swap(a[k], a[piv]);
      det = -det;
    }
    det *= a[k][k];
    const CycloNum pinv = a[k][k].inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const CycloNum f = a[i][k] * pinv;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

CycloNum det_exact(const CycloMatrix& M) {
  if (auto d = det_bareiss(M)) return *d;
  return det_gauss(M);
}

std::vector<CycloNum> solve_exact(const CycloMatrix& M, const std::vector<CycloNum>& b) {
  require_square(M);
  const std::size_t n = M.rows();
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  Grid a = to_grid(M);
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorCode::Singular, "no pivot in column " + std::to_string(k));
    std::swap(a[k], a[piv]);
    const CycloNum pinv = a[k][k].inv();
    for (std::size_t j = k; j <= n; ++j) a[k][j] = a[k][j] * pinv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      const CycloNum f = a[i][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<CycloNum> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace ffm
