#include "ffm/modular.hpp"

#include "ffm/arith.hpp"
#include "ffm/error.hpp"

namespace ffm {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModularImage::ModularImage(std::uint32_t N) : N_(N) {
  // Largest prime below 2^31 that is 1 mod N; products then fit in 64 bits.
  std::uint64_t l = ((std::uint64_t{1} << 31) - 1) / N * N + 1;
  while (l > std::uint64_t{1} << 30 && !is_prime_u64(l)) l -= N;
  if (!is_prime_u64(l)) throw Error(ErrorCode::InvalidArgument, "no suitable modular prime");
  l_ = l;

  const auto factors = prime_factors(N);
  const std::uint64_t cof = (l - 1) / N;
  w_ = 0;
  for (std::uint64_t a = 2; w_ == 0; ++a) {
    const std::uint64_t c = powmod(a, cof, l);
    bool primitive = c != 0;
    for (auto r : factors)
      if (powmod(c, N / r, l) == 1) primitive = false;
    if (N == 1) primitive = true;
    if (primitive) w_ = N == 1 ? 1 : c;
  }
  wpow_.resize(N);
  wpow_[0] = 1;
  for (std::uint32_t i = 1; i < N; ++i) wpow_[i] = mulmod(wpow_[i - 1], w_, l_);
}

std::uint64_t ModularImage::mul(std::uint64_t a, std::uint64_t b) const { return a * b % l_; }

std::uint64_t ModularImage::inv(std::uint64_t a) const { return powmod(a, l_ - 2, l_); }

std::optional<std::uint64_t> ModularImage::map(const CycloNum& x) const {
  auto reduce = [&](const mpz_class& z) -> std::uint64_t { return mpz_fdiv_ui(z.get_mpz_t(), l_); };
  const std::uint64_t den = reduce(x.den());
  if (den == 0) return std::nullopt;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.num().size(); ++i) {
    if (x.num()[i] == 0) continue;
    acc += reduce(x.num()[i]) * wpow_[i] % l_;
    if (acc >= l_) acc -= l_;
  }
  return acc * inv(den) % l_;
}

std::uint64_t ModularImage::det(std::uint64_t* a, std::size_t k) const {
  // Division-free elimination: row_i <- pv * row_i - x * row_c scales the
  // determinant by pv, undone with one inverse at the end.
  std::uint64_t diag = 1;
  std::uint64_t scale = 1;
  bool negate = false;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv * k + c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < k; ++j) std::swap(a[c * k + j], a[piv * k + j]);
      negate = !negate;
    }
    const std::uint64_t pv = a[c * k + c];
    diag = diag * pv % l_;
    for (std::size_t i = c + 1; i < k; ++i) {
      const std::uint64_t x = a[i * k + c];
      if (x == 0) continue;
      scale = scale * pv % l_;
      for (std::size_t j = c + 1; j < k; ++j)
        a[i * k + j] = (a[i * k + j] * pv % l_ + (l_ - x) * a[c * k + j] % l_) % l_;
    }
  }
  std::uint64_t d = diag * inv(scale) % l_;
  if (negate && d != 0) d = l_ - d;
  return d;
}

}  // namespace ffm
