#pragma once

// Reduction of Z[zeta_N][1/den] into F_l for a prime l = 1 mod N, sending
// zeta_N to a fixed primitive N-th root of unity w mod l. The map is a ring
// homomorphism, so a nonzero image of a determinant proves the determinant
// itself is nonzero. A zero image proves nothing.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffm/cyclo.hpp"

namespace ffm {

class ModularImage {
 public:
  explicit ModularImage(std::uint32_t N);

  std::uint64_t prime() const { return l_; }
  std::uint64_t root() const { return w_; }

  // Empty when l divides the denominator.
  std::optional<std::uint64_t> map(const CycloNum& x) const;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + l_ - b; }
  std::uint64_t inv(std::uint64_t a) const;

  // Determinant of a k x k row-major matrix mod l. Destroys the input.
  std::uint64_t det(std::uint64_t* a, std::size_t k) const;

 private:
  std::uint32_t N_;
  std::uint64_t l_;
  std::uint64_t w_;
  std::vector<std::uint64_t> wpow_;  // w^i, i < N
};

bool is_prime_u64(std::uint64_t n);

}  // namespace ffm
