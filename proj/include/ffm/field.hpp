#pragma once

// Finite fields GF(p^n) realized as F_p[x]/(modulus) with log/exp tables.
//
// An element is stored as its index  c_0 + c_1 p + ... + c_{n-1} p^{n-1}
// where c_i is the coefficient of x^i. Index order is the element order used
// wherever ties must break ("lex order"): the highest-degree coefficient is
// the most significant digit, so on a prime field it is the integer order.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ffm {

struct FieldElt {
  std::uint32_t v = 0;
  auto operator<=>(const FieldElt&) const = default;
};

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

  // Lexicographically smallest monic irreducible modulus (coefficients
  // compared constant term first) and smallest primitive element.
  static FieldRef construct(std::uint32_t p, std::uint32_t n, std::uint64_t cap = kDefaultCap);

  // Pinned model: modulus given as [c_0, ..., c_n], must be monic and
  // irreducible over F_p.
  static FieldRef with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                               std::uint64_t cap = kDefaultCap);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElt generator() const { return generator_; }

  FieldElt zero() const { return {0}; }
  FieldElt one() const { return {1}; }
  // The image of the integer k in the prime subfield.
  FieldElt from_int(std::int64_t k) const;
  FieldElt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElt x) const;
  bool contains(FieldElt x) const { return x.v < q_; }

  FieldElt add(FieldElt a, FieldElt b) const;
  FieldElt sub(FieldElt a, FieldElt b) const;
  FieldElt neg(FieldElt a) const;
  FieldElt mul(FieldElt a, FieldElt b) const;
  FieldElt inv(FieldElt a) const;
  FieldElt div(FieldElt a, FieldElt b) const { return mul(a, inv(b)); }
  FieldElt pow(FieldElt a, std::int64_t e) const;

  // x -> x^(p^times)
  FieldElt frobenius(FieldElt x, std::uint32_t times = 1) const;

  // Tr(x) = x + x^p + ... + x^(q/p), reported in [0, p).
  std::uint32_t abs_trace(FieldElt x) const { return trace_[x.v]; }
  // Sum of x^((p^k)^i) for i < n/k; lands in the degree-k subfield.
  FieldElt rel_trace(FieldElt x, std::uint32_t k) const;
  bool in_subfield(FieldElt x, std::uint32_t k) const;

  // Base-g logarithm of a unit, in [0, q-1).
  std::uint32_t discrete_log(FieldElt u) const;
  FieldElt exp_g(std::int64_t k) const;
  std::uint32_t order(FieldElt u) const;

  std::vector<FieldElt> elements() const;
  std::vector<FieldElt> units() const;

 private:
  FieldCtx() = default;
  void build(std::uint64_t cap);

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i <= n
  FieldElt generator_{};
  std::vector<std::uint32_t> log_;    // size q, log_[0] unused
  std::vector<std::uint32_t> exp_;    // size q-1
  std::vector<std::uint32_t> trace_;  // size q
};

// H = {a^m : a a unit}, the unique subgroup of index m in F_q^x.
struct Subgroup {
  FieldRef field;
  std::uint32_t index = 1;         // m
  std::uint32_t order = 1;         // (q-1)/m
  FieldElt generator{};            // g^m
  std::vector<FieldElt> members;   // sorted

  bool contains(FieldElt h) const;
  bool is_trivial() const { return order == 1; }
  // log base g^m of a member, in [0, order)
  std::uint32_t log(FieldElt h) const;
};

Subgroup subgroup_of_index(const FieldRef& field, std::uint32_t m);

// Orbits of H acting multiplicatively on F_q (or F_q^x).
struct OrbitPartition {
  std::vector<std::vector<FieldElt>> orbits;  // sorted by representative, {0} first
  std::vector<FieldElt> reps;                 // smallest element of each orbit
  std::vector<std::int32_t> orbit_of;         // indexed by element, -1 when not covered
  bool includes_zero = false;

  std::size_t size() const { return reps.size(); }
};

OrbitPartition orbit_partition(const Subgroup& H, bool include_zero);

// True iff `set` is a union of H-orbits.
bool is_h_closed(const Subgroup& H, std::span<const FieldElt> set);

// Polynomial helpers over F_p used by field construction; exposed for tests.
namespace fpoly {
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);
}

}  // namespace ffm
