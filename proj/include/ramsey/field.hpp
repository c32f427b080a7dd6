#pragma once

// Exact arithmetic in prime fields Z_p and Galois fields GF(p^k).
//
// Elements are carried by their canonical integer encoding
// c0 + c1*p + ... + c(k-1)*p^(k-1), which is also the vertex label used by
// every coloring built over the field. For prime fields the encoding is the
// residue itself.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

/// Largest supported field order.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

struct FieldSpec {
  std::uint32_t characteristic = 2;
  std::uint32_t degree = 1;
  /// Coefficients c0..ck of the monic modulus; empty for prime fields.
  std::vector<std::uint32_t> modulus;

  std::uint64_t order() const;
  bool is_prime_field() const { return degree == 1; }

  bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
  std::uint32_t code = 0;

  auto operator<=>(const FieldElement&) const = default;
};

class Field {
 public:
  /// Validates every FieldSpec invariant (prime characteristic, monic
  /// irreducible modulus of the right degree). Throws DomainError.
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return spec_.characteristic; }
  std::uint32_t degree() const { return spec_.degree; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Checked conversion from a canonical encoding.
  FieldElement element(std::uint64_t code) const;
  bool contains(FieldElement a) const { return a.code < order_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement a) const;
  /// The primitive element with the least canonical encoding.
  FieldElement least_primitive_element() const;

 private:
  FieldSpec spec_;
  std::uint32_t order_;
};

/// Deterministic for the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Irreducibility of a monic polynomial over Z_p by trial division by every
/// monic polynomial of degree <= deg/2. Coefficients are c0..ck.
bool is_irreducible(std::span<const std::uint32_t> monic_poly, std::uint32_t p);

/// Lexicographically least monic irreducible of degree k over Z_p, ordered by
/// the integer encoding of its lower coefficients c0 + c1*p + ...
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k);

/// Z_p for k == 1, otherwise GF(p^k) with the canonical modulus.
FieldSpec make_field(std::uint64_t p, std::uint64_t k);

/// Every field order N in [lo, hi] with m | N-1, ascending. With prime_only
/// unset, prime powers p^k (k >= 2) are included with their canonical modulus.
std::vector<FieldSpec> admissible_orders(std::uint64_t m, std::uint64_t lo, std::uint64_t hi,
                                         bool prime_only);

}  // namespace ramsey
