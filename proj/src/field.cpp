#include "ramsey/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "ramsey/error.hpp"

namespace ramsey {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint32_t kMaxDegree = 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, n);
    a = mul_mod(a, a, n);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Remainder of f modulo the monic g over Z_p, both given low-to-high.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> f, std::span<const std::uint64_t> g,
                                    std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t c = f[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[i - dg + j] = (f[i - dg + j] + (p - g[j]) % p * c) % p;
    }
  }
  f.resize(dg);
  return f;
}

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
  auto power_le = [&](std::uint64_t base) {
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= base;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !power_le(r)) --r;
  while (power_le(r + 1)) ++r;
  return r;
}

}  // namespace

std::uint64_t FieldSpec::order() const {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < degree; ++i) n *= characteristic;
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // These twelve bases are deterministic below 3.3e24.
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, base)) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(std::span<const std::uint32_t> monic_poly, std::uint32_t p) {
  if (monic_poly.size() < 2 || monic_poly.back() != 1) return false;
  const std::size_t deg = monic_poly.size() - 1;
  if (deg == 1) return true;
  const std::vector<std::uint64_t> f(monic_poly.begin(), monic_poly.end());

  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Enumerate every monic divisor candidate of degree d.
    std::vector<std::uint64_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      const auto rem = poly_rem(f, g, p);
      bool zero = true;
      for (auto c : rem) zero = zero && c == 0;
      if (zero) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 2) throw DomainError("prime fields have no modulus polynomial");
  std::vector<std::uint32_t> poly(k + 1, 0);
  poly[k] = 1;
  while (true) {
    if (is_irreducible(poly, p)) return poly;
    std::size_t i = 0;
    while (i < k && ++poly[i] == p) poly[i++] = 0;
    if (i == k) break;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable over a finite field
}

FieldSpec make_field(std::uint64_t p, std::uint64_t k) {
  if (k < 1) throw DomainError("field degree must be at least 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k > kMaxDegree) throw DomainError("field order exceeds 2^31");
  u128 order = 1;
  for (std::uint64_t i = 0; i < k; ++i) order *= p;
  if (order > kMaxFieldOrder) throw DomainError("field order exceeds 2^31");

  FieldSpec spec;
  spec.characteristic = static_cast<std::uint32_t>(p);
  spec.degree = static_cast<std::uint32_t>(k);
  if (k > 1) spec.modulus = canonical_modulus(spec.characteristic, spec.degree);
  return spec;
}

std::vector<FieldSpec> admissible_orders(std::uint64_t m, std::uint64_t lo, std::uint64_t hi,
                                         bool prime_only) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (lo > hi) throw DomainError("empty order range");
  if (hi > kMaxFieldOrder) throw DomainError("field order exceeds 2^31");

  std::vector<FieldSpec> out;
  std::uint64_t n = std::max<std::uint64_t>(lo, 2);
  // First N >= n with N = 1 (mod m).
  n += (m - (n - 1) % m) % m;
  for (; n <= hi; n += m) {
    if (is_prime(n)) {
      out.push_back(make_field(n, 1));
      continue;
    }
    if (prime_only) continue;
    for (unsigned k = 2; k <= kMaxDegree; ++k) {
      const std::uint64_t r = integer_root(n, k);
      if (r < 2) break;
      u128 pw = 1;
      for (unsigned i = 0; i < k; ++i) pw *= r;
      if (pw == n && is_prime(r)) {
        out.push_back(make_field(r, k));
        break;
      }
    }
  }
  return out;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.degree < 1) throw DomainError("field degree must be at least 1");
  if (!is_prime(spec_.characteristic)) {
    throw DomainError(std::to_string(spec_.characteristic) + " is not prime");
  }
  if (spec_.degree > kMaxDegree) throw DomainError("field order exceeds 2^31");
  u128 order = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) order *= spec_.characteristic;
  if (order > kMaxFieldOrder) throw DomainError("field order exceeds 2^31");
  order_ = static_cast<std::uint32_t>(order);

  if (spec_.degree == 1) {
    if (!spec_.modulus.empty()) throw DomainError("prime fields take no modulus polynomial");
    return;
  }
  if (spec_.modulus.size() != spec_.degree + 1) {
    throw DomainError("modulus polynomial must have degree " + std::to_string(spec_.degree));
  }
  for (auto c : spec_.modulus) {
    if (c >= spec_.characteristic) throw DomainError("modulus coefficient out of range");
  }
  if (spec_.modulus.back() != 1) throw DomainError("modulus polynomial must be monic");
  if (!is_irreducible(spec_.modulus, spec_.characteristic)) {
    throw DomainError("modulus polynomial is reducible");
  }
}

FieldElement Field::element(std::uint64_t code) const {
  if (code >= order_) {
    throw DomainError("element " + std::to_string(code) + " outside field of order " +
                      std::to_string(order_));
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  const std::uint64_t p = spec_.characteristic;
  if (spec_.degree == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} + b.code) % p)};
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    out += ((a.code % p + b.code % p) % p) * scale;
    a.code /= p;
    b.code /= p;
    scale *= p;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::neg(FieldElement a) const {
  const std::uint64_t p = spec_.characteristic;
  if (spec_.degree == 1) return {static_cast<std::uint32_t>((p - a.code) % p)};
  std::uint64_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.degree; ++i) {
    out += ((p - a.code % p) % p) * scale;
    a.code /= p;
    scale *= p;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  if (spec_.degree == 1) {
    const std::uint64_t p = spec_.characteristic;
    return {static_cast<std::uint32_t>((std::uint64_t{a.code} + p - b.code) % p)};
  }
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  const std::uint64_t p = spec_.characteristic;
  if (spec_.degree == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p)};

  const std::uint32_t k = spec_.degree;
  std::array<std::uint64_t, kMaxDegree> x{}, y{};
  for (std::uint32_t i = 0; i < k; ++i) {
    x[i] = a.code % p;
    y[i] = b.code % p;
    a.code /= p;
    b.code /= p;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::uint32_t i = 2 * k - 1; i-- > k;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    // x^i = x^(i-k) * x^k and x^k = -(c0 + c1 x + ... + c(k-1) x^(k-1)).
    for (std::uint32_t j = 0; j < k; ++j) {
      prod[i - k + j] = (prod[i - k + j] + c * ((p - spec_.modulus[j]) % p)) % p;
    }
    prod[i] = 0;
  }
  std::uint64_t out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + prod[i];
  return {static_cast<std::uint32_t>(out)};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw DomainError("zero has no inverse");
  return pow(a, std::uint64_t{order_} - 2);
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> out(spec_.degree);
  for (auto& c : out) {
    c = a.code % spec_.characteristic;
    a.code /= spec_.characteristic;
  }
  return out;
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != spec_.degree) throw DomainError("coefficient vector has wrong length");
  std::uint64_t out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= spec_.characteristic) throw DomainError("coefficient out of range");
    out = out * spec_.characteristic + coeffs[i];
  }
  return {static_cast<std::uint32_t>(out)};
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
  if (a.code == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t e = std::uint64_t{order_} - 1;
  for (auto q : prime_factors(e)) {
    while (e % q == 0 && pow(a, e / q) == one()) e /= q;
  }
  return e;
}

FieldElement Field::least_primitive_element() const {
  const std::uint64_t group = std::uint64_t{order_} - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t code = 1; code < order_; ++code) {
    const FieldElement g{code};
    bool primitive = true;
    for (auto q : factors) {
      if (pow(g, group / q) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw DomainError("multiplicative group has no generator");  // unreachable
}

}  // namespace ramsey
