#pragma once

// Brute-force reference computations for the tests. Deliberately naive and
// independent of the library's code paths.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// { x^m mod p : 1 <= x < p } by direct exponentiation.
inline std::set<std::uint64_t> power_residues(std::uint64_t p, unsigned m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 1; x < p; ++x) {
    std::uint64_t y = 1;
    for (unsigned i = 0; i < m; ++i) y = y * x % p;
    out.insert(y);
  }
  return out;
}

/// Carry-less product in GF(2^k) reduced by `modulus` (bit i = coefficient of x^i).
inline std::uint32_t gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned k) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < k; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (unsigned i = 2 * k; i-- > k;) {
    if ((r >> i) & 1) r ^= modulus << (i - k);
  }
  return r;
}

/// First k-subset (lexicographic) of [0, n) whose pairs all satisfy `edge`.
inline std::vector<std::uint32_t> first_clique(std::uint32_t n, unsigned k,
                                               const std::function<bool(std::uint32_t, std::uint32_t)>& edge) {
  std::vector<std::uint32_t> pick;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t from) {
    if (pick.size() == k) return true;
    for (std::uint32_t v = from; v < n; ++v) {
      bool ok = true;
      for (auto u : pick) ok = ok && edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0) ? pick : std::vector<std::uint32_t>{};
}

}  // namespace oracle
