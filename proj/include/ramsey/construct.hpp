#pragma once

// Three-copy block composition: from a witness T avoiding (3,3,k1,...,kr)
// and a witness G avoiding (k1,...,kr), build a witness H avoiding
// (3,3,3,k1,...,kr) on 3|T| + |G| vertices.
//
// Vertex layout of H: copy 1 = [0, nT), copy 2 = [nT, 2nT),
// copy 3 = [2nT, 3nT), G part = [3nT, 3nT + nG).

#include <array>
#include <cstdint>
#include <span>

#include "ramsey/coloring.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

/// Recoloring of T inside one block: color 1 -> image1, color 2 -> image2,
/// colors >= 3 shift up by one. `diag` colors the edge between vertex i of
/// one copy and vertex i of another (unused on the block diagonal).
struct ColorMap {
  unsigned diag = 0;
  unsigned image1 = 0;
  unsigned image2 = 0;

  unsigned apply(unsigned color) const {
    return color == 1 ? image1 : color == 2 ? image2 : color + 1;
  }
};

struct BlockPlan {
  ColorMap a{0, 2, 3};  // copy 1
  ColorMap b{0, 3, 1};  // copy 2
  ColorMap c{0, 1, 2};  // copy 3
  ColorMap d{3, 2, 1};  // copy 2 - copy 1
  ColorMap e{2, 1, 3};  // copy 3 - copy 1
  ColorMap f{1, 3, 2};  // copy 3 - copy 2
  /// Color of every edge from the G part to copies 1, 2, 3.
  std::array<unsigned, 3> tail_to_copy{1, 2, 3};

  /// Map for the block between copies `row` and `col` (0-based, either order).
  const ColorMap& block(unsigned row, unsigned col) const;
};

struct CompositionInput {
  /// r+2 colors; intended to avoid (3, 3, k1, ..., kr).
  const EdgeColoring& base;
  /// r colors; intended to avoid (k1, ..., kr).
  const EdgeColoring& tail;
  /// k1, ..., kr.
  std::span<const unsigned> targets;
};

/// Explicit (r+3)-coloring on 3 nT + nG vertices. With `validate`, both
/// inputs are first verified and a ValidationError names the first
/// forbidden clique. Throws DomainError on color-count or size mismatches.
EdgeColoring chung_compose(const CompositionInput& input, bool validate = true,
                           const SearchOptions& options = {}, const BlockPlan& plan = {});

/// 3M + R - 3: the lower bound on R(3,3,3,k1,...,kr) given witnesses on
/// M-1 and R-1 vertices. Throws DomainError if M < 2 or R < 2.
std::uint64_t bound_value(std::uint64_t m, std::uint64_t r);

}  // namespace ramsey
