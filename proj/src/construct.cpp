#include "ramsey/construct.hpp"

#include <string>
#include <vector>

#include "ramsey/error.hpp"

namespace ramsey {

const ColorMap& BlockPlan::block(unsigned row, unsigned col) const {
  if (row < col) std::swap(row, col);
  switch (row * 3 + col) {
    case 0: return a;
    case 4: return b;
    case 8: return c;
    case 3: return d;
    case 6: return e;
    case 7: return f;
    default: throw DomainError("block index out of range");
  }
}

namespace {

void require_witness(const EdgeColoring& coloring, std::span<const unsigned> targets, const char* name,
                     const SearchOptions& options) {
  const auto report = verify_witness(coloring, targets, options);
  if (const auto* bad = report.first_failure()) {
    std::string clique;
    for (auto v : *bad->clique) clique += (clique.empty() ? "" : ",") + std::to_string(v);
    throw ValidationError(std::string(name) + " is not a witness for R(" + format_targets(targets) + "): color " +
                          std::to_string(bad->color) + " has clique " + clique);
  }
}

}  // namespace

EdgeColoring chung_compose(const CompositionInput& input, bool validate, const SearchOptions& options,
                           const BlockPlan& plan) {
  const auto r = static_cast<unsigned>(input.targets.size());
  if (r < 1) throw DomainError("at least one target k_i is required");
  for (unsigned k : input.targets) {
    if (k < 3) throw DomainError("every target k_i must be at least 3");
  }
  if (input.base.num_colors() != r + 2) {
    throw DomainError("T must use " + std::to_string(r + 2) + " colors, has " +
                      std::to_string(input.base.num_colors()));
  }
  if (input.tail.num_colors() != r) {
    throw DomainError("G must use " + std::to_string(r) + " colors, has " + std::to_string(input.tail.num_colors()));
  }
  const std::uint64_t nt = input.base.size();
  const std::uint64_t ng = input.tail.size();
  const std::uint64_t n = 3 * nt + ng;
  if (n > kMaxExplicitVertices) throw DomainError("composed coloring exceeds 2^15 vertices");
  if (r + 3 > kMaxColors) throw DomainError("too many colors");

  if (validate) {
    std::vector<unsigned> base_targets{3, 3};
    base_targets.insert(base_targets.end(), input.targets.begin(), input.targets.end());
    require_witness(input.base, base_targets, "T", options);
    require_witness(input.tail, input.targets, "G", options);
  }

  const auto base_size = static_cast<Vertex>(nt);
  return EdgeColoring::from_function(static_cast<std::uint32_t>(n), r + 3, [&](Vertex u, Vertex v) -> unsigned {
    // u < v, so u's copy index never exceeds v's.
    const Vertex gu = u / base_size, gv = v / base_size;
    if (gv >= 3) {
      if (gu >= 3) return input.tail.color_unchecked(u - 3 * base_size, v - 3 * base_size) + 3;
      return plan.tail_to_copy[gu];
    }
    const ColorMap& map = plan.block(gv, gu);
    const Vertex i = u % base_size, j = v % base_size;
    if (i == j) return map.diag;
    return map.apply(input.base.color_unchecked(i, j));
  });
}

std::uint64_t bound_value(std::uint64_t m, std::uint64_t r) {
  if (m < 2 || r < 2) throw DomainError("bound_value needs M >= 2 and R >= 2");
  return 3 * m + r - 3;
}

}  // namespace ramsey
