#pragma once

// Edge colorings of complete graphs K_n. Colors are 1-based everywhere.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/field.hpp"

namespace ramsey {

class CosetPartition;

using Vertex = std::uint32_t;

/// Explicit colorings are limited to 2^15 vertices.
inline constexpr std::uint32_t kMaxExplicitVertices = std::uint32_t{1} << 15;
inline constexpr unsigned kMaxColors = 255;

class EdgeColoring {
 public:
  /// Cayley coloring over a field: edge {u, v} takes the color whose
  /// connection set holds v - u. Vertices are canonical element encodings.
  struct Circulant {
    Field field;
    /// classes[i] is the connection set of color i+1, ascending.
    std::vector<std::vector<std::uint32_t>> classes;
    /// Color of each nonzero difference, indexed by canonical encoding.
    std::vector<std::uint8_t> color_of_difference;
  };

  /// Upper-triangular row-major storage, one byte per edge.
  struct Explicit {
    std::vector<std::uint8_t> upper;
  };

  /// Throws DomainError unless the classes partition the nonzero elements
  /// and each class is closed under negation.
  static EdgeColoring circulant(const FieldSpec& field, std::vector<std::vector<std::uint32_t>> classes);

  /// `upper` lists colors for (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static EdgeColoring explicit_coloring(std::uint32_t n, unsigned num_colors,
                                        std::vector<std::uint8_t> upper);

  /// Explicit coloring with color_of(u, v) for every u < v.
  static EdgeColoring from_function(std::uint32_t n, unsigned num_colors,
                                    const std::function<unsigned(Vertex, Vertex)>& color_of);

  std::uint32_t size() const { return n_; }
  unsigned num_colors() const { return num_colors_; }
  bool is_circulant() const { return std::holds_alternative<Circulant>(rep_); }
  const Circulant* circulant_data() const { return std::get_if<Circulant>(&rep_); }
  const Explicit* explicit_data() const { return std::get_if<Explicit>(&rep_); }

  /// Throws DomainError for u == v or a vertex out of range.
  unsigned color(Vertex u, Vertex v) const;
  /// Same as color() without argument checks; requires u != v.
  unsigned color_unchecked(Vertex u, Vertex v) const;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b);

 private:
  EdgeColoring(std::uint32_t n, unsigned num_colors, std::variant<Circulant, Explicit> rep)
      : n_(n), num_colors_(num_colors), rep_(std::move(rep)) {}

  std::uint32_t n_;
  unsigned num_colors_;
  std::variant<Circulant, Explicit> rep_;
};

/// Offset of edge (i, j), i < j, in the upper-triangular layout.
inline std::size_t upper_index(std::uint32_t n, Vertex i, Vertex j) {
  return std::size_t{i} * n - std::size_t{i} * (i + 1) / 2 + (j - i - 1);
}

/// Color i+1 is coset i. Throws DomainError if -1 is not a residue.
EdgeColoring build_cayley_coloring(const CosetPartition& partition);

/// Identity on explicit input.
EdgeColoring to_explicit(const EdgeColoring& coloring);

/// The same edges reported with a larger palette (the extra colors unused).
EdgeColoring widen_colors(const EdgeColoring& coloring, unsigned num_colors);

/// Line-oriented text format, tagged `ramsey-coloring v1`.
std::string serialize_coloring(const EdgeColoring& coloring);
void save_coloring(const EdgeColoring& coloring, std::ostream& out);
void save_coloring(const EdgeColoring& coloring, const std::filesystem::path& path);

/// Throws FormatError on any malformed or inconsistent input.
EdgeColoring parse_coloring(std::string_view text);
EdgeColoring load_coloring(std::istream& in);
EdgeColoring load_coloring(const std::filesystem::path& path);

}  // namespace ramsey
