#pragma once

// Exhaustive monochromatic-clique search over an EdgeColoring, and the
// Ramsey lower-bound certificates built on top of it.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

struct SearchOptions {
  /// 0 means one worker per hardware thread.
  unsigned threads = 1;
  /// Report the lexicographically least clique regardless of worker count.
  /// When unset, parallel searches stop at the first clique any worker finds.
  bool deterministic = true;
  /// For circulant colorings, only search cliques containing vertex 0.
  /// Every clique translates to one through 0, so verdicts and the least
  /// witness are unchanged. Ignored for explicit colorings.
  bool use_symmetry = true;
};

struct CliqueSearchResult {
  /// Strictly increasing vertex list, or nullopt when no clique exists.
  std::optional<std::vector<Vertex>> clique;
  std::uint64_t nodes = 0;
  bool deterministic = true;
};

/// Looks for a K_k all of whose edges have `color`. Throws DomainError
/// unless 1 <= color <= C and 2 <= k <= n.
CliqueSearchResult find_mono_clique(const EdgeColoring& coloring, unsigned color, unsigned k,
                                    const SearchOptions& options = {});

struct ColorVerdict {
  unsigned color = 0;
  unsigned target = 0;
  std::optional<std::vector<Vertex>> clique;
};

struct VerificationReport {
  std::vector<ColorVerdict> verdicts;
  std::uint64_t nodes = 0;
  bool deterministic = true;

  bool passed() const;
  /// First color with a monochromatic clique, if any.
  const ColorVerdict* first_failure() const;
};

/// Runs find_mono_clique for each color i against targets[i-1].
VerificationReport verify_witness(const EdgeColoring& coloring, std::span<const unsigned> targets,
                                  const SearchOptions& options = {});

struct RamseyCertificate {
  std::vector<unsigned> targets;
  std::uint32_t n = 0;
  bool pass = false;
  /// Offending color and clique on failure.
  std::optional<std::pair<unsigned, std::vector<Vertex>>> clique;
  /// SHA-256 of the serialized coloring file.
  std::string coloring_sha;

  /// "R(5,5,5)>=242"; only meaningful on pass.
  std::string bound() const;
  /// The certificate file contents.
  std::string to_text() const;
};

RamseyCertificate make_certificate(const EdgeColoring& coloring, std::span<const unsigned> targets,
                                   const SearchOptions& options = {});

/// make_certificate, then writes the file. Throws Error if `out` is not writable.
RamseyCertificate certify(const EdgeColoring& coloring, std::span<const unsigned> targets,
                          const std::filesystem::path& out, const SearchOptions& options = {});

std::string sha256_hex(std::string_view bytes);

std::string format_targets(std::span<const unsigned> targets);

}  // namespace ramsey
