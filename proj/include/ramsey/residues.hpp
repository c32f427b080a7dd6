#pragma once

// m-th power residue cosets of a finite field's multiplicative group, the
// residue sieve, and the normalized monochromatic-clique search.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/field.hpp"

namespace ramsey {

/// The m cosets of the m-th power residues. Coset 0 holds the residues;
/// coset i is g^i times coset 0, where g is the field's least primitive
/// element. Each coset is sorted by canonical encoding.
class CosetPartition {
 public:
  /// Throws DomainError unless m >= 2 and m divides order-1.
  CosetPartition(const FieldSpec& spec, unsigned m);

  const Field& field() const { return field_; }
  unsigned m() const { return m_; }
  FieldElement generator() const { return generator_; }

  std::span<const FieldElement> coset(unsigned i) const { return cosets_.at(i); }
  /// Coset label of a nonzero element; nullopt for zero.
  std::optional<unsigned> coset_index(FieldElement x) const;
  bool is_residue(FieldElement x) const { return label_[x.code] == 0; }

 private:
  static constexpr std::uint8_t kZeroLabel = 0xff;

  Field field_;
  unsigned m_;
  FieldElement generator_;
  std::vector<std::uint8_t> label_;  // indexed by canonical encoding
  std::vector<std::vector<FieldElement>> cosets_;
};

inline CosetPartition power_cosets(const FieldSpec& spec, unsigned m) { return {spec, m}; }

/// True iff -1 is an m-th power residue, i.e. the Cayley coloring over this
/// partition is well defined.
bool negation_closed(const CosetPartition& partition);

/// Residues R != 1 with R-1 also a residue, ascending.
std::vector<FieldElement> sieve(const CosetPartition& partition);

/// A set {1, B1, ..., B(t-2)} whose members, their pairwise differences and
/// each Bi - 1 all lie in the residue coset. Elements are ascending.
struct NormalizedWitness {
  unsigned t = 0;
  std::vector<FieldElement> elements;
};

struct NormalizedSearchOptions {
  /// 0 means one worker per hardware thread.
  unsigned threads = 1;
};

/// Searches (t-2)-subsets of the sieve in ascending lexicographic order and
/// returns the least one whose pairwise differences are all residues. A
/// witness exists iff the Cayley coloring of the partition has a
/// monochromatic K_t. The reported witness does not depend on the worker
/// count. Throws DomainError for t < 3 or a non-negation-closed partition.
std::optional<NormalizedWitness> find_normalized_clique(const CosetPartition& partition, unsigned t,
                                                        const NormalizedSearchOptions& options = {});

}  // namespace ramsey
