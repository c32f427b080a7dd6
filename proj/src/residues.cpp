#include "ramsey/residues.hpp"

#include <atomic>
#include <string>

#include "parallel.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

CosetPartition::CosetPartition(const FieldSpec& spec, unsigned m) : field_(spec), m_(m) {
  const std::uint64_t group = std::uint64_t{field_.order()} - 1;
  if (m < 2 || m >= kZeroLabel) throw DomainError("m must lie in [2, 254]");
  if (group % m != 0) {
    throw DomainError(std::to_string(m) + " does not divide " + std::to_string(group));
  }

  generator_ = field_.least_primitive_element();
  label_.assign(field_.order(), kZeroLabel);
  FieldElement x = field_.one();
  for (std::uint64_t e = 0; e < group; ++e) {
    label_[x.code] = static_cast<std::uint8_t>(e % m);
    x = field_.mul(x, generator_);
  }

  cosets_.assign(m, {});
  for (auto& c : cosets_) c.reserve(group / m);
  for (std::uint32_t code = 1; code < field_.order(); ++code) {
    cosets_[label_[code]].push_back(FieldElement{code});
  }
}

std::optional<unsigned> CosetPartition::coset_index(FieldElement x) const {
  const std::uint8_t l = label_.at(x.code);
  if (l == kZeroLabel) return std::nullopt;
  return l;
}

bool negation_closed(const CosetPartition& partition) {
  return partition.is_residue(partition.field().neg(partition.field().one()));
}

std::vector<FieldElement> sieve(const CosetPartition& partition) {
  const Field& f = partition.field();
  std::vector<FieldElement> out;
  for (FieldElement r : partition.coset(0)) {
    if (r == f.one()) continue;
    if (partition.is_residue(f.sub(r, f.one()))) out.push_back(r);
  }
  return out;
}

namespace {

// Extends `chosen` by `remaining` more candidates, trying them in ascending
// order, so the first completion found is the lexicographically least.
bool extend(const CosetPartition& partition, std::vector<FieldElement>& chosen,
            std::span<const FieldElement> candidates, unsigned remaining) {
  if (remaining == 0) return true;
  const Field& f = partition.field();
  std::vector<FieldElement> next;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates.size() - i < remaining) return false;
    const FieldElement b = candidates[i];
    next.clear();
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (partition.is_residue(f.sub(candidates[j], b))) next.push_back(candidates[j]);
    }
    if (next.size() + 1 < remaining) continue;
    chosen.push_back(b);
    if (extend(partition, chosen, next, remaining - 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<NormalizedWitness> find_normalized_clique(const CosetPartition& partition, unsigned t,
                                                        const NormalizedSearchOptions& options) {
  if (t < 3) throw DomainError("clique size must be at least 3");
  if (!negation_closed(partition)) {
    throw DomainError("-1 is not an m-th power residue; the Cayley coloring is ill-defined");
  }

  const std::vector<FieldElement> candidates = sieve(partition);
  const unsigned subset_size = t - 2;
  if (candidates.size() < subset_size) return std::nullopt;

  // Work is split on the least chosen element. The least root with a
  // completion carries the lexicographically least witness.
  std::vector<std::vector<FieldElement>> found(candidates.size());
  std::atomic<std::size_t> best{candidates.size()};

  auto body = [&](std::size_t root) {
    std::vector<FieldElement> chosen{candidates[root]};
    std::vector<FieldElement> rest;
    for (std::size_t j = root + 1; j < candidates.size(); ++j) {
      if (partition.is_residue(partition.field().sub(candidates[j], candidates[root]))) {
        rest.push_back(candidates[j]);
      }
    }
    if (!extend(partition, chosen, rest, subset_size - 1)) return;
    found[root] = std::move(chosen);
    std::size_t cur = best.load();
    while (root < cur && !best.compare_exchange_weak(cur, root)) {
    }
  };
  detail::for_each_index(candidates.size(), options.threads, body,
                         [&](std::size_t i) { return i < best.load(); });

  if (best.load() == candidates.size()) return std::nullopt;
  NormalizedWitness w{t, {partition.field().one()}};
  const auto& tail = found[best.load()];
  w.elements.insert(w.elements.end(), tail.begin(), tail.end());
  return w;
}

}  // namespace ramsey
