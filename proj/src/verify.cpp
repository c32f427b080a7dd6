#include "ramsey/verify.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "ramsey/error.hpp"

namespace ramsey {

namespace {

using Word = std::uint64_t;
constexpr unsigned kWordBits = 64;

// Neighbor bitsets of the subgraph formed by one color.
class ColorGraph {
 public:
  ColorGraph(const EdgeColoring& coloring, unsigned color)
      : n_(coloring.size()), words_((n_ + kWordBits - 1) / kWordBits), bits_(std::size_t{n_} * words_, 0) {
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = i + 1; j < n_; ++j) {
        if (coloring.color_unchecked(i, j) != color) continue;
        bits_[std::size_t{i} * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
        bits_[std::size_t{j} * words_ + i / kWordBits] |= Word{1} << (i % kWordBits);
      }
    }
  }

  std::uint32_t size() const { return n_; }
  std::size_t words() const { return words_; }
  const Word* row(Vertex v) const { return bits_.data() + std::size_t{v} * words_; }
  bool adjacent(Vertex u, Vertex v) const { return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1; }

 private:
  std::uint32_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

std::size_t popcount(const Word* w, std::size_t from, std::size_t to) {
  std::size_t c = 0;
  for (std::size_t i = from; i < to; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
  return c;
}

// Depth-first search over increasing vertex sequences with bitset candidate
// sets. One instance per worker.
class CliqueSearcher {
 public:
  CliqueSearcher(const ColorGraph& graph, unsigned k)
      : g_(graph), k_(k), levels_(std::size_t{k + 1} * graph.words(), 0) {}

  // Tries to complete `prefix` (an increasing clique) to a K_k using only
  // vertices above its last element.
  template <class Stop>
  bool complete(std::vector<Vertex>& prefix, Stop&& stop) {
    const std::size_t w = g_.words();
    Word* cand = level(0);
    std::fill(cand, cand + w, ~Word{0});
    for (Vertex v : prefix) {
      const Word* r = g_.row(v);
      for (std::size_t i = 0; i < w; ++i) cand[i] &= r[i];
    }
    clear_through(cand, prefix.back());
    stack_ = prefix;
    if (stack_.size() >= k_) return true;
    if (search(0, k_ - static_cast<unsigned>(stack_.size()), stop)) {
      prefix = stack_;
      return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Word* level(std::size_t d) { return levels_.data() + d * g_.words(); }

  void clear_through(Word* bits, Vertex v) const {
    const std::size_t word = v / kWordBits;
    std::fill(bits, bits + word, Word{0});
    const unsigned shift = v % kWordBits + 1;
    bits[word] &= shift == kWordBits ? Word{0} : ~Word{0} << shift;
  }

  template <class Stop>
  bool search(std::size_t depth, unsigned remaining, Stop& stop) {
    const std::size_t w = g_.words();
    const Word* cand = level(depth);
    Word* next = level(depth + 1);
    std::size_t left = popcount(cand, 0, w);
    if (left < remaining) return false;

    for (std::size_t wi = 0; wi < w; ++wi) {
      Word bits = cand[wi];
      while (bits != 0) {
        if (left < remaining) return false;
        const auto v = static_cast<Vertex>(wi * kWordBits + static_cast<unsigned>(std::countr_zero(bits)));
        bits &= bits - 1;
        --left;
        ++nodes_;
        if (stop()) return false;

        if (remaining == 1) {
          stack_.push_back(v);
          return true;
        }
        const Word* r = g_.row(v);
        std::fill(next, next + wi, Word{0});
        for (std::size_t i = wi; i < w; ++i) next[i] = cand[i] & r[i];
        clear_through(next, v);
        if (popcount(next, wi, w) + 1 < remaining) continue;

        stack_.push_back(v);
        if (search(depth + 1, remaining - 1, stop)) return true;
        stack_.pop_back();
      }
    }
    return false;
  }

  const ColorGraph& g_;
  unsigned k_;
  std::vector<Word> levels_;
  std::vector<Vertex> stack_;
  std::uint64_t nodes_ = 0;
};

void check_clique(const EdgeColoring& coloring, unsigned color, unsigned k, const std::vector<Vertex>& clique) {
  bool ok = clique.size() == k;
  for (std::size_t i = 0; ok && i < clique.size(); ++i) {
    if (clique[i] >= coloring.size() || (i > 0 && clique[i - 1] >= clique[i])) ok = false;
    for (std::size_t j = i + 1; ok && j < clique.size(); ++j) {
      ok = coloring.color(clique[i], clique[j]) == color;
    }
  }
  if (!ok) throw std::logic_error("clique search returned an invalid clique");
}

}  // namespace

CliqueSearchResult find_mono_clique(const EdgeColoring& coloring, unsigned color, unsigned k,
                                    const SearchOptions& options) {
  if (color < 1 || color > coloring.num_colors()) {
    throw DomainError("color " + std::to_string(color) + " outside 1.." + std::to_string(coloring.num_colors()));
  }
  if (k < 2 || k > coloring.size()) {
    throw DomainError("clique size " + std::to_string(k) + " outside 2.." + std::to_string(coloring.size()));
  }

  const ColorGraph graph(coloring, color);

  // Each work item is an increasing clique to be extended.
  std::vector<std::vector<Vertex>> items;
  if (options.use_symmetry && coloring.is_circulant()) {
    for (Vertex w = 1; w < graph.size(); ++w) {
      if (graph.adjacent(0, w)) items.push_back({0, w});
    }
  } else {
    for (Vertex v = 0; v < graph.size(); ++v) items.push_back({v});
  }

  const std::size_t none = items.size();
  std::atomic<std::size_t> best{none};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<Vertex>> found(items.size());

  auto keep_going = [&](std::size_t i) {
    return options.deterministic ? i < best.load(std::memory_order_relaxed)
                                 : best.load(std::memory_order_relaxed) == none;
  };
  auto body = [&](std::size_t i) {
    CliqueSearcher searcher(graph, k);
    std::vector<Vertex> clique = items[i];
    const bool hit = searcher.complete(clique, [&] { return !keep_going(i); });
    nodes.fetch_add(searcher.nodes(), std::memory_order_relaxed);
    if (!hit) return;
    found[i] = std::move(clique);
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  };
  detail::for_each_index(items.size(), options.threads, body, keep_going);

  CliqueSearchResult result;
  result.nodes = nodes.load();
  result.deterministic = options.deterministic || detail::resolve_threads(options.threads) == 1;
  if (best.load() != none) {
    result.clique = std::move(found[best.load()]);
    check_clique(coloring, color, k, *result.clique);
  }
  return result;
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const ColorVerdict* VerificationReport::first_failure() const {
  for (const auto& v : verdicts) {
    if (v.clique) return &v;
  }
  return nullptr;
}

VerificationReport verify_witness(const EdgeColoring& coloring, std::span<const unsigned> targets,
                                  const SearchOptions& options) {
  if (targets.size() != coloring.num_colors()) {
    throw DomainError("expected " + std::to_string(coloring.num_colors()) + " targets, got " +
                      std::to_string(targets.size()));
  }
  for (unsigned k : targets) {
    if (k < 2) throw DomainError("every target must be at least 2");
  }

  VerificationReport report;
  for (unsigned c = 1; c <= coloring.num_colors(); ++c) {
    ColorVerdict verdict{c, targets[c - 1], std::nullopt};
    // A clique larger than the whole graph cannot exist.
    if (verdict.target <= coloring.size()) {
      auto r = find_mono_clique(coloring, c, verdict.target, options);
      report.nodes += r.nodes;
      report.deterministic = report.deterministic && r.deterministic;
      verdict.clique = std::move(r.clique);
    }
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace ramsey
