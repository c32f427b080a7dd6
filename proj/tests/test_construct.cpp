#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/error.hpp"
#include "ramsey/residues.hpp"

using namespace ramsey;

namespace {

EdgeColoring cayley(std::uint64_t p, std::uint64_t k, unsigned m) {
  return build_cayley_coloring(CosetPartition(make_field(p, k), m));
}

EdgeColoring single_color_clique(std::uint32_t n) {
  return EdgeColoring::explicit_coloring(n, 1, std::vector<std::uint8_t>(std::size_t{n} * (n - 1) / 2, 1));
}

bool brute_has_clique(const EdgeColoring& col, unsigned color, unsigned k) {
  return !oracle::first_clique(col.size(), k, [&](Vertex u, Vertex v) { return col.color(u, v) == color; }).empty();
}

struct Case {
  EdgeColoring base, tail;
  std::vector<unsigned> targets;
};

std::vector<Case> valid_cases() {
  std::vector<Case> out;
  out.push_back({widen_colors(cayley(5, 1, 2), 3), single_color_clique(2), {3}});
  out.push_back({widen_colors(cayley(5, 1, 2), 3), single_color_clique(3), {4}});
  out.push_back({cayley(2, 4, 3), single_color_clique(2), {3}});
  out.push_back({cayley(13, 1, 3), single_color_clique(2), {3}});
  out.push_back({cayley(13, 1, 3), single_color_clique(3), {4}});
  out.push_back({widen_colors(cayley(5, 1, 2), 4), cayley(5, 1, 2), {3, 3}});
  out.push_back({widen_colors(cayley(2, 4, 3), 4), cayley(5, 1, 2), {3, 3}});
  return out;
}

}  // namespace

TEST_CASE("BlockPlan constants") {
  const BlockPlan plan;
  auto tuple = [](const ColorMap& m) { return std::vector<unsigned>{m.diag, m.apply(1), m.apply(2), m.apply(3), m.apply(7)}; };
  CHECK(tuple(plan.a) == std::vector<unsigned>{0, 2, 3, 4, 8});
  CHECK(tuple(plan.b) == std::vector<unsigned>{0, 3, 1, 4, 8});
  CHECK(tuple(plan.c) == std::vector<unsigned>{0, 1, 2, 4, 8});
  CHECK(tuple(plan.d) == std::vector<unsigned>{3, 2, 1, 4, 8});
  CHECK(tuple(plan.e) == std::vector<unsigned>{2, 1, 3, 4, 8});
  CHECK(tuple(plan.f) == std::vector<unsigned>{1, 3, 2, 4, 8});
  CHECK(&plan.block(1, 0) == &plan.d);
  CHECK(&plan.block(0, 1) == &plan.d);
  CHECK(&plan.block(2, 0) == &plan.e);
  CHECK(&plan.block(2, 1) == &plan.f);
  CHECK(&plan.block(2, 2) == &plan.c);
}

TEST_CASE("composition of the pentagon with a single edge") {
  const auto base = widen_colors(cayley(5, 1, 2), 3);
  const auto tail = single_color_clique(2);
  const std::vector<unsigned> k{3};
  const auto h = chung_compose({base, tail, k});
  CHECK(h.size() == 17);
  CHECK(h.num_colors() == 4);
  CHECK_FALSE(h.is_circulant());
  for (unsigned c = 1; c <= 4; ++c) CHECK_FALSE(brute_has_clique(h, c, 3));
  CHECK(verify_witness(h, std::vector<unsigned>{3, 3, 3, 3}).passed());

  // Layout: G part at the end, joined by colors 1, 2, 3 to the copies.
  CHECK(h.color(15, 16) == 4);
  CHECK(h.color(0, 15) == 1);
  CHECK(h.color(5, 15) == 2);
  CHECK(h.color(10, 16) == 3);
  // Same-index cross-copy edges take the block's diagonal color.
  CHECK(h.color(0, 5) == 3);
  CHECK(h.color(0, 10) == 2);
  CHECK(h.color(5, 10) == 1);
}

TEST_CASE("composition of the GF(16) witness with a single edge") {
  const auto base = cayley(2, 4, 3);
  const auto h = chung_compose({base, single_color_clique(2), std::vector<unsigned>{3}});
  CHECK(h.size() == 50);
  CHECK(h.num_colors() == 4);
  for (unsigned c = 1; c <= 4; ++c) CHECK_FALSE(brute_has_clique(h, c, 3));
  CHECK(bound_value(17, 3) == 51);
}

TEST_CASE("minimal composition") {
  const auto base = EdgeColoring::explicit_coloring(1, 3, {});
  const auto tail = EdgeColoring::explicit_coloring(1, 1, {});
  const auto h = chung_compose({base, tail, std::vector<unsigned>{3}});
  CHECK(h.size() == 4);
  CHECK(h.color(0, 1) == 3);
  CHECK(h.color(0, 2) == 2);
  CHECK(h.color(1, 2) == 1);
  CHECK(h.color(0, 3) == 1);
  CHECK(h.color(1, 3) == 2);
  CHECK(h.color(2, 3) == 3);
}

TEST_CASE("composition errors") {
  const auto c5 = cayley(5, 1, 2);
  const std::vector<unsigned> k{3};
  CHECK_THROWS_AS(chung_compose({c5, single_color_clique(2), k}), DomainError);
  CHECK_THROWS_AS(chung_compose({widen_colors(c5, 3), c5, k}), DomainError);
  CHECK_THROWS_AS(chung_compose({widen_colors(c5, 3), single_color_clique(2), std::vector<unsigned>{2}}), DomainError);
  CHECK_THROWS_AS(chung_compose({widen_colors(c5, 3), single_color_clique(2), std::vector<unsigned>{}}), DomainError);

  // A triangle in color 1 of T.
  const auto bad_base = EdgeColoring::explicit_coloring(3, 3, {1, 1, 1});
  CHECK_THROWS_AS(chung_compose({bad_base, single_color_clique(2), k}), ValidationError);
  CHECK(chung_compose({bad_base, single_color_clique(2), k}, false).size() == 11);
  // G contains the forbidden K_3.
  CHECK_THROWS_AS(chung_compose({widen_colors(c5, 3), single_color_clique(3), k}), ValidationError);
}

TEST_CASE("bound_value reproduces the harvested bounds") {
  CHECK(bound_value(30, 4) == 91);
  CHECK(bound_value(45, 5) == 137);
  CHECK(bound_value(54, 6) == 165);
  CHECK(bound_value(72, 7) == 220);
  CHECK(bound_value(110, 9) == 336);
  CHECK(bound_value(138, 11) == 422);
  CHECK_THROWS_AS(bound_value(1, 4), DomainError);
}

TEST_CASE("composition size and higher-color placement") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned r = 1 + rng() % 3;
    const std::uint32_t nt = 1 + rng() % 12, ng = 1 + rng() % 8;
    const auto base = EdgeColoring::from_function(nt, r + 2, [&](Vertex, Vertex) { return 1 + rng() % (r + 2); });
    const auto tail = EdgeColoring::from_function(ng, r, [&](Vertex, Vertex) { return 1 + rng() % r; });
    const std::vector<unsigned> k(r, 3);
    const auto h = chung_compose({base, tail, k}, false);
    REQUIRE(h.size() == 3 * nt + ng);
    CHECK(h.size() == 3 * (nt + 1) + (ng + 1) - 4);

    // Colors >= 4 sit at the same (i mod nT, j mod nT) positions in all six
    // T-derived blocks, namely where T has the color one lower.
    for (unsigned a = 0; a < 3; ++a) {
      for (unsigned b = a; b < 3; ++b) {
        for (Vertex i = 0; i < nt; ++i) {
          for (Vertex j = 0; j < nt; ++j) {
            if (i == j) continue;
            const unsigned hc = h.color(a * nt + i, b * nt + j);
            const unsigned tc = base.color(i, j);
            if (tc >= 3) CHECK(hc == tc + 1);
            else CHECK(hc <= 3);
          }
        }
      }
    }
  }
}

TEST_CASE("validated compositions yield verified witnesses") {
  for (const auto& c : valid_cases()) {
    const auto h = chung_compose({c.base, c.tail, c.targets});
    REQUIRE(h.size() <= 60);
    CHECK(h.size() == 3 * c.base.size() + c.tail.size());
    std::vector<unsigned> full{3, 3, 3};
    full.insert(full.end(), c.targets.begin(), c.targets.end());
    CHECK_MESSAGE(verify_witness(h, full).passed(), "n=" << h.size());
    for (unsigned color = 1; color <= h.num_colors(); ++color) {
      CHECK_FALSE(brute_has_clique(h, color, full[color - 1]));
    }

    // Each diagonal copy is triangle-free in colors 1, 2, 3.
    const std::uint32_t nt = c.base.size();
    for (unsigned copy = 0; copy < 3; ++copy) {
      const auto sub = EdgeColoring::from_function(nt, h.num_colors(), [&](Vertex u, Vertex v) {
        return h.color(copy * nt + u, copy * nt + v);
      });
      if (nt >= 3) {
        for (unsigned color = 1; color <= 3; ++color) CHECK_FALSE(brute_has_clique(sub, color, 3));
      }
    }
  }
}

TEST_CASE("composition output does not depend on validation worker count") {
  const auto base = cayley(2, 4, 3);
  SearchOptions opts;
  opts.threads = 4;
  const std::vector<unsigned> k{3};
  CHECK(chung_compose({base, single_color_clique(2), k}, true, opts) ==
        chung_compose({base, single_color_clique(2), k}, false));
}
