#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/error.hpp"
#include "ramsey/residues.hpp"

using namespace ramsey;

namespace {

EdgeColoring pentagon() { return build_cayley_coloring(CosetPartition(make_field(5, 1), 2)); }

std::string error_of(std::string_view text) {
  try {
    parse_coloring(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("pentagon edge colors") {
  const auto c5 = pentagon();
  CHECK(c5.size() == 5);
  CHECK(c5.num_colors() == 2);
  CHECK(c5.is_circulant());
  CHECK(c5.circulant_data()->classes == std::vector<std::vector<std::uint32_t>>{{1, 4}, {2, 3}});
  CHECK(c5.color(0, 1) == 1);
  CHECK(c5.color(0, 2) == 2);
  CHECK(c5.color(1, 0) == 1);
  CHECK_THROWS_AS(c5.color(2, 2), DomainError);
  CHECK_THROWS_AS(c5.color(0, 5), DomainError);
}

TEST_CASE("Cayley colorings require negation-closed cosets") {
  CHECK_THROWS_AS(build_cayley_coloring(CosetPartition(make_field(7, 1), 2)), DomainError);
  const auto gf16 = build_cayley_coloring(CosetPartition(make_field(2, 4), 3));
  CHECK(gf16.size() == 16);
  CHECK(gf16.num_colors() == 3);
}

TEST_CASE("to_explicit examples") {
  const auto c5 = pentagon();
  const auto e5 = to_explicit(c5);
  CHECK_FALSE(e5.is_circulant());
  CHECK(e5.explicit_data()->upper.size() == 10);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) {
      if (u != v) CHECK(e5.color(u, v) == c5.color(u, v));
    }
  }
  CHECK(to_explicit(e5).explicit_data()->upper == e5.explicit_data()->upper);

  // Z_7, m = 3: cosets are g^i <cubes> with g = 3.
  const std::vector<std::uint32_t> label_of{0, 0, 2, 1, 1, 2, 0};  // from {1,6}, {3,4}, {2,5}
  const auto cubes = oracle::power_residues(7, 3);
  CHECK(cubes == std::set<std::uint64_t>{1, 6});
  const auto e7 = to_explicit(build_cayley_coloring(CosetPartition(make_field(7, 1), 3)));
  int checked = 0;
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 1; v < 7; ++v, ++checked) CHECK(e7.color(u, v) == 1 + label_of[(v - u) % 7]);
  }
  CHECK(checked == 21);
}

TEST_CASE("circulant colorings are translation invariant") {
  std::vector<CosetPartition> parts;
  for (std::uint64_t p = 3; p <= 50; ++p) {
    if (!oracle::is_prime(p)) continue;
    for (unsigned m : {2u, 3u, 4u}) {
      if ((p - 1) % m == 0) parts.emplace_back(make_field(p, 1), m);
    }
  }
  parts.emplace_back(make_field(2, 4), 3);
  parts.emplace_back(make_field(5, 2), 3);
  parts.emplace_back(make_field(3, 3), 13);
  for (const auto& part : parts) {
    if (!negation_closed(part)) continue;
    const auto col = build_cayley_coloring(part);
    const Field& f = part.field();
    for (Vertex u = 0; u < col.size(); ++u) {
      for (Vertex v = 0; v < col.size(); ++v) {
        if (u == v) continue;
        for (std::uint32_t c = 0; c < col.size(); ++c) {
          const Vertex u2 = f.add(FieldElement{u}, FieldElement{c}).code;
          const Vertex v2 = f.add(FieldElement{v}, FieldElement{c}).code;
          REQUIRE(col.color(u2, v2) == col.color(u, v));
        }
      }
    }
  }
}

TEST_CASE("to_explicit preserves every edge of the 691-vertex coloring") {
  const auto circ = build_cayley_coloring(CosetPartition(make_field(691, 1), 3));
  const auto expl = to_explicit(circ);
  for (Vertex u = 0; u < 691; ++u) {
    for (Vertex v = u + 1; v < 691; ++v) REQUIRE(expl.color(u, v) == circ.color(u, v));
  }
  CHECK(expl == circ);
}

TEST_CASE("coloring file format") {
  const std::string c5 =
      "ramsey-coloring v1\n"
      "n=5 colors=2 repr=circulant\n"
      "field=5\n"
      "color 1: 1 4\n"
      "color 2: 2 3\n";
  CHECK(serialize_coloring(pentagon()) == c5);
  CHECK(serialize_coloring(parse_coloring(c5)) == c5);

  const std::string e5 =
      "ramsey-coloring v1\n"
      "n=5 colors=2 repr=explicit\n"
      "1 2 2 1\n"
      "1 2 2\n"
      "1 2\n"
      "1\n";
  CHECK(serialize_coloring(to_explicit(pentagon())) == e5);
  CHECK(parse_coloring(e5) == pentagon());

  const auto gf16 = build_cayley_coloring(CosetPartition(make_field(2, 4), 3));
  const auto text = serialize_coloring(gf16);
  CHECK(text.rfind("ramsey-coloring v1\nn=16 colors=3 repr=circulant\nfield=2^4 poly=1,1,0,0,1\n", 0) == 0);
  CHECK(serialize_coloring(parse_coloring(text)) == text);
  CHECK(parse_coloring(text) == gf16);

  const auto single = EdgeColoring::explicit_coloring(1, 1, {});
  CHECK(serialize_coloring(single) == "ramsey-coloring v1\nn=1 colors=1 repr=explicit\n");
  CHECK(serialize_coloring(parse_coloring(serialize_coloring(single))) == serialize_coloring(single));

  const auto widened = widen_colors(pentagon(), 3);
  CHECK(serialize_coloring(widened) ==
        "ramsey-coloring v1\nn=5 colors=3 repr=circulant\nfield=5\ncolor 1: 1 4\ncolor 2: 2 3\ncolor 3:\n");
  CHECK(serialize_coloring(parse_coloring(serialize_coloring(widened))) == serialize_coloring(widened));
}

TEST_CASE("save/load round trip is byte exact for random colorings") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 1 + rng() % 40;
    const unsigned colors = 1 + rng() % 6;
    const auto col = EdgeColoring::from_function(n, colors, [&](Vertex, Vertex) { return 1 + rng() % colors; });
    std::stringstream buf;
    save_coloring(col, buf);
    const std::string bytes = buf.str();
    const auto back = load_coloring(buf);
    CHECK(back == col);
    CHECK(serialize_coloring(back) == bytes);
  }
}

TEST_CASE("loader rejects malformed files") {
  CHECK(error_of("ramsey-coloring v1\nn=3 colors=2 repr=explicit\n1 0\n2\n").find("color out of range") !=
        std::string::npos);
  CHECK(error_of("ramsey-coloring v1\nn=3 colors=2 repr=explicit\n1 3\n2\n").find("color out of range") !=
        std::string::npos);
  CHECK(error_of("ramsey-coloring v1\nn=5 colors=2 repr=circulant\nfield=5\ncolor 1: 1\ncolor 2: 2 3 4\n")
            .find("negation") != std::string::npos);
  CHECK(error_of("ramsey-coloring v1\nn=5 colors=2 repr=circulant\nfield=5\ncolor 1: 1 4\ncolor 2: 2\n")
            .find("uncovered") != std::string::npos);
  CHECK(error_of("ramsey-coloring v1\nn=5 colors=2 repr=circulant\nfield=5\ncolor 1: 1 4 2\ncolor 2: 2 3\n")
            .find("doubly covered") != std::string::npos);
  // Explicit rows must cover each pair exactly once.
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=3 colors=2 repr=explicit\n1\n2\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=3 colors=2 repr=explicit\n1 2 1\n2\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=3 colors=2 repr=explicit\n1 2\n").empty());

  CHECK_FALSE(error_of("").empty());
  CHECK_FALSE(error_of("ramsey-coloring v2\nn=2 colors=1 repr=explicit\n1\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=2 colors=1 repr=sparse\n1\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=2 colors=0 repr=explicit\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=2 colors=1 repr=explicit\n1\nextra\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=2 colors=1 repr=explicit\nx\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=7 colors=1 repr=circulant\nfield=5\ncolor 1: 1 2 3 4\n").empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=6 colors=1 repr=circulant\nfield=6\ncolor 1: 1 2 3 4 5\n").empty());
  CHECK_FALSE(
      error_of("ramsey-coloring v1\nn=16 colors=1 repr=circulant\nfield=2^4 poly=1,0,1,0,1\ncolor 1: 1 2 3 4 5 6 7 8 9 "
               "10 11 12 13 14 15\n")
          .empty());
  CHECK_FALSE(error_of("ramsey-coloring v1\nn=5 colors=2 repr=circulant\nfield=5\ncolor 2: 1 4\ncolor 1: 2 3\n").empty());
}
