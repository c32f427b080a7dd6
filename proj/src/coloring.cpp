#include "ramsey/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/residues.hpp"

namespace ramsey {

namespace {

void check_palette(unsigned num_colors) {
  if (num_colors < 1 || num_colors > kMaxColors) {
    throw DomainError("number of colors must lie in [1, " + std::to_string(kMaxColors) + "]");
  }
}

}  // namespace

EdgeColoring EdgeColoring::circulant(const FieldSpec& spec,
                                     std::vector<std::vector<std::uint32_t>> classes) {
  Field field(spec);
  check_palette(static_cast<unsigned>(classes.size()));
  const std::uint32_t n = field.order();

  std::vector<std::uint8_t> color_of(n, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& cls = classes[i];
    std::sort(cls.begin(), cls.end());
    for (std::uint32_t d : cls) {
      if (d == 0 || d >= n) {
        throw DomainError("connection set element " + std::to_string(d) + " is not a nonzero field element");
      }
      if (color_of[d] != 0) throw DomainError("difference " + std::to_string(d) + " doubly covered");
      color_of[d] = static_cast<std::uint8_t>(i + 1);
    }
  }
  for (std::uint32_t d = 1; d < n; ++d) {
    if (color_of[d] == 0) throw DomainError("difference " + std::to_string(d) + " uncovered");
  }
  for (std::uint32_t d = 1; d < n; ++d) {
    const auto neg = field.neg(FieldElement{d}).code;
    if (color_of[neg] != color_of[d]) {
      throw DomainError("color " + std::to_string(color_of[d]) + " is not closed under negation (" +
                        std::to_string(d) + " without " + std::to_string(neg) + ")");
    }
  }
  const auto num_colors = static_cast<unsigned>(classes.size());
  return EdgeColoring(n, num_colors, Circulant{std::move(field), std::move(classes), std::move(color_of)});
}

EdgeColoring EdgeColoring::explicit_coloring(std::uint32_t n, unsigned num_colors,
                                             std::vector<std::uint8_t> upper) {
  check_palette(num_colors);
  if (n < 1 || n > kMaxExplicitVertices) throw DomainError("explicit colorings need 1 <= n <= 2^15");
  const std::size_t edges = std::size_t{n} * (n - 1) / 2;
  if (upper.size() != edges) {
    throw DomainError("expected " + std::to_string(edges) + " edge colors, got " + std::to_string(upper.size()));
  }
  for (auto c : upper) {
    if (c < 1 || c > num_colors) throw DomainError("color out of range: " + std::to_string(c));
  }
  return EdgeColoring(n, num_colors, Explicit{std::move(upper)});
}

EdgeColoring EdgeColoring::from_function(std::uint32_t n, unsigned num_colors,
                                         const std::function<unsigned(Vertex, Vertex)>& color_of) {
  if (n < 1 || n > kMaxExplicitVertices) throw DomainError("explicit colorings need 1 <= n <= 2^15");
  std::vector<std::uint8_t> upper;
  upper.reserve(std::size_t{n} * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const unsigned c = color_of(i, j);
      if (c < 1 || c > num_colors) throw DomainError("color out of range: " + std::to_string(c));
      upper.push_back(static_cast<std::uint8_t>(c));
    }
  }
  return explicit_coloring(n, num_colors, std::move(upper));
}

unsigned EdgeColoring::color(Vertex u, Vertex v) const {
  if (u == v) throw DomainError("no self-edges");
  if (u >= n_ || v >= n_) throw DomainError("vertex out of range");
  return color_unchecked(u, v);
}

unsigned EdgeColoring::color_unchecked(Vertex u, Vertex v) const {
  if (const auto* c = std::get_if<Circulant>(&rep_)) {
    return c->color_of_difference[c->field.sub(FieldElement{v}, FieldElement{u}).code];
  }
  if (u > v) std::swap(u, v);
  return std::get<Explicit>(rep_).upper[upper_index(n_, u, v)];
}

bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
  if (a.n_ != b.n_ || a.num_colors_ != b.num_colors_) return false;
  const auto* ca = a.circulant_data();
  const auto* cb = b.circulant_data();
  if (ca && cb) return ca->field.spec() == cb->field.spec() && ca->classes == cb->classes;
  if (!ca && !cb) return a.explicit_data()->upper == b.explicit_data()->upper;
  for (Vertex i = 0; i < a.n_; ++i) {
    for (Vertex j = i + 1; j < a.n_; ++j) {
      if (a.color_unchecked(i, j) != b.color_unchecked(i, j)) return false;
    }
  }
  return true;
}

EdgeColoring build_cayley_coloring(const CosetPartition& partition) {
  if (!negation_closed(partition)) {
    throw DomainError("-1 is not an m-th power residue; the Cayley coloring is ill-defined");
  }
  std::vector<std::vector<std::uint32_t>> classes(partition.m());
  for (unsigned i = 0; i < partition.m(); ++i) {
    for (FieldElement x : partition.coset(i)) classes[i].push_back(x.code);
  }
  return EdgeColoring::circulant(partition.field().spec(), std::move(classes));
}

EdgeColoring to_explicit(const EdgeColoring& coloring) {
  if (!coloring.is_circulant()) return coloring;
  return EdgeColoring::from_function(coloring.size(), coloring.num_colors(),
                                     [&](Vertex u, Vertex v) { return coloring.color_unchecked(u, v); });
}

EdgeColoring widen_colors(const EdgeColoring& coloring, unsigned num_colors) {
  if (num_colors < coloring.num_colors()) throw DomainError("cannot shrink the palette");
  if (const auto* c = coloring.circulant_data()) {
    auto classes = c->classes;
    classes.resize(num_colors);
    return EdgeColoring::circulant(c->field.spec(), std::move(classes));
  }
  return EdgeColoring::explicit_coloring(coloring.size(), num_colors, coloring.explicit_data()->upper);
}

// ---------------------------------------------------------------------------
// Text format

std::string serialize_coloring(const EdgeColoring& coloring) {
  std::ostringstream out;
  save_coloring(coloring, out);
  return out.str();
}

void save_coloring(const EdgeColoring& coloring, std::ostream& out) {
  const std::uint32_t n = coloring.size();
  out << "ramsey-coloring v1\n";
  out << "n=" << n << " colors=" << coloring.num_colors()
      << " repr=" << (coloring.is_circulant() ? "circulant" : "explicit") << '\n';

  if (const auto* c = coloring.circulant_data()) {
    const FieldSpec& spec = c->field.spec();
    out << "field=" << spec.characteristic;
    if (spec.degree > 1) {
      out << '^' << spec.degree << " poly=";
      for (std::size_t i = 0; i < spec.modulus.size(); ++i) out << (i ? "," : "") << spec.modulus[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < c->classes.size(); ++i) {
      out << "color " << i + 1 << ':';
      for (auto d : c->classes[i]) out << ' ' << d;
      out << '\n';
    }
    return;
  }

  const auto& upper = coloring.explicit_data()->upper;
  std::size_t at = 0;
  for (Vertex i = 0; i + 1 < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      out << static_cast<unsigned>(upper[at++]);
    }
    out << '\n';
  }
}

void save_coloring(const EdgeColoring& coloring, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  save_coloring(coloring, out);
  if (!out.flush()) throw Error("failed writing " + path.string());
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t line_number() const { return line_; }

  std::string_view next(const char* what) {
    if (done()) fail(std::string("missing ") + what);
    const auto end = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("line " + std::to_string(line_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_uint(const LineReader& r, std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    r.fail(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view expect_prefix(const LineReader& r, std::string_view token, std::string_view prefix) {
  if (token.substr(0, prefix.size()) != prefix) {
    r.fail("expected '" + std::string(prefix) + "', got '" + std::string(token) + "'");
  }
  return token.substr(prefix.size());
}

// Space-separated integers; the empty string yields no values.
std::vector<std::uint64_t> parse_list(const LineReader& r, std::string_view s, const char* what) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  for (auto tok : split(s, ' ')) out.push_back(parse_uint(r, tok, what));
  return out;
}

}  // namespace

EdgeColoring parse_coloring(std::string_view text) {
  LineReader r(text);
  if (r.next("header") != "ramsey-coloring v1") r.fail("expected 'ramsey-coloring v1'");

  const auto dims = split(r.next("dimensions"), ' ');
  if (dims.size() != 3) r.fail("expected 'n=<N> colors=<C> repr=<circulant|explicit>'");
  const std::uint64_t n = parse_uint(r, expect_prefix(r, dims[0], "n="), "vertex count");
  const std::uint64_t colors = parse_uint(r, expect_prefix(r, dims[1], "colors="), "color count");
  const auto repr = expect_prefix(r, dims[2], "repr=");
  if (colors < 1 || colors > kMaxColors) r.fail("color count out of range");

  EdgeColoring result = [&] {
    if (repr == "circulant") {
      const auto field_tokens = split(r.next("field line"), ' ');
      FieldSpec spec;
      const auto field_desc = expect_prefix(r, field_tokens[0], "field=");
      const auto caret = field_desc.find('^');
      if (caret == std::string_view::npos) {
        if (field_tokens.size() != 1) r.fail("prime fields take no modulus polynomial");
        spec.characteristic = static_cast<std::uint32_t>(parse_uint(r, field_desc, "characteristic"));
      } else {
        if (field_tokens.size() != 2) r.fail("expected 'field=<p>^<k> poly=<c0,...,ck>'");
        spec.characteristic =
            static_cast<std::uint32_t>(parse_uint(r, field_desc.substr(0, caret), "characteristic"));
        spec.degree = static_cast<std::uint32_t>(parse_uint(r, field_desc.substr(caret + 1), "degree"));
        for (auto c : split(expect_prefix(r, field_tokens[1], "poly="), ',')) {
          spec.modulus.push_back(static_cast<std::uint32_t>(parse_uint(r, c, "coefficient")));
        }
      }
      if (spec.characteristic == 0 || spec.degree == 0 || spec.order() != n) {
        r.fail("field order does not match n=" + std::to_string(n));
      }

      std::vector<std::vector<std::uint32_t>> classes(colors);
      for (std::uint64_t i = 1; i <= colors; ++i) {
        const auto line = r.next("color line");
        const auto label = "color " + std::to_string(i) + ":";
        if (line.substr(0, label.size()) != label) r.fail("expected '" + label + "'");
        auto rest = line.substr(label.size());
        if (!rest.empty()) {
          if (rest.front() != ' ') r.fail("expected a space after '" + label + "'");
          rest.remove_prefix(1);
        }
        for (auto d : parse_list(r, rest, "element")) {
          if (d >= n) r.fail("element " + std::to_string(d) + " outside the field");
          classes[i - 1].push_back(static_cast<std::uint32_t>(d));
        }
      }
      try {
        return EdgeColoring::circulant(spec, std::move(classes));
      } catch (const DomainError& e) {
        throw FormatError(e.what());
      }
    }

    if (repr == "explicit") {
      if (n < 1 || n > kMaxExplicitVertices) r.fail("explicit colorings need 1 <= n <= 2^15");
      std::vector<std::uint8_t> upper;
      upper.reserve(n * (n - 1) / 2);
      for (std::uint64_t i = 0; i + 1 < n; ++i) {
        const auto values = parse_list(r, r.next("edge row"), "color");
        if (values.size() != n - 1 - i) {
          r.fail("row for vertex " + std::to_string(i) + " has " + std::to_string(values.size()) +
                 " colors, expected " + std::to_string(n - 1 - i));
        }
        for (auto c : values) {
          if (c < 1 || c > colors) r.fail("color out of range: " + std::to_string(c));
          upper.push_back(static_cast<std::uint8_t>(c));
        }
      }
      return EdgeColoring::explicit_coloring(static_cast<std::uint32_t>(n), static_cast<unsigned>(colors),
                                             std::move(upper));
    }
    r.fail("unknown representation '" + std::string(repr) + "'");
  }();

  while (!r.done()) {
    if (!r.next("trailer").empty()) r.fail("unexpected trailing content");
  }
  return result;
}

EdgeColoring load_coloring(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coloring(buf.str());
}

EdgeColoring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return load_coloring(in);
}

}  // namespace ramsey
