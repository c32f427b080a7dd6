#include "ramsey/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/error.hpp"
#include "ramsey/field.hpp"
#include "ramsey/residues.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  unsigned threads = 0;
  bool deterministic = false;
  bool verbose = false;

  SearchOptions search() const {
    SearchOptions o;
    o.threads = threads;
    o.deterministic = deterministic;
    return o;
  }
};

std::string join(std::span<const FieldElement> xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i].code);
  }
  return out;
}

std::string join(std::span<const Vertex> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

FieldSpec galois_field(const std::vector<std::uint64_t>& pk) {
  if (pk.size() != 2) throw UsageError("--galois expects p,k");
  if (!is_prime(pk[0])) throw UsageError("--galois: " + std::to_string(pk[0]) + " is not prime");
  if (pk[1] < 1) throw UsageError("--galois: degree must be at least 1");
  return make_field(pk[0], pk[1]);
}

// ---------------------------------------------------------------------------

struct PrimesArgs {
  std::uint64_t m = 0, lo = 0, hi = 0;
  bool prime_powers = false;
};

int cmd_primes(const PrimesArgs& a, std::ostream& out) {
  if (a.m < 2) throw UsageError("--mod must be at least 2");
  if (a.lo > a.hi) throw UsageError("--min exceeds --max");
  for (const auto& f : admissible_orders(a.m, a.lo, a.hi, !a.prime_powers)) out << f.order() << '\n';
  return kExitPass;
}

struct SearchArgs {
  unsigned m = 0, t = 0;
  std::uint64_t lo = 0, hi = 0;
  std::vector<std::uint64_t> galois;
  bool prime_powers = false;
};

int cmd_search(const SearchArgs& a, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  if (a.m < 2) throw UsageError("--mod must be at least 2");
  if (a.t < 3) throw UsageError("-t must be at least 3");

  std::vector<FieldSpec> fields;
  const bool single = !a.galois.empty();
  if (single) {
    fields.push_back(galois_field(a.galois));
  } else {
    if (a.lo > a.hi) throw UsageError("--min exceeds --max");
    if (a.hi == 0) throw UsageError("--max is required unless --galois is given");
    fields = admissible_orders(a.m, a.lo, a.hi, !a.prime_powers);
  }

  std::string tuple;
  for (unsigned i = 0; i < a.m; ++i) tuple += (i ? "," : "") + std::to_string(a.t);

  NormalizedSearchOptions opts;
  opts.threads = g.threads;
  for (const auto& spec : fields) {
    const auto start = std::chrono::steady_clock::now();
    const CosetPartition partition(spec, a.m);
    if (!negation_closed(partition)) {
      if (single) throw DomainError("-1 is not an m-th power residue in this field");
      err << spec.order() << ": skipped, -1 is not a residue\n";
      continue;
    }
    const auto witness = find_normalized_clique(partition, a.t, opts);
    if (witness) {
      out << spec.order() << ": witness " << join(witness->elements, " ") << '\n';
    } else {
      out << spec.order() << ": BOUND R(" << tuple << ")>=" << spec.order() + 1 << '\n';
    }
    if (g.verbose) err << spec.order() << ": searched in " << seconds_since(start) << " s\n";
  }
  return kExitPass;
}

struct BuildArgs {
  std::uint64_t p = 0, k = 1;
  unsigned m = 0;
  std::string output;
};

int cmd_build(const BuildArgs& a, const GlobalFlags& g, std::ostream& err) {
  if (!is_prime(a.p)) throw UsageError("-p: " + std::to_string(a.p) + " is not prime");
  if (a.k < 1) throw UsageError("-k must be at least 1");
  if (a.m < 2) throw UsageError("-m must be at least 2");
  const CosetPartition partition(make_field(a.p, a.k), a.m);
  const EdgeColoring coloring = build_cayley_coloring(partition);
  save_coloring(coloring, std::filesystem::path(a.output));
  if (g.verbose) err << "wrote " << a.output << ": n=" << coloring.size() << " colors=" << coloring.num_colors() << '\n';
  return kExitPass;
}

struct VerifyArgs {
  std::string input;
  std::vector<unsigned> targets;
  std::string cert;
  bool no_symmetry = false;
};

int cmd_verify(const VerifyArgs& a, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  const EdgeColoring coloring = load_coloring(std::filesystem::path(a.input));
  if (a.targets.size() != coloring.num_colors()) {
    throw UsageError("--targets needs " + std::to_string(coloring.num_colors()) + " values");
  }
  if (std::any_of(a.targets.begin(), a.targets.end(), [](unsigned k) { return k < 2; })) {
    throw UsageError("--targets values must be at least 2");
  }
  SearchOptions opts = g.search();
  opts.use_symmetry = !a.no_symmetry;

  const auto start = std::chrono::steady_clock::now();
  const RamseyCertificate cert = a.cert.empty() ? make_certificate(coloring, a.targets, opts)
                                                : certify(coloring, a.targets, a.cert, opts);
  if (g.verbose) err << "verified in " << seconds_since(start) << " s\n";
  if (cert.pass) {
    out << "pass: " << cert.bound() << '\n';
    return kExitPass;
  }
  out << "fail: color " << cert.clique->first << " has K_" << cert.clique->second.size() << " at "
      << join(cert.clique->second) << '\n';
  return kExitRefuted;
}

struct ComposeArgs {
  std::string base, tail, output;
  std::vector<unsigned> targets;
  bool no_validate = false;
};

int cmd_compose(const ComposeArgs& a, const GlobalFlags& g, std::ostream& out) {
  const EdgeColoring base = load_coloring(std::filesystem::path(a.base));
  const EdgeColoring tail = load_coloring(std::filesystem::path(a.tail));
  if (a.targets.size() != tail.num_colors() || base.num_colors() != tail.num_colors() + 2) {
    throw UsageError("T needs |targets|+2 colors and G needs |targets| colors");
  }
  const EdgeColoring h = chung_compose({base, tail, a.targets}, !a.no_validate, g.search());
  save_coloring(h, std::filesystem::path(a.output));
  out << "n=" << h.size() << " colors=" << h.num_colors() << '\n';
  return kExitPass;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey lower-bound witnesses: residue colorings, composition, verification"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)");
  app.add_flag("--deterministic", global.deterministic, "Report least witnesses regardless of thread count");
  app.add_flag("-v,--verbose", global.verbose, "Progress and timing on stderr");

  PrimesArgs primes;
  auto* primes_cmd = app.add_subcommand("primes", "List field orders N with m | N-1");
  primes_cmd->add_option("--mod", primes.m, "Residue power m")->required();
  primes_cmd->add_option("--min", primes.lo, "Least order")->required();
  primes_cmd->add_option("--max", primes.hi, "Greatest order")->required();
  primes_cmd->add_flag("--prime-only", "Primes only (the default)");
  primes_cmd->add_flag("--prime-powers", primes.prime_powers, "Include prime powers p^k, k >= 2");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Normalized monochromatic clique search per field order");
  search_cmd->add_option("--mod", search.m, "Residue power m (number of colors)")->required();
  search_cmd->add_option("-t", search.t, "Clique size")->required();
  search_cmd->add_option("--min", search.lo, "Least order");
  search_cmd->add_option("--max", search.hi, "Greatest order");
  search_cmd->add_option("--galois", search.galois, "Search GF(p^k) only")->delimiter(',')->expected(2);
  search_cmd->add_flag("--prime-powers", search.prime_powers, "Include prime-power orders in the range");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Write the Cayley coloring of the m-th power cosets");
  build_cmd->add_option("-p", build.p, "Characteristic")->required();
  build_cmd->add_option("-k", build.k, "Extension degree (default 1)");
  build_cmd->add_option("-m", build.m, "Residue power m")->required();
  build_cmd->add_option("-o", build.output, "Output coloring file")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a witness coloring");
  verify_cmd->add_option("-i", verify.input, "Coloring file")->required();
  verify_cmd->add_option("--targets", verify.targets, "k1,...,kC")->delimiter(',')->required();
  verify_cmd->add_option("--cert", verify.cert, "Write a certificate file");
  verify_cmd->add_flag("--no-symmetry", verify.no_symmetry, "Search all roots even for circulant input");

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "Three-copy composition of two witnesses");
  compose_cmd->add_option("--t", compose.base, "Witness avoiding (3,3,k1,...,kr)")->required();
  compose_cmd->add_option("--g", compose.tail, "Witness avoiding (k1,...,kr)")->required();
  compose_cmd->add_option("--targets", compose.targets, "k1,...,kr")->delimiter(',')->required();
  compose_cmd->add_option("-o", compose.output, "Output coloring file")->required();
  compose_cmd->add_flag("--no-validate", compose.no_validate, "Skip verifying the inputs");

  std::uint64_t bound_m = 0, bound_r = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Print 3M + R - 3");
  bound_cmd->add_option("M", bound_m, "Lower bound on R(3,3,k1,...,kr)")->required();
  bound_cmd->add_option("R", bound_r, "Lower bound on R(k1,...,kr)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (primes_cmd->parsed()) return cmd_primes(primes, out);
    if (search_cmd->parsed()) return cmd_search(search, global, out, err);
    if (build_cmd->parsed()) return cmd_build(build, global, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, global, out, err);
    if (compose_cmd->parsed()) return cmd_compose(compose, global, out);
    if (bound_cmd->parsed()) {
      if (bound_m < 2 || bound_r < 2) throw UsageError("M and R must be at least 2");
      out << bound_value(bound_m, bound_r) << '\n';
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << "refuted: " << e.what() << '\n';
    return kExitRefuted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace ramsey
