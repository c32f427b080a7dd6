#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <sstream>

#include "ramsey/error.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string format_targets(std::span<const unsigned> targets) {
  std::string out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(targets[i]);
  }
  return out;
}

std::string RamseyCertificate::bound() const {
  return "R(" + format_targets(targets) + ")>=" + std::to_string(std::uint64_t{n} + 1);
}

std::string RamseyCertificate::to_text() const {
  std::ostringstream out;
  out << "ramsey-certificate v1\n";
  out << "targets=" << format_targets(targets) << '\n';
  out << "n=" << n << '\n';
  out << "verdict=" << (pass ? "pass" : "fail") << '\n';
  if (pass) out << "bound=" << bound() << '\n';
  if (clique) {
    out << "clique=" << clique->first << ':';
    for (std::size_t i = 0; i < clique->second.size(); ++i) out << (i ? "," : "") << clique->second[i];
    out << '\n';
  }
  out << "coloring-sha=" << coloring_sha << '\n';
  return out.str();
}

RamseyCertificate make_certificate(const EdgeColoring& coloring, std::span<const unsigned> targets,
                                   const SearchOptions& options) {
  const VerificationReport report = verify_witness(coloring, targets, options);
  RamseyCertificate cert;
  cert.targets.assign(targets.begin(), targets.end());
  cert.n = coloring.size();
  cert.pass = report.passed();
  if (const auto* bad = report.first_failure()) cert.clique.emplace(bad->color, *bad->clique);
  cert.coloring_sha = sha256_hex(serialize_coloring(coloring));
  return cert;
}

RamseyCertificate certify(const EdgeColoring& coloring, std::span<const unsigned> targets,
                          const std::filesystem::path& out, const SearchOptions& options) {
  RamseyCertificate cert = make_certificate(coloring, targets, options);
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error("cannot open " + out.string() + " for writing");
  file << cert.to_text();
  if (!file.flush()) throw Error("failed writing " + out.string());
  return cert;
}

}  // namespace ramsey
