#include "sph/equiv.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

namespace sph {
namespace {

std::string hex_sha256(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string vec(std::span<const Integer> v) { return to_string(v); }
std::string vec(std::span<const Rational> v) { return to_string(v); }

std::string color_key(const SphericalDatum& d, const Color& c) {
  std::string s = "{";
  bool first = true;
  for (RootIndex a : c.moved_by) {
    if (!first) s += ",";
    s += d.group().label(a);
    first = false;
  }
  return s + "}:" + vec(c.phi);
}

std::vector<Character> sorted_roots(const SphericalDatum& d) {
  auto r = d.spherical_roots();
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::string> sorted_color_keys(const SphericalDatum& d) {
  std::vector<std::string> keys;
  for (const auto& c : d.colors()) keys.push_back(color_key(d, c));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

CanonicalForm canonical_form(const SphericalDatum& d) {
  std::string e = "group";
  for (const auto& c : d.group().descriptor().components) e += " " + to_string(c.type) + std::to_string(c.rank);
  e += " torus " + std::to_string(d.group().descriptor().torus_rank) + "\nlevi";
  for (RootIndex a : d.group().simple_roots()) e += " " + d.group().label(a);
  e += "\nlattice";
  for (std::size_t i = 0; i < d.rank(); ++i) e += " " + vec(d.lattice().basis().row(i));
  e += "\nroots";
  for (const auto& s : sorted_roots(d)) e += " " + vec(s);
  e += "\ncolors";
  for (const auto& k : sorted_color_keys(d)) e += " " + k;
  e += "\n";
  return {e, hex_sha256(e)};
}

EquivalenceResult equivalent(const SphericalDatum& a, const SphericalDatum& b) {
  if (!(a.group() == b.group())) throw IncomparableError();
  EquivalenceResult r;
  if (!(a.lattice() == b.lattice())) {
    r.counterreason = "weight lattice";
    return r;
  }
  if (sorted_roots(a) != sorted_roots(b)) {
    r.counterreason = "valuation cone";
    return r;
  }
  if (a.colors().size() != b.colors().size()) {
    r.counterreason = "colors";
    return r;
  }
  std::vector<bool> used(b.colors().size(), false);
  for (const auto& c : a.colors()) {
    std::size_t j = 0;
    while (j < b.colors().size() &&
           (used[j] || b.colors()[j].moved_by != c.moved_by || b.colors()[j].phi != c.phi))
      ++j;
    if (j == b.colors().size()) {
      r.witness.clear();
      r.counterreason = "colors";
      return r;
    }
    used[j] = true;
    r.witness.push_back(j);
  }
  r.equivalent = true;
  return r;
}

}  // namespace sph
