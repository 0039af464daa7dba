#pragma once

// Compact construction of data in tests: colors are (label, moved_by, values
// on the given basis rows).

#include <string>
#include <vector>

#include "sph/datum.hpp"

namespace testing_support {

struct ColorSpec {
  std::string label;
  sph::RootSet moved_by;
  std::vector<sph::Rational> phi;
};

inline sph::SphericalDatum make_datum(std::vector<sph::Component> comps, std::size_t torus,
                                      std::vector<sph::ZVector> basis, std::vector<sph::Character> roots,
                                      std::vector<ColorSpec> colors) {
  sph::ReductiveGroup g(sph::GroupDescriptor{std::move(comps), torus});
  std::vector<sph::Color> cs;
  for (auto& c : colors) cs.push_back({c.label, c.moved_by, c.phi});
  return sph::SphericalDatum::from_basis(g, basis, std::move(roots), std::move(cs));
}

inline sph::Component A(std::size_t n) { return {sph::DynkinType::A, n}; }
inline sph::Component B(std::size_t n) { return {sph::DynkinType::B, n}; }
inline sph::Component G2() { return {sph::DynkinType::G, 2}; }

inline sph::Rational q(long p, long d = 1) {
  sph::Rational r(p, d);
  r.canonicalize();
  return r;
}

inline std::vector<std::string> tags(const std::vector<sph::Violation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.tag);
  return out;
}

}  // namespace testing_support
