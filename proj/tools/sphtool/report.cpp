#include "report.hpp"

#include <sstream>

#include "sph/datum_json.hpp"

namespace sphtool {

Json vector_json(std::span<const sph::Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

Json vector_json(std::span<const sph::Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(sph::rational_text(x));
  return a;
}

std::string describe_character(const sph::ReductiveGroup& g, const sph::Character& c) {
  auto coeffs = g.root_coefficients(std::span<const sph::Integer>(c));
  if (!coeffs) return sph::to_string(std::span<const sph::Integer>(c));
  std::string out;
  std::size_t k = 0;
  for (sph::RootIndex a : g.simple_roots()) {
    const sph::Rational& q = (*coeffs)[k++];
    if (q == 0) continue;
    sph::Rational mag = abs(q);
    if (!out.empty()) out += q < 0 ? " - " : " + ";
    else if (q < 0) out += "-";
    if (mag != 1) out += sph::rational_text(mag) + " ";
    out += g.label(a);
  }
  return out.empty() ? "0" : out;
}

Json violations_json(const std::vector<sph::Violation>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(Json{{"tag", x.tag}, {"message", x.message}});
  return a;
}

namespace {

Json character_list(const sph::SphericalDatum& d, const std::vector<sph::Character>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(describe_character(d.group(), c));
  return a;
}

Json color_labels(const sph::SphericalDatum& d, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(d.colors()[i].label);
  return a;
}

Json root_labels(const sph::ReductiveGroup& g, const sph::RootSet& s) {
  Json a = Json::array();
  for (sph::RootIndex r : s) a.push_back(g.label(r));
  return a;
}

}  // namespace

Json roots_report(const sph::SphericalDatum& d) {
  Json out;
  Json types = Json::array();
  for (const auto& e : sph::classify_simple_roots(d))
    types.push_back(Json{{"root", d.group().label(e.root)}, {"type", sph::to_string(e.type)}, {"colors", color_labels(d, e.colors)}});
  out["root_types"] = types;
  sph::DistinguishedReport dist = sph::distinguished_roots(d);
  Json tilde = Json::array();
  for (const auto& s : dist.all())
    tilde.push_back(Json{{"root", describe_character(d.group(), s)}, {"tilde", d.group().label(dist.tilde.at(s))}});
  out["distinguished"] = Json{{"psi1", character_list(d, dist.psi1)},
                              {"psi2", character_list(d, dist.psi2)},
                              {"psi3", character_list(d, dist.psi3)},
                              {"tilde", tilde}};
  out["psi_bar"] = character_list(d, sph::doubled_root_lattice(d).psi_bar);
  return out;
}

Json automorphism_report(const sph::SphericalDatum& d) {
  sph::AutomorphismStructure a = sph::automorphism_structure(d);
  return Json{{"torus_rank", a.torus_rank}, {"finite_factors", vector_json(a.finite_factors)}};
}

Json info_report(const sph::SphericalDatum& d) {
  Json out;
  out["rank"] = d.rank();
  Json basis = Json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) basis.push_back(vector_json(d.lattice().basis().row(i)));
  out["lattice_basis"] = basis;
  Json roots = Json::array();
  for (const auto& s : d.spherical_roots())
    roots.push_back(Json{{"root", describe_character(d.group(), s)},
                         {"coordinates", vector_json(s)},
                         {"in_root_lattice", d.group().in_root_lattice(s)}});
  out["spherical_roots"] = roots;
  Json r = roots_report(d);
  for (auto it = r.begin(); it != r.end(); ++it) out[it.key()] = it.value();
  sph::IntegerLattice lb = sph::doubled_root_lattice(d).lambda_bar;
  sph::OptionalOrder idx = sph::index(lb, d.lattice());
  out["lambda_bar_index"] = idx ? Json(idx->get_str()) : Json("infinite");
  out["automorphisms"] = automorphism_report(d);
  out["wonderful"] = sph::is_wonderful(d);
  out["dimension"] = sph::dimension(d);
  return out;
}

Json subspace_json(const sph::SphericalDatum& d, const sph::ColoredSubspace& cs) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < cs.subspace.rows(); ++i) basis.push_back(vector_json(cs.subspace.row(i)));
  std::vector<std::size_t> colors(cs.colors.begin(), cs.colors.end());
  Json out{{"subspace", basis}, {"colors", color_labels(d, colors)}};
  auto q = sph::parabolic_of(d, cs);
  out["parabolic"] = q ? root_labels(d.group(), *q) : Json("not parabolic");
  return out;
}

Json family_report(const sph::SphericalDatum& d, const sph::ColoredSubspaceFamily& fam) {
  Json entries = Json::array();
  for (const auto& cs : fam.entries) entries.push_back(subspace_json(d, cs));
  Json order = Json::array();
  for (auto [i, j] : fam.order) order.push_back(Json::array({i, j}));
  Json orbits = Json::array();
  for (const auto& o : fam.orbits) orbits.push_back(o);
  return Json{{"entries", entries}, {"order", order}, {"orbits", orbits}};
}

Json equivalence_report(const sph::SphericalDatum& a, const sph::SphericalDatum& b, const sph::EquivalenceResult& r) {
  Json out{{"equivalent", r.equivalent}};
  if (r.equivalent) {
    Json w = Json::array();
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      w.push_back(Json::array({a.colors()[i].label, b.colors()[r.witness[i]].label}));
    out["witness"] = w;
  } else {
    out["counterreason"] = r.counterreason;
  }
  return out;
}

namespace {

bool is_scalar_list(const Json& v) {
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const Json& v, int depth, std::ostringstream& os) {
  const std::string pad(2 * depth, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    if (v.is_array() && x.is_object() && !x.empty()) {
      std::ostringstream inner;
      render(x, depth + 1, inner);
      os << pad << "- " << inner.str().substr(pad.size() + 2);
      continue;
    }
    os << pad;
    if (v.is_object()) os << it.key() << ":";
    else os << "-";
    if (!x.is_structured()) {
      os << " " << scalar_text(x) << "\n";
    } else if (x.is_array() && is_scalar_list(x)) {
      os << " [";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
      os << "]\n";
    } else {
      os << "\n";
      render(x, depth + 1, os);
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  if (!report.is_structured()) return scalar_text(report) + "\n";
  render(report, 0, os);
  return os.str();
}

}  // namespace sphtool
