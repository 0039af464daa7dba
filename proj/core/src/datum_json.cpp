#include "sph/datum_json.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace sph {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line), "invalid JSON");
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Integer parse_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                            : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Integer z;
    const std::string s = v.get<std::string>();
    if (!s.empty() && z.set_str(s, 10) == 0) return z;
  }
  throw ParseError(path, "expected an integer");
}

Rational parse_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(parse_integer(v, path));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    auto slash = s.find('/');
    Integer num, den = 1;
    bool ok = !s.empty() && num.set_str(s.substr(0, slash), 10) == 0;
    if (ok && slash != std::string::npos) ok = den.set_str(s.substr(slash + 1), 10) == 0;
    if (ok && den == 0) throw ParseError(path, "zero denominator");
    if (ok) {
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
  }
  throw ParseError(path, "expected a rational \"p/q\"");
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
  const json& a = field(obj, key, path);
  if (!a.is_array()) throw ParseError(path.empty() ? key : path + "." + key, "expected an array");
  return a;
}

ZVector parse_zvector(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  if (v.size() != len)
    throw ParseError(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(v.size()));
  ZVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_integer(v[i], at(path, i)));
  return out;
}

QVector parse_qvector(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  if (v.size() != len)
    throw ParseError(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(v.size()));
  QVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_rational(v[i], at(path, i)));
  return out;
}

std::vector<ZVector> parse_zvectors(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_zvector(v[i], len, at(path, i)));
  return out;
}

void check_format(const json& doc, bool required) {
  if (!doc.is_object()) throw ParseError("document", "expected an object");
  auto it = doc.find("format");
  if (it == doc.end()) {
    if (required) throw ParseError("format", "missing field");
    return;
  }
  if (!it->is_number_integer() || it->get<long>() != 1) throw ParseError("format", "unsupported format version");
}

Component parse_component(const json& c, const std::string& path) {
  const json& t = field(c, "type", path);
  if (!t.is_string()) throw ParseError(path + ".type", "expected a string");
  std::string s = t.get<std::string>();
  std::optional<std::size_t> implied;
  if (s.size() > 1) {
    try {
      implied = std::stoul(s.substr(1));
    } catch (const std::exception&) {
      throw ParseError(path + ".type", "unknown Dynkin type \"" + s + "\"");
    }
    s = s.substr(0, 1);
  }
  auto type = parse_dynkin_type(s);
  if (!type) throw ParseError(path + ".type", "unknown Dynkin type \"" + t.get<std::string>() + "\"");
  std::size_t rank = 0;
  auto r = c.find("rank");
  if (r != c.end()) {
    if (!r->is_number_unsigned()) throw ParseError(path + ".rank", "expected a nonnegative integer");
    rank = r->get<std::size_t>();
    if (implied && *implied != rank) throw ParseError(path + ".rank", "disagrees with the type name");
  } else if (implied) {
    rank = *implied;
  } else {
    throw ParseError(path + ".rank", "missing field");
  }
  Component comp{*type, rank};
  try {
    check_component(comp);
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
  return comp;
}

RootIndex parse_root_label(const ReductiveGroup& g, const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a root label \"c<i>.a<j>\"");
  auto idx = g.find_label(v.get<std::string>());
  if (!idx) throw ParseError(path, "unknown root label \"" + v.get<std::string>() + "\"");
  if (!g.is_simple_root(*idx)) throw ParseError(path, "root " + v.get<std::string>() + " is outside the Levi subgroup");
  return *idx;
}

ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json zvector_json(std::span<const Integer> v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

// Values in file-basis coordinates, rewritten for the stored basis.
QVector to_stored(const LoadedDatum& d, const QVector& v) { return times_column(d.basis_change, v); }

RationalMatrix parse_subspace(const json& doc, const LoadedDatum& d) {
  const json& rows = array_field(doc, "subspace", "");
  const std::size_t k = d.datum.rank();
  RationalMatrix m(0, k);
  for (std::size_t i = 0; i < rows.size(); ++i) m.append_row(to_stored(d, parse_qvector(rows[i], k, at("subspace", i))));
  return m;
}

}  // namespace

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedDatum parse_datum(const std::string& text) {
  json doc = parse_text(text);
  check_format(doc, true);

  const json& g = field(doc, "group", "");
  const json& comps = array_field(g, "components", "group");
  GroupDescriptor desc;
  for (std::size_t i = 0; i < comps.size(); ++i) desc.components.push_back(parse_component(comps[i], at("group.components", i)));
  if (auto t = g.find("torus_rank"); t != g.end()) {
    if (!t->is_number_unsigned()) throw ParseError("group.torus_rank", "expected a nonnegative integer");
    desc.torus_rank = t->get<std::size_t>();
  }
  ReductiveGroup group(desc);
  if (auto lv = doc.find("levi"); lv != doc.end()) {
    if (!lv->is_array()) throw ParseError("levi", "expected an array of root labels");
    RootSet s;
    for (std::size_t i = 0; i < lv->size(); ++i) s.insert(parse_root_label(group, (*lv)[i], at("levi", i)));
    group = group.levi(s);
  }
  const std::size_t r = group.character_rank();

  std::vector<ZVector> basis = parse_zvectors(field(doc, "lattice_basis", ""), r, "lattice_basis");
  IntMatrix input = IntMatrix::from_rows(basis, r);
  if (rank(input) != basis.size()) throw ParseError("lattice_basis", "basis vectors are linearly dependent");
  std::vector<Character> roots = parse_zvectors(field(doc, "spherical_roots", ""), r, "spherical_roots");

  const json& cols = array_field(doc, "colors", "");
  std::vector<Color> colors;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string path = at("colors", i);
    const json& lab = field(cols[i], "label", path);
    if (!lab.is_string()) throw ParseError(path + ".label", "expected a string");
    Color c;
    c.label = lab.get<std::string>();
    for (const auto& prev : colors)
      if (prev.label == c.label) throw ParseError(path + ".label", "duplicate color label \"" + c.label + "\"");
    const json& mb = array_field(cols[i], "moved_by", path);
    for (std::size_t j = 0; j < mb.size(); ++j) c.moved_by.insert(parse_root_label(group, mb[j], at(path + ".moved_by", j)));
    c.phi = parse_qvector(field(cols[i], "phi", path), basis.size(), path + ".phi");
    colors.push_back(std::move(c));
  }

  SphericalDatum d = SphericalDatum::from_basis(group, basis, std::move(roots), std::move(colors));
  RationalMatrix change(0, basis.size());
  RationalMatrix in_q = to_rational(input);
  for (std::size_t i = 0; i < d.rank(); ++i) change.append_row(*solve_row_combination(in_q, to_rational(d.lattice().basis_vector(i))));
  return {std::move(d), std::move(change)};
}

LoadedDatum load_datum(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_datum(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

std::string datum_to_json(const SphericalDatum& d, int indent) {
  const auto& g = d.group();
  ordered_json doc;
  doc["format"] = 1;
  ordered_json comps = ordered_json::array();
  for (const auto& c : g.descriptor().components) {
    ordered_json o;
    o["type"] = to_string(c.type);
    o["rank"] = c.rank;
    comps.push_back(o);
  }
  doc["group"]["components"] = comps;
  doc["group"]["torus_rank"] = g.descriptor().torus_rank;
  if (g.is_proper_levi()) {
    ordered_json lv = ordered_json::array();
    for (RootIndex a : g.simple_roots()) lv.push_back(g.label(a));
    doc["levi"] = lv;
  }
  ordered_json basis = ordered_json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) basis.push_back(zvector_json(d.lattice().basis().row(i)));
  doc["lattice_basis"] = basis;
  ordered_json roots = ordered_json::array();
  for (const auto& s : d.spherical_roots()) roots.push_back(zvector_json(s));
  doc["spherical_roots"] = roots;
  ordered_json cols = ordered_json::array();
  for (const auto& c : d.colors()) {
    ordered_json o;
    o["label"] = c.label;
    ordered_json mb = ordered_json::array();
    for (RootIndex a : c.moved_by) mb.push_back(g.label(a));
    o["moved_by"] = mb;
    ordered_json phi = ordered_json::array();
    for (const auto& q : c.phi) phi.push_back(rational_text(q));
    o["phi"] = phi;
    cols.push_back(o);
  }
  doc["colors"] = cols;
  return doc.dump(indent) + "\n";
}

IntegerLattice parse_sublattice(const std::string& text, std::size_t ambient_rank) {
  json doc = parse_text(text);
  check_format(doc, false);
  std::vector<ZVector> rows = parse_zvectors(field(doc, "lattice_basis", ""), ambient_rank, "lattice_basis");
  return IntegerLattice::spanned_by(ambient_rank, rows);
}

ColoredSubspace parse_colored_subspace(const std::string& text, const LoadedDatum& d) {
  json doc = parse_text(text);
  check_format(doc, false);
  RationalMatrix m = parse_subspace(doc, d);
  std::set<std::size_t> colors;
  const json& labels = array_field(doc, "colors", "");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw ParseError(at("colors", i), "expected a color label");
    const std::string s = labels[i].get<std::string>();
    const auto& cs = d.datum.colors();
    auto it = std::find_if(cs.begin(), cs.end(), [&](const Color& c) { return c.label == s; });
    if (it == cs.end()) throw ParseError(at("colors", i), "unknown color \"" + s + "\"");
    colors.insert(static_cast<std::size_t>(it - cs.begin()));
  }
  return ColoredSubspace::make(d.datum.rank(), m.row_vectors(), std::move(colors));
}

RationalMatrix parse_central_subspace(const std::string& text, const LoadedDatum& d) {
  json doc = parse_text(text);
  check_format(doc, false);
  return rref(parse_subspace(doc, d)).form;
}

}  // namespace sph
