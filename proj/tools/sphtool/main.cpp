// sphtool: command-line front end for spherical data files.
//
// Exit codes: 0 success, 1 negative answer (validate, equiv), 2 parse or
// usage error, 3 semantic error (invalid datum, precondition violated).

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "sph/datum_json.hpp"
#include "sph/equiv.hpp"
#include "sph/subspace.hpp"

namespace {

using sphtool::Json;

enum Exit { kOk = 0, kNegative = 1, kParse = 2, kSemantic = 3 };

struct Options {
  std::string format = "text";
  bool quasiaffine = false;
  std::string file, second, vector, roots, central, test;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const Json& report) {
  if (json_output(o))
    std::cout << report.dump(2) << "\n";
  else
    std::cout << sphtool::render_text(report);
}

int fail(const Options& o, int code, const std::string& kind, const std::string& message, Json extra = Json::object()) {
  if (json_output(o)) {
    Json err{{"kind", kind}, {"message", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) err[it.key()] = it.value();
    std::cerr << Json{{"error", err}}.dump(2) << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
    if (extra.contains("violations"))
      for (const auto& v : extra["violations"])
        std::cerr << "  [" << v["tag"].get<std::string>() << "] " << v["message"].get<std::string>() << "\n";
  }
  return code;
}

sph::ValidationOptions validation(const Options& o) { return {o.quasiaffine}; }

sph::LoadedDatum load_valid(const Options& o, const std::string& path) {
  sph::LoadedDatum d = sph::load_datum(path);
  sph::require_valid(d.datum, path + " is not a valid datum", validation(o));
  return d;
}

sph::ZVector parse_vector(const std::string& text, std::size_t len) {
  std::string s = text;
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  sph::ZVector v;
  std::string tok;
  while (in >> tok) {
    sph::Integer z;
    if (z.set_str(tok, 10) != 0) throw sph::ParseError("VECTOR", "not an integer: " + tok);
    v.push_back(z);
  }
  if (v.size() != len)
    throw sph::ParseError("VECTOR", "expected " + std::to_string(len) + " coordinates, found " + std::to_string(v.size()));
  return v;
}

sph::RootSet parse_roots(const sph::ReductiveGroup& g, const std::string& text) {
  sph::RootSet s;
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    auto idx = g.find_label(tok);
    if (!idx || !g.is_simple_root(*idx)) throw sph::ParseError("--roots", "unknown simple root " + tok);
    s.insert(*idx);
  }
  return s;
}

void emit_datum(const sph::SphericalDatum& d) { std::cout << sph::datum_to_json(d); }

int run(const std::string& command, const Options& o) {
  if (command == "validate") {
    sph::LoadedDatum d = sph::load_datum(o.file);
    auto v = sph::validate(d.datum, validation(o));
    emit(o, Json{{"valid", v.empty()}, {"violations", sphtool::violations_json(v)}});
    return v.empty() ? kOk : kNegative;
  }
  if (command == "equiv") {
    sph::LoadedDatum a = load_valid(o, o.file);
    sph::LoadedDatum b = load_valid(o, o.second);
    sph::EquivalenceResult r = sph::equivalent(a.datum, b.datum);
    emit(o, sphtool::equivalence_report(a.datum, b.datum, r));
    return r.equivalent ? kOk : kNegative;
  }

  sph::LoadedDatum loaded = load_valid(o, o.file);
  const sph::SphericalDatum& d = loaded.datum;
  if (command == "info") {
    emit(o, sphtool::info_report(d));
  } else if (command == "roots") {
    emit(o, sphtool::roots_report(d));
  } else if (command == "wonderful") {
    emit(o, Json{{"wonderful", sph::is_wonderful(d)}});
  } else if (command == "automorphisms") {
    emit(o, sphtool::automorphism_report(d));
  } else if (command == "dimension") {
    emit(o, Json{{"dimension", sph::dimension(d)}});
  } else if (command == "monoid-check") {
    sph::ZVector v = parse_vector(o.vector, d.group().character_rank());
    emit(o, Json{{"in_weight_monoid", sph::weight_monoid_contains(d, v)}});
  } else if (command == "localize") {
    emit_datum(sph::localize(d, parse_roots(d.group(), o.roots)));
  } else if (command == "quotient") {
    sph::IntegerLattice sub = sph::parse_sublattice(sph::read_file(o.second), d.group().character_rank());
    emit_datum(sph::quotient_finite(d, sub));
  } else if (command == "wonderfulize") {
    emit_datum(sph::wonderfulization(d));
  } else if (command == "subspaces") {
    if (!o.test.empty()) {
      sph::ColoredSubspace cs = sph::parse_colored_subspace(sph::read_file(o.test), loaded);
      bool ok = sph::is_colored_subspace(d, cs);
      Json out = sphtool::subspace_json(d, cs);
      out["colored_subspace"] = ok;
      if (ok) out["quotient"] = Json::parse(sph::datum_to_json(sph::quotient_by(d, cs)));
      emit(o, out);
      return ok ? kOk : kNegative;
    }
    std::optional<sph::RationalMatrix> central;
    if (!o.central.empty()) central = sph::parse_central_subspace(sph::read_file(o.central), loaded);
    emit(o, sphtool::family_report(d, sph::enumerate_color_spanned(d, central)));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of spherical homogeneous spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quasiaffine", o.quasiaffine, "Also require phi_D != 0 for every color");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("FILE", o.file, "Datum file")->required();
    return c;
  };
  file_cmd("validate", "Check the axioms V1-V5");
  file_cmd("info", "Full report of derived invariants");
  file_cmd("roots", "Root types, distinguished roots and the doubled roots");
  file_cmd("wonderful", "Whether a wonderful embedding exists");
  file_cmd("automorphisms", "Structure of the equivariant automorphism group");
  file_cmd("dimension", "Dimension of the homogeneous space");
  file_cmd("monoid-check", "Membership in the weight monoid")
      ->add_option("VECTOR", o.vector, "Character, e.g. 2,0")->required();
  file_cmd("localize", "Datum of a standard Levi subgroup")
      ->add_option("--roots", o.roots, "Simple roots, e.g. c0.a1,c0.a2")->required();
  file_cmd("quotient", "Quotient by a finite group of automorphisms")
      ->add_option("SUBLATTICE", o.second, "Sublattice file")->required();
  file_cmd("wonderfulize", "Datum of the wonderful quotient");
  auto* sub = file_cmd("subspaces", "Enumerate or test colored subspaces");
  sub->add_option("--central-subspace", o.central, "Central subspace added to every span");
  sub->add_option("--test", o.test, "Colored subspace file to test");
  file_cmd("equiv", "Compare the invariants of two data")
      ->add_option("OTHER", o.second, "Second datum file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const sph::ParseError& e) {
    return fail(o, kParse, "parse", e.what(), Json{{"where", e.where()}});
  } catch (const sph::InvalidDatumError& e) {
    return fail(o, kSemantic, "invalid datum", e.context(), Json{{"violations", sphtool::violations_json(e.violations())}});
  } catch (const sph::Error& e) {
    return fail(o, kSemantic, "semantic", e.what());
  }
}
