#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <nlohmann/json.hpp>

#include "sph/lattice.hpp"

#ifndef SPH_FIXTURE_DIR
#error "SPH_FIXTURE_DIR must be defined"
#endif

namespace testing_support {

using namespace sph;

std::string fixture_path(const std::string& name) { return std::string(SPH_FIXTURE_DIR) + "/" + name + ".json"; }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(SPH_FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

LoadedDatum load_fixture(const std::string& name) { return load_datum(fixture_path(name)); }

std::vector<NamedDatum> load_corpus() {
  std::vector<NamedDatum> out;
  for (const auto& n : fixture_names()) out.push_back({n, load_fixture(n).datum});
  return out;
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0:
        u.swap_rows(i, j);
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
      default:
        if (i != j) {
          long k = uniform(rng, -2, 2);
          for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
        }
    }
  }
  return u;
}

std::string datum_json_on_basis(const SphericalDatum& d, const std::vector<ZVector>& basis,
                                const std::vector<QVector>& phi_on_basis, const std::vector<Character>& roots,
                                const std::vector<std::string>& labels) {
  using nlohmann::json;
  const auto& g = d.group();
  json j;
  j["format"] = 1;
  json comps = json::array();
  for (const auto& c : g.descriptor().components) comps.push_back({{"type", to_string(c.type)}, {"rank", c.rank}});
  j["group"] = {{"components", comps}, {"torus_rank", g.descriptor().torus_rank}};
  if (g.is_proper_levi()) {
    json levi = json::array();
    for (auto a : g.simple_roots()) levi.push_back(g.label(a));
    j["levi"] = levi;
  }
  auto ints = [](const ZVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  j["lattice_basis"] = json::array();
  for (const auto& b : basis) j["lattice_basis"].push_back(ints(b));
  j["spherical_roots"] = json::array();
  for (const auto& s : roots) j["spherical_roots"].push_back(ints(s));
  j["colors"] = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Color& c = d.colors()[i];
    json moved = json::array();
    for (auto a : c.moved_by) moved.push_back(g.label(a));
    json phi = json::array();
    for (const auto& x : phi_on_basis[i]) phi.push_back(rational_text(x));
    j["colors"].push_back({{"label", labels[i]}, {"moved_by", moved}, {"phi", phi}});
  }
  return j.dump();
}

Transformed random_transform(const SphericalDatum& d, Rng& rng) {
  const std::size_t k = d.rank();
  IntMatrix u = random_unimodular(rng, k);
  RationalMatrix uq = to_rational(u);
  std::vector<ZVector> basis;
  for (std::size_t i = 0; i < k; ++i) {
    ZVector v(d.group().character_rank());
    for (std::size_t j = 0; j < k; ++j) {
      ZVector b = d.lattice().basis_vector(j);
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += u(i, j) * b[c];
    }
    basis.push_back(v);
  }
  std::vector<Character> roots = d.spherical_roots();
  std::shuffle(roots.begin(), roots.end(), rng);

  const std::size_t n = d.colors().size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);  // order[p] = old index at new position p

  std::vector<QVector> phis(n);
  std::vector<std::string> labels(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t p = 0; p < n; ++p) {
    perm[order[p]] = p;
    phis[order[p]] = times_column(uq, d.colors()[order[p]].phi);
    labels[order[p]] = "R" + std::to_string(uniform(rng, 0, 999)) + "_" + std::to_string(p);
  }
  // write colors in the shuffled order
  std::vector<Color> reordered;
  std::vector<QVector> phi_sorted;
  std::vector<std::string> lab_sorted;
  for (std::size_t p = 0; p < n; ++p) {
    reordered.push_back(d.colors()[order[p]]);
    phi_sorted.push_back(phis[order[p]]);
    lab_sorted.push_back(labels[order[p]]);
  }
  SphericalDatum shuffled(d.group(), d.lattice(), d.spherical_roots(), reordered);
  std::string text = datum_json_on_basis(shuffled, basis, phi_sorted, roots, lab_sorted);
  return {parse_datum(text).datum, perm};
}

namespace {

SphericalDatum with_colors(const SphericalDatum& d, std::vector<Color> colors) {
  return SphericalDatum(d.group(), d.lattice(), d.spherical_roots(), std::move(colors));
}

}  // namespace

std::vector<Corruption> corruptions_of(const std::string& name, const SphericalDatum& d) {
  std::vector<Corruption> out;
  const auto& g = d.group();

  for (std::size_t i = 0; i < d.colors().size(); ++i) {
    if (is_zero(d.colors()[i].phi)) continue;
    auto colors = d.colors();
    for (auto& x : colors[i].phi) x *= 2;
    out.push_back({name + ": phi of " + colors[i].label + " doubled", "V2", with_colors(d, colors)});
  }

  for (std::size_t i = 0; i < d.spherical_roots().size(); ++i) {
    auto roots = d.spherical_roots();
    for (auto& x : roots[i]) x *= 2;
    out.push_back({name + ": spherical root " + std::to_string(i) + " doubled", "V1",
                   SphericalDatum(g, d.lattice(), roots, d.colors())});
  }

  // Add the fundamental weight of a type-a root to the lattice, extending the
  // color values by zero. Only possible when it is outside the span.
  for (const auto& e : classify_simple_roots(d)) {
    if (e.type != RootType::a) continue;
    ZVector pi(g.character_rank());
    pi[e.root] = 1;
    RationalMatrix span = to_rational(d.lattice().basis());
    span.append_row(to_rational(pi));
    if (rank(span) != d.rank() + 1) continue;
    std::vector<ZVector> basis = d.lattice().basis().row_vectors();
    basis.push_back(pi);
    auto colors = d.colors();
    for (auto& c : colors) c.phi.push_back(0);
    out.push_back({name + ": fundamental weight of type-a root " + g.label(e.root) + " added", "V3",
                   SphericalDatum::from_basis(g, basis, d.spherical_roots(), colors)});
  }

  // Shift a type-b pair by -+ half the coroot: the sum is unchanged but one
  // value on alpha rises to 2.
  for (const auto& e : classify_simple_roots(d)) {
    if (e.type != RootType::b) continue;
    // a color shared with another root would also break that root's sum
    if (d.colors()[e.colors[0]].moved_by.size() != 1 || d.colors()[e.colors[1]].moved_by.size() != 1) continue;
    QVector half = d.coroot_on_lattice(e.root);
    for (auto& x : half) x /= 2;
    auto colors = d.colors();
    auto& p = colors[e.colors[0]].phi;
    auto& m = colors[e.colors[1]].phi;
    for (std::size_t j = 0; j < p.size(); ++j) {
      p[j] += half[j];
      m[j] -= half[j];
    }
    out.push_back({name + ": colors of " + g.label(e.root) + " shifted by half the coroot", "V4",
                   with_colors(d, colors)});
  }
  return out;
}

}  // namespace testing_support
