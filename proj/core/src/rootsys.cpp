#include "sph/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace sph {

std::string to_string(DynkinType t) {
  switch (t) {
    case DynkinType::A: return "A";
    case DynkinType::B: return "B";
    case DynkinType::C: return "C";
    case DynkinType::D: return "D";
    case DynkinType::E: return "E";
    case DynkinType::F: return "F";
    case DynkinType::G: return "G";
  }
  return "?";
}

std::optional<DynkinType> parse_dynkin_type(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'A': return DynkinType::A;
    case 'B': return DynkinType::B;
    case 'C': return DynkinType::C;
    case 'D': return DynkinType::D;
    case 'E': return DynkinType::E;
    case 'F': return DynkinType::F;
    case 'G': return DynkinType::G;
    default: return std::nullopt;
  }
}

void check_component(const Component& c) {
  bool ok = false;
  switch (c.type) {
    case DynkinType::A: ok = c.rank >= 1; break;
    case DynkinType::B: ok = c.rank >= 2; break;
    case DynkinType::C: ok = c.rank >= 2; break;
    case DynkinType::D: ok = c.rank >= 3; break;
    case DynkinType::E: ok = c.rank >= 6 && c.rank <= 8; break;
    case DynkinType::F: ok = c.rank == 4; break;
    case DynkinType::G: ok = c.rank == 2; break;
  }
  if (!ok) throw DomainError("invalid rank " + std::to_string(c.rank) + " for type " + to_string(c.type));
}

std::vector<std::vector<int>> cartan_matrix(const Component& c) {
  check_component(c);
  const std::size_t n = c.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (c.type) {
    case DynkinType::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinType::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case DynkinType::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case DynkinType::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case DynkinType::E:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 4, n - 1);
      break;
    case DynkinType::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case DynkinType::G:
      a[0][1] = -3;  // alpha_2 short
      a[1][0] = -1;
      break;
  }
  return a;
}

ReductiveGroup::ReductiveGroup(GroupDescriptor descriptor) : descriptor_(std::move(descriptor)) {
  for (const auto& c : descriptor_.components) {
    offsets_.push_back(total_simple_);
    cartans_.push_back(cartan_matrix(c));
    total_simple_ += c.rank;
  }
  character_rank_ = total_simple_ + descriptor_.torus_rank;
  for (RootIndex i = 0; i < total_simple_; ++i) active_.insert(i);
}

ReductiveGroup ReductiveGroup::levi(const RootSet& s) const {
  for (RootIndex i : s) check_root(i);
  ReductiveGroup m = *this;
  m.active_ = s;
  return m;
}

ReductiveGroup::Location ReductiveGroup::locate(RootIndex i) const {
  if (i >= total_simple_) throw DomainError("simple root index " + std::to_string(i) + " out of range");
  std::size_t c = 0;
  while (c + 1 < offsets_.size() && offsets_[c + 1] <= i) ++c;
  return {c, i - offsets_[c]};
}

void ReductiveGroup::check_root(RootIndex i) const {
  if (!is_simple_root(i)) {
    throw DomainError((i < total_simple_ ? label(i) : std::to_string(i)) + " is not a simple root of the group");
  }
}

int ReductiveGroup::cartan(RootIndex i, RootIndex j) const {
  Location a = locate(i), b = locate(j);
  if (a.component != b.component) return 0;
  return cartans_[a.component][a.local][b.local];
}

Character ReductiveGroup::simple_root(RootIndex i) const {
  check_root(i);
  Location loc = locate(i);
  Character chi(character_rank_);
  const auto& row = cartans_[loc.component][loc.local];
  for (std::size_t j = 0; j < row.size(); ++j) chi[offsets_[loc.component] + j] = row[j];
  return chi;
}

Functional ReductiveGroup::coroot(RootIndex i) const {
  check_root(i);
  Functional f(character_rank_);
  f[i] = 1;
  return f;
}

Integer ReductiveGroup::pair_with_coroot(std::span<const Integer> chi, RootIndex i) const {
  if (chi.size() != character_rank_) throw DimensionError("character has the wrong length");
  check_root(i);
  return chi[i];
}

std::string ReductiveGroup::label(RootIndex i) const {
  Location loc = locate(i);
  return "c" + std::to_string(loc.component) + ".a" + std::to_string(loc.local + 1);
}

std::optional<RootIndex> ReductiveGroup::find_label(std::string_view s) const {
  if (s.size() < 4 || s[0] != 'c') return std::nullopt;
  auto dot = s.find(".a");
  if (dot == std::string_view::npos) return std::nullopt;
  std::size_t comp = 0, local = 0;
  auto r1 = std::from_chars(s.data() + 1, s.data() + dot, comp);
  auto r2 = std::from_chars(s.data() + dot + 2, s.data() + s.size(), local);
  if (r1.ec != std::errc() || r1.ptr != s.data() + dot) return std::nullopt;
  if (r2.ec != std::errc() || r2.ptr != s.data() + s.size()) return std::nullopt;
  if (comp >= descriptor_.components.size() || local < 1 || local > descriptor_.components[comp].rank)
    return std::nullopt;
  return offsets_[comp] + local - 1;
}

std::size_t ReductiveGroup::positive_root_count(const RootSet& s) const {
  for (RootIndex i : s) check_root(i);
  std::vector<RootIndex> idx(s.begin(), s.end());
  const std::size_t k = idx.size();
  using Coeffs = std::vector<int>;
  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (std::size_t i = 0; i < k; ++i) {
    Coeffs c(k, 0);
    c[i] = 1;
    roots.insert(c);
    layer.push_back(c);
  }
  // Root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the alpha_i-string below beta.
  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < k; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < k; ++j) pairing += beta[j] * cartan(idx[j], idx[i]);
        int p = 0;
        Coeffs down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Coeffs up = beta;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return roots.size();
}

std::size_t ReductiveGroup::dim() const { return 2 * positive_root_count(active_) + character_rank_; }

std::size_t ReductiveGroup::dim_borel() const { return positive_root_count(active_) + character_rank_; }

std::size_t ReductiveGroup::dim_parabolic(const RootSet& s) const {
  return dim_borel() + positive_root_count(s);
}

std::optional<QVector> ReductiveGroup::root_coefficients(std::span<const Rational> gamma) const {
  if (gamma.size() != character_rank_) throw DimensionError("character has the wrong length");
  RationalMatrix rows(0, character_rank_);
  for (RootIndex i : active_) rows.append_row(to_rational(simple_root(i)));
  return solve_row_combination(rows, gamma);
}

std::optional<QVector> ReductiveGroup::root_coefficients(std::span<const Integer> gamma) const {
  QVector q(gamma.begin(), gamma.end());
  return root_coefficients(std::span<const Rational>(q));
}

RootSet ReductiveGroup::support(std::span<const Rational> gamma) const {
  auto c = root_coefficients(gamma);
  if (!c) throw NotInRootSpanError();
  RootSet out;
  std::size_t k = 0;
  for (RootIndex i : active_) {
    if ((*c)[k] != 0) out.insert(i);
    ++k;
  }
  return out;
}

bool ReductiveGroup::in_root_lattice(std::span<const Integer> gamma) const {
  auto c = root_coefficients(gamma);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool ReductiveGroup::in_rational_span(std::span<const Integer> gamma, const RootSet& s) const {
  if (gamma.size() != character_rank_) throw DimensionError("character has the wrong length");
  RationalMatrix rows(0, character_rank_);
  for (RootIndex i : s) rows.append_row(to_rational(simple_root(i)));
  QVector q(gamma.begin(), gamma.end());
  return solve_row_combination(rows, q).has_value();
}

std::vector<std::vector<RootIndex>> ReductiveGroup::find_subdiagrams(const Component& target) const {
  if (!(target.type == DynkinType::B && target.rank >= 2) && !(target.type == DynkinType::G && target.rank == 2)) {
    throw DomainError("subdiagram search supports B_k (k >= 2) and G2 only");
  }
  const auto want = cartan_matrix(target);
  const std::size_t k = target.rank;
  std::vector<RootIndex> roots(active_.begin(), active_.end());
  std::vector<std::vector<RootIndex>> found;
  std::vector<RootIndex> current;

  std::function<void()> extend = [&] {
    if (current.size() == k) {
      found.push_back(current);
      return;
    }
    const std::size_t pos = current.size();
    for (RootIndex r : roots) {
      if (std::find(current.begin(), current.end(), r) != current.end()) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        ok = cartan(current[q], r) == want[q][pos] && cartan(r, current[q]) == want[pos][q];
      }
      if (!ok) continue;
      current.push_back(r);
      extend();
      current.pop_back();
    }
  };
  extend();
  return found;
}

}  // namespace sph
