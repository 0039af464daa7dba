#pragma once

// Root data of connected reductive groups.
//
// Characters of the maximal torus are integer vectors in the basis
// (fundamental weights of each simple component, in order) followed by a
// basis of the characters of the central torus. Simple roots use the
// Vinberg-Onishchik numbering documented in docs/conventions.md. A simple
// root is addressed by its global index: component offsets are cumulative
// ranks, so the global index of a root equals the coordinate of its
// fundamental weight.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sph/exactla.hpp"

namespace sph {

enum class DynkinType { A, B, C, D, E, F, G };

std::string to_string(DynkinType t);
std::optional<DynkinType> parse_dynkin_type(std::string_view s);

struct Component {
  DynkinType type = DynkinType::A;
  std::size_t rank = 1;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Ordered simple components plus the rank of the central torus.
struct GroupDescriptor {
  std::vector<Component> components;
  std::size_t torus_rank = 0;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

using RootIndex = std::size_t;
using RootSet = std::set<RootIndex>;
using Character = ZVector;
using Functional = QVector;

/// Cartan matrix of a simple type with entries <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const Component& c);

/// Throws DomainError for an invalid (type, rank) pair.
void check_component(const Component& c);

/// A standard Levi subgroup of a reductive group given by a descriptor. The
/// full group is the Levi subgroup for the set of all simple roots.
class ReductiveGroup {
 public:
  ReductiveGroup() = default;
  explicit ReductiveGroup(GroupDescriptor descriptor);

  /// The standard Levi subgroup generated by T and the root subgroups of S
  /// (and their negatives). S must consist of simple roots of this group.
  ReductiveGroup levi(const RootSet& s) const;

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  bool is_proper_levi() const noexcept { return active_.size() != total_simple_; }

  /// Rank of the character lattice X(T).
  std::size_t character_rank() const noexcept { return character_rank_; }
  /// Rank of the central torus of this group.
  std::size_t central_torus_rank() const noexcept { return character_rank_ - active_.size(); }
  std::size_t semisimple_rank() const noexcept { return active_.size(); }

  /// Simple roots of this group (global indices, ascending).
  const RootSet& simple_roots() const noexcept { return active_; }
  /// Number of simple roots of the ambient descriptor.
  std::size_t ambient_simple_count() const noexcept { return total_simple_; }
  bool is_simple_root(RootIndex i) const { return active_.count(i) != 0; }

  /// The simple root in fundamental-weight coordinates. Throws DomainError
  /// when i is not a simple root of this group.
  Character simple_root(RootIndex i) const;
  /// The coroot as a functional on X(T) (x) Q.
  Functional coroot(RootIndex i) const;
  /// <alpha_i, alpha_j^vee> for ambient indices.
  int cartan(RootIndex i, RootIndex j) const;
  /// Pairing of a character with the coroot of alpha_i.
  Integer pair_with_coroot(std::span<const Integer> chi, RootIndex i) const;

  /// "c{component}.a{index}" with a 1-based index.
  std::string label(RootIndex i) const;
  /// Resolves a label to an ambient index.
  std::optional<RootIndex> find_label(std::string_view label) const;

  std::size_t positive_root_count(const RootSet& s) const;
  std::size_t dim() const;
  std::size_t dim_borel() const;
  /// Dimension of the standard parabolic B * <P_alpha : alpha in s>.
  std::size_t dim_parabolic(const RootSet& s) const;

  /// Rational coefficients of gamma in the simple roots of this group, or
  /// nullopt if gamma is outside their rational span.
  std::optional<QVector> root_coefficients(std::span<const Rational> gamma) const;
  std::optional<QVector> root_coefficients(std::span<const Integer> gamma) const;

  /// Supp(gamma); throws NotInRootSpanError.
  RootSet support(std::span<const Rational> gamma) const;
  /// gamma is an integer combination of the simple roots (gamma in Lambda(g)).
  bool in_root_lattice(std::span<const Integer> gamma) const;
  /// gamma lies in the rational span of the given simple roots.
  bool in_rational_span(std::span<const Integer> gamma, const RootSet& s) const;

  /// Ordered subsets of simple roots forming a diagram of the target type
  /// with the target's numbering. Only B_k (k >= 2) and G2 are supported.
  std::vector<std::vector<RootIndex>> find_subdiagrams(const Component& target) const;

  friend bool operator==(const ReductiveGroup& a, const ReductiveGroup& b) {
    return a.descriptor_ == b.descriptor_ && a.active_ == b.active_;
  }

 private:
  struct Location {
    std::size_t component;
    std::size_t local;
  };
  Location locate(RootIndex i) const;
  void check_root(RootIndex i) const;

  GroupDescriptor descriptor_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::vector<int>>> cartans_;
  std::size_t total_simple_ = 0;
  std::size_t character_rank_ = 0;
  RootSet active_;
};

}  // namespace sph
