#include <gtest/gtest.h>

#include <algorithm>

#include "build.hpp"
#include "corpus.hpp"
#include "sph/datum.hpp"
#include "sph/equiv.hpp"

using namespace sph;
using namespace testing_support;

namespace {

SphericalDatum fixture(const std::string& name) { return load_fixture(name).datum; }

IntegerLattice lat(std::size_t r, std::vector<ZVector> gens) { return IntegerLattice::spanned_by(r, gens); }

std::size_t merged_count(const SphericalDatum& d) {
  return static_cast<std::size_t>(std::count_if(d.colors().begin(), d.colors().end(), [](const Color& c) {
    return c.label.find('|') != std::string::npos;
  }));
}

}  // namespace

TEST(Localize, KeepsRootsInSpan) {
  auto d = fixture("a1xa1_psi1");
  auto l1 = localize(d, {0});
  EXPECT_EQ(l1.spherical_roots(), d.spherical_roots());
  EXPECT_EQ(l1.colors().size(), 2u);
  EXPECT_EQ(l1.lattice(), d.lattice());
  EXPECT_EQ(l1.group().simple_roots(), (RootSet{0}));

  auto l2 = localize(d, {1});
  EXPECT_TRUE(l2.spherical_roots().empty());
  EXPECT_TRUE(l2.colors().empty());
}

TEST(Localize, DropsTypeTwoRootOutsideSpan) {
  auto d = fixture("so5_so4");
  auto l = localize(d, {0});
  EXPECT_TRUE(l.spherical_roots().empty());
  EXPECT_TRUE(distinguished_roots(l).all().empty());
  EXPECT_EQ(localize(d, {0, 1}), d);
}

TEST(Localize, ColorsKeepValuesAndRestrictMovedBy) {
  auto d = fixture("a2_three_colors");
  auto l = localize(d, {0});
  ASSERT_EQ(l.colors().size(), 2u);
  for (const auto& c : l.colors()) {
    EXPECT_EQ(c.moved_by, (RootSet{0}));
    auto it = std::find_if(d.colors().begin(), d.colors().end(), [&](const Color& o) { return o.label == c.label; });
    ASSERT_NE(it, d.colors().end());
    EXPECT_EQ(it->phi, c.phi);
  }
}

TEST(Localize, RejectsForeignRoots) {
  EXPECT_THROW(localize(fixture("sl2_torus"), {3}), DomainError);
}

TEST(Localize, EverySubsetStaysValid) {
  for (const auto& [name, d] : load_corpus()) {
    const auto& pi = d.group().simple_roots();
    std::vector<RootIndex> all(pi.begin(), pi.end());
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      RootSet s;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask & (1u << i)) s.insert(all[i]);
      EXPECT_NO_THROW(require_valid(localize(d, s), "localization")) << name;
    }
  }
}

TEST(QuotientFinite, SL2TorusToNormalizer) {
  auto d = fixture("sl2_torus");
  auto q = quotient_finite(d, lat(1, {{4}}));
  EXPECT_EQ(q.lattice(), lat(1, {{4}}));
  EXPECT_EQ(q.spherical_roots(), (std::vector<Character>{{4}}));
  ASSERT_EQ(q.colors().size(), 1u);
  EXPECT_EQ(q.colors()[0].phi, (QVector{2}));  // half of <4 pi, alpha^vee>
  EXPECT_EQ(root_type(q, 0), RootType::c);
  EXPECT_TRUE(equivalent(q, fixture("sl2_normalizer")).equivalent);
}

TEST(QuotientFinite, FullLatticeIsIdentity) {
  for (const auto& [name, d] : load_corpus()) EXPECT_EQ(quotient_finite(d, d.lattice()), d) << name;
}

TEST(QuotientFinite, Preconditions) {
  auto d = fixture("sl2_torus");
  EXPECT_THROW(quotient_finite(d, lat(1, {{8}})), DomainError);  // misses Lambda-bar
  EXPECT_THROW(quotient_finite(d, lat(1, {{1}})), DomainError);  // not inside X
  EXPECT_THROW(quotient_finite(d, lat(2, {{4, 0}})), DimensionError);
  auto gl2 = fixture("gl2_central");
  EXPECT_THROW(quotient_finite(gl2, lat(2, {{4, 0}})), DomainError);  // infinite index
}

TEST(QuotientFinite, OddIndexKeepsColors) {
  auto d = fixture("sl2t_x_sl3so3");
  auto q = quotient_finite(d, lat(3, {{2, 0, 0}, {0, 4, -2}, {0, -2, 4}}));
  EXPECT_EQ(q.colors().size(), d.colors().size());
  EXPECT_EQ(merged_count(q), 0u);
  auto s = fixture("sl3_so3");
  auto qs = quotient_finite(s, lat(2, {{4, -2}, {-2, 4}}));
  EXPECT_EQ(qs.colors().size(), 2u);
}

TEST(QuotientFinite, EvenIndexMergesThePair) {
  auto d = fixture("sl2t_x_sl3so3");
  auto q = quotient_finite(d, lat(3, {{4, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(q.colors().size(), 3u);
  EXPECT_EQ(merged_count(q), 1u);
  EXPECT_EQ(root_type(q, 0), RootType::c);
}

TEST(QuotientFinite, CentralTorusPair) {
  auto d = fixture("gl2_central");
  auto merged = quotient_finite(d, lat(2, {{4, 0}, {0, 1}}));
  EXPECT_EQ(merged.colors().size(), 1u);
  auto kept = quotient_finite(d, lat(2, {{2, 0}, {0, 2}}));
  EXPECT_EQ(kept.colors().size(), 2u);
  auto twisted = quotient_finite(d, lat(2, {{4, 0}, {2, 1}}));
  EXPECT_EQ(twisted.colors().size(), 1u);
}

TEST(Wonderfulization, IdentityOnWonderfulData) {
  for (const auto& [name, d] : load_corpus())
    if (is_wonderful(d)) EXPECT_EQ(wonderfulization(d), d) << name;
}

TEST(Wonderfulization, RankDrop) {
  auto d = fixture("gl2_central");
  auto w = wonderfulization(d);
  EXPECT_EQ(w.lattice(), lat(2, {{2, 0}}));
  EXPECT_TRUE(is_wonderful(w));
  EXPECT_EQ(w.colors().size(), 2u);
  EXPECT_EQ(w.colors()[0].phi, (QVector{1}));
}

TEST(Wonderfulization, FiniteIndexDoesNotMerge) {
  auto d = fixture("sl3_so3");
  auto w = wonderfulization(d);
  EXPECT_EQ(w.lattice(), lat(2, {{2, 2}, {0, 6}}));
  EXPECT_EQ(w.colors().size(), 2u);
  auto e = fixture("sl2t_x_sl3so3");
  auto we = wonderfulization(e);
  EXPECT_EQ(we.colors().size(), 4u);
  EXPECT_EQ(merged_count(we), 0u);
}

TEST(Wonderfulization, ResultIsAlwaysWonderfulAndValid) {
  for (const auto& [name, d] : load_corpus()) {
    auto w = wonderfulization(d);
    EXPECT_TRUE(is_wonderful(w)) << name;
    EXPECT_TRUE(validate(w).empty()) << name;
    EXPECT_EQ(wonderfulization(w), w) << name;
  }
}

TEST(Wonderfulization, ComposesWithNormalizerQuotient) {
  auto d = fixture("sl2_torus");
  EXPECT_EQ(wonderfulization(d), d);
  auto q = quotient_finite(d, lat(1, {{4}}));
  EXPECT_EQ(wonderfulization(q), q);
}
