#include <gtest/gtest.h>

#include <map>

#include "equinet/error.hpp"
#include "equinet/lattice.hpp"
#include "equinet/repr.hpp"
#include "oracles.hpp"

using namespace equinet;

namespace {

std::shared_ptr<const FiniteGroup> make(int degree, std::vector<GroupElement> gens) {
  return std::make_shared<const FiniteGroup>(close_generators(degree, gens));
}

std::shared_ptr<const FiniteGroup> preset(const std::string& name) {
  const GroupPreset p = group_preset(name);
  return make(p.degree, p.generators);
}

std::shared_ptr<const FiniteGroup> s4() {
  return make(4, {GroupElement{{1, 2, 3, 0}, 1}, GroupElement{{1, 0, 2, 3}, 1}});
}

// Class counts and (order, normalizer order) multisets must match brute force.
void compare_with_oracle(const std::shared_ptr<const FiniteGroup>& G) {
  const auto lat = subgroup_lattice(G);
  const auto brute = oracle::subgroup_classes(*G);
  ASSERT_EQ(lat->size(), static_cast<int>(brute.size()));
  std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> a, b;
  for (const auto& c : lat->classes())
    a.insert({static_cast<std::size_t>(c.order), static_cast<std::size_t>(c.normalizer_order),
              static_cast<std::size_t>(c.conjugate_count)});
  for (const auto& cls : brute) b.insert({cls[0].size(), oracle::normalizer_order(*G, cls[0]), cls.size()});
  EXPECT_EQ(a, b);
}

}  // namespace

TEST(Lattice, Z2HasTwoClasses) {
  const auto lat = subgroup_lattice(make(1, {GroupElement{{0}, -1}}));
  ASSERT_EQ(lat->size(), 2);
  EXPECT_EQ(lat->n(lat->bottom(), lat->top()), 1);
}

TEST(Lattice, S4HasElevenClasses) {
  compare_with_oracle(s4());
  EXPECT_EQ(subgroup_lattice(s4())->size(), 11);
}

TEST(Lattice, MatchesBruteForceOnPresets) {
  for (const char* name : {"chain4", "cycle4", "cycle6", "octahedron"}) {
    SCOPED_TRACE(name);
    compare_with_oracle(preset(name));
  }
}

TEST(Lattice, OctahedronHasThirtyThreeNamedClasses) {
  const auto lat = subgroup_lattice(preset("octahedron"));
  EXPECT_EQ(lat->size(), 33);
  for (const char* name : {"S4xZ2", "S4", "S4^-", "D4^d", "D4^dhat", "D4^z", "D4", "D3^z", "D3", "D2^d", "V4",
                           "Z2^-", "D1^z", "D1", "Z1"})
    EXPECT_GE(lat->find(name), 0) << name;
  EXPECT_EQ(lat->cls(lat->find("S4^-")).order, 24);
  EXPECT_EQ(lat->cls(lat->find("D4^dhat")).order, 8);
}

TEST(Lattice, WeylOrdersAndNumbers) {
  for (const char* name : {"chain4", "cycle4", "octahedron"}) {
    const auto lat = subgroup_lattice(preset(name));
    for (const auto& c : lat->classes()) {
      EXPECT_EQ(c.normalizer_order % c.order, 0);
      EXPECT_EQ(c.weyl_order * c.order, c.normalizer_order);
      EXPECT_EQ(lat->n(c.class_id, c.class_id), 1);
      EXPECT_EQ(lat->n(c.class_id, lat->top()), 1);
      for (int h = 0; h < lat->size(); ++h)
        if (lat->is_subconjugate(c.class_id, h)) EXPECT_GE(lat->n(c.class_id, h), 1);
    }
  }
}

TEST(Lattice, OrderIsAPartialOrder) {
  const auto lat = subgroup_lattice(preset("octahedron"));
  const int n = lat->size();
  for (int a = 0; a < n; ++a) {
    EXPECT_TRUE(lat->is_subconjugate(lat->bottom(), a));
    if (a != lat->top()) EXPECT_FALSE(lat->is_subconjugate(lat->top(), a));
    for (int b = 0; b < n; ++b) {
      if (a != b && lat->is_subconjugate(a, b)) EXPECT_FALSE(lat->is_subconjugate(b, a));
      for (int c = 0; c < n; ++c)
        if (lat->is_subconjugate(a, b) && lat->is_subconjugate(b, c)) EXPECT_TRUE(lat->is_subconjugate(a, c));
    }
  }
}

TEST(Lattice, S4Z3BelowD3) {
  const auto lat = subgroup_lattice(s4());
  int z3 = -1, d3 = -1;
  for (const auto& c : lat->classes()) {
    if (c.order == 3) z3 = c.class_id;
    if (c.order == 6) d3 = c.class_id;
  }
  ASSERT_GE(z3, 0);
  ASSERT_GE(d3, 0);
  EXPECT_TRUE(lat->is_subconjugate(z3, d3));
  EXPECT_FALSE(lat->is_subconjugate(d3, z3));
}

TEST(Lattice, UnknownClassRejected) {
  const auto lat = subgroup_lattice(preset("chain4"));
  EXPECT_THROW(lat->cls(99), ValidationError);
  EXPECT_THROW(lat->is_subconjugate(0, -1), ValidationError);
}

TEST(Lattice, ConjugacyClassesStableUnderGenerators) {
  const auto G = preset("octahedron");
  const auto lat = subgroup_lattice(G);
  for (const auto& c : lat->classes())
    for (const auto& H : lat->conjugates(c.class_id))
      for (const auto& g : G->generators()) {
        const std::size_t gi = G->index_of(g);
        std::vector<std::size_t> gens;
        for (std::size_t h : H.members()) gens.push_back(G->multiply(G->multiply(gi, h), G->inverse(gi)));
        EXPECT_EQ(lat->class_of(lat->closure(gens)), c.class_id);
      }
}

TEST(Lattice, FixedPointDimensions) {
  const auto oct = subgroup_lattice(preset("octahedron"));
  EXPECT_EQ(fixed_point_dimension(*oct, oct->bottom()), 24);
  EXPECT_EQ(fixed_point_dimension(*oct, oct->top()), 0);
  const auto chain = subgroup_lattice(preset("chain4"));
  EXPECT_EQ(chain->cls(chain->find("Z2")).order, 2);
  EXPECT_EQ(fixed_point_dimension(*chain, chain->find("Z2")), 2);
}

TEST(Lattice, DeterministicClassIds) {
  const auto a = subgroup_lattice(preset("octahedron"));
  const auto b = subgroup_lattice(preset("octahedron"));
  for (int i = 0; i < a->size(); ++i) {
    EXPECT_EQ(a->cls(i).name, b->cls(i).name);
    EXPECT_EQ(a->cls(i).representative, b->cls(i).representative);
  }
}
