#include <gtest/gtest.h>

#include <algorithm>

#include "equinet/error.hpp"
#include "equinet/network.hpp"
#include "equinet/repr.hpp"

using namespace equinet;

namespace {

std::shared_ptr<const FiniteGroup> preset(const std::string& name) {
  const GroupPreset p = group_preset(name);
  return std::make_shared<const FiniteGroup>(close_generators(p.degree, p.generators));
}

}  // namespace

TEST(Repr, OctahedronComponents) {
  const auto d = isotypical_decompose(preset("octahedron"));
  std::vector<std::pair<int, int>> dm;
  for (const auto& c : d.components) {
    dm.emplace_back(c.dim, c.multiplicity);
    EXPECT_TRUE(c.antipodal);
  }
  std::sort(dm.begin(), dm.end());
  EXPECT_EQ(dm, (std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {2, 2}, {3, 3}, {3, 3}}));
}

TEST(Repr, ProjectorsResolveIdentityAndCommute) {
  for (const char* name : {"chain4", "cycle4", "cycle6", "octahedron"}) {
    const auto G = preset(name);
    const auto d = isotypical_decompose(G);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d.dimension, d.dimension);
    for (const auto& c : d.components) {
      const auto& P = c.projector;
      EXPECT_LT((P * P - P).norm(), 1e-10) << name;
      EXPECT_LT((P - P.transpose()).norm(), 1e-10) << name;
      EXPECT_NEAR(P.trace(), c.dim * c.multiplicity, 1e-9) << name;
      for (const auto& g : G->elements()) {
        const Eigen::MatrixXd A = action_matrix(g);
        EXPECT_LT((A * P - P * A).norm(), 1e-10);
      }
      sum += P;
    }
    EXPECT_LT((sum - Eigen::MatrixXd::Identity(d.dimension, d.dimension)).norm(), 1e-10) << name;
  }
}

TEST(Repr, CharactersAreOrthonormalClassFunctions) {
  const auto G = preset("octahedron");
  const auto d = isotypical_decompose(G);
  for (const auto& a : d.components) {
    for (const auto& cls : G->element_classes())
      for (std::size_t g : cls) EXPECT_NEAR(d.character(a.irrep_id, g), d.character(a.irrep_id, cls[0]), 1e-9);
    EXPECT_NEAR(d.character(a.irrep_id, G->identity_index()), a.dim, 1e-9);
    for (const auto& b : d.components) {
      double s = 0;
      for (std::size_t g = 0; g < G->order(); ++g)
        s += d.character(a.irrep_id, g) * d.character(b.irrep_id, g);
      EXPECT_NEAR(s / G->order(), a.irrep_id == b.irrep_id ? 1.0 : 0.0, 1e-9);
    }
  }
}

TEST(Repr, CycleCharactersAreIntegers) {
  const auto G = preset("cycle4");
  const auto d = isotypical_decompose(G);
  ASSERT_EQ(d.components.size(), 3u);
  for (const auto& c : d.components)
    for (std::size_t g = 0; g < G->order(); ++g) {
      const double x = d.character(c.irrep_id, g);
      EXPECT_NEAR(x, std::round(x), 1e-9);
    }
  EXPECT_NEAR(d.character(d.components[0].irrep_id, G->antipode_index()), -1.0, 1e-12);
}

TEST(Repr, IndependentOfSeed) {
  const auto G = preset("octahedron");
  const auto a = isotypical_decompose(G, {.seed = 1});
  const auto b = isotypical_decompose(G, {.seed = 987654321});
  ASSERT_EQ(a.components.size(), b.components.size());
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    EXPECT_EQ(a.components[i].label, b.components[i].label);
    EXPECT_LT((a.components[i].projector - b.components[i].projector).norm(), 1e-9);
  }
}

TEST(Repr, ComponentCharacterMatchesTable) {
  const auto G = preset("cycle4");
  const auto d = isotypical_decompose(G);
  for (const auto& c : d.components)
    for (std::size_t g = 0; g < G->order(); ++g)
      EXPECT_NEAR(component_character(d, c.irrep_id, G->element(g)), d.character(c.irrep_id, g), 1e-9);
}

TEST(Repr, EigenMultiplicityOfWholeSpace) {
  const auto G = preset("octahedron");
  const auto d = isotypical_decompose(G);
  const auto labels = eigen_multiplicity(d, Eigen::MatrixXd::Identity(24, 24));
  int total = 0;
  for (const auto& l : labels) total += l.multiplicity * d.component(l.irrep_id).dim;
  EXPECT_EQ(total, 24);
  for (const auto& l : labels) EXPECT_EQ(l.multiplicity, d.component(l.irrep_id).multiplicity);
}

TEST(Repr, EigenMultiplicityRejectsNonInvariantSubspace) {
  const auto d = isotypical_decompose(preset("cycle4"));
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(4, 1);
  v(0, 0) = 1.0;
  EXPECT_THROW(eigen_multiplicity(d, v), std::runtime_error);
}

TEST(Repr, FixedDimensionsOfIrreps) {
  const auto G = preset("octahedron");
  const auto lat = subgroup_lattice(G);
  const auto d = isotypical_decompose(G);
  for (const auto& c : d.components) {
    const auto dims = fixed_dimensions(d, c.irrep_id, *lat);
    EXPECT_EQ(dims[lat->bottom()], c.dim);
    EXPECT_EQ(dims[lat->top()], 0);  // antipode acts as -1
    // Larger subgroups fix less.
    for (int h = 0; h < lat->size(); ++h)
      for (int k = 0; k < lat->size(); ++k)
        if (lat->is_subconjugate(h, k)) EXPECT_GE(dims[h], dims[k]);
  }
}
