#include <gtest/gtest.h>

#include <numbers>

#include "equinet/error.hpp"
#include "equinet/invariant.hpp"
#include "equinet/network.hpp"

using namespace equinet;

namespace {

SpectralData spectrum_of(const NetworkSpec& spec) {
  const auto L = build_laplacian(spec);
  return spectral_decompose(L, isotypical_decompose(spec.symmetry_group()));
}

}  // namespace

TEST(Network, ChainLaplacian) {
  Eigen::MatrixXd want(4, 4);
  want << -1, 1, 0, 0, 1, -2, 1, 0, 0, 1, -2, 1, 0, 0, 1, -1;
  EXPECT_EQ(build_laplacian(network_preset("chain4")), want);
}

TEST(Network, CycleAndPairLaplacians) {
  Eigen::MatrixXd cyc(4, 4);
  cyc << -2, 1, 0, 1, 1, -2, 1, 0, 0, 1, -2, 1, 1, 0, 1, -2;
  EXPECT_EQ(build_laplacian(network_preset("cycle4")), cyc);
  Eigen::MatrixXd pair(2, 2);
  pair << -1, 1, 1, -1;
  EXPECT_EQ(build_laplacian(network_preset("chain2")), pair);
}

TEST(Network, LaplacianInvariants) {
  for (const char* name : {"chain4", "cycle4", "cycle6", "octahedron"}) {
    const auto L = build_laplacian(network_preset(name));
    EXPECT_LT(L.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12) << name;
    EXPECT_EQ(L, L.transpose()) << name;
    EXPECT_TRUE(verify_equivariance(network_preset(name), L).ok) << name;
  }
}

TEST(Network, WrongSymmetryNamesGenerator) {
  NetworkSpec spec = network_preset("chain4");
  spec.symmetry = {GroupElement{{3, 2, 1, 0}, 1}, GroupElement{{1, 2, 3, 0}, 1}};
  const auto check = verify_equivariance(spec, build_laplacian(spec));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.offending_generator, 1);
  EXPECT_NE(check.message.find("1"), std::string::npos);
  EXPECT_THROW(analyze_network(spec), ValidationError);
}

TEST(Network, MalformedEdgesRejected) {
  NetworkSpec spec = network_preset("chain4");
  spec.edges.push_back({2, 2});
  EXPECT_THROW(spec.validate(), ValidationError);
  spec = network_preset("chain4");
  spec.edges.push_back({0, 1});
  EXPECT_THROW(spec.validate(), ValidationError);
  spec = network_preset("chain4");
  spec.edges.push_back({0, 9});
  EXPECT_THROW(spec.validate(), ValidationError);
}

TEST(Network, ChainSpectrum) {
  const SpectralData s = spectrum_of(network_preset("chain4"));
  ASSERT_EQ(s.spaces.size(), 4u);
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(s.spaces[j].omega, 2.0 * std::sin(j * std::numbers::pi / 8.0), 1e-12);
    EXPECT_EQ(s.spaces[j].dim, 1);
  }
  EXPECT_NEAR(s.spaces[0].mu, 0.0, 1e-12);
}

TEST(Network, CycleSpectrum) {
  const SpectralData s = spectrum_of(network_preset("cycle4"));
  ASSERT_EQ(s.spaces.size(), 3u);
  EXPECT_NEAR(s.spaces[1].mu, -2.0, 1e-12);
  EXPECT_EQ(s.spaces[1].dim, 2);
  EXPECT_NEAR(s.spaces[2].mu, -4.0, 1e-12);
  EXPECT_NEAR(s.spectral_norm, 4.0, 1e-12);
}

TEST(Network, OctahedronSpectrumStructure) {
  const SpectralData s = spectrum_of(network_preset("octahedron"));
  int total = 0;
  for (std::size_t j = 0; j < s.spaces.size(); ++j) {
    const auto& sp = s.spaces[j];
    total += sp.dim;
    if (j > 0) EXPECT_LT(sp.mu, s.spaces[j - 1].mu);
    EXPECT_NEAR(sp.omega * sp.omega, -sp.mu, 1e-9);
    EXPECT_LT((sp.basis.transpose() * sp.basis - Eigen::MatrixXd::Identity(sp.dim, sp.dim)).norm(), 1e-9);
  }
  EXPECT_EQ(total, 24);
  EXPECT_EQ(s.spaces[0].dim, 1);
  EXPECT_NEAR(s.spaces[0].mu, 0.0, 1e-12);
  EXPECT_EQ(s.spaces.size(), 10u);
}

TEST(Network, SpectrumInvariantUnderRelabelling) {
  NetworkSpec a = network_preset("cycle6");
  const std::vector<int> p{3, 5, 0, 2, 4, 1};
  NetworkSpec b = a;
  for (auto& [i, j] : b.edges) {
    i = p[i];
    j = p[j];
    if (i > j) std::swap(i, j);
  }
  for (auto& g : b.symmetry) {
    std::vector<int> q(6);
    for (int i = 0; i < 6; ++i) q[p[i]] = p[g.perm[i]];
    g.perm = q;
  }
  const auto sa = spectrum_of(a), sb = spectrum_of(b);
  ASSERT_EQ(sa.spaces.size(), sb.spaces.size());
  for (std::size_t j = 0; j < sa.spaces.size(); ++j) {
    EXPECT_NEAR(sa.spaces[j].mu, sb.spaces[j].mu, 1e-12);
    EXPECT_EQ(sa.spaces[j].dim, sb.spaces[j].dim);
  }
}
