#include <gtest/gtest.h>

#include <random>

#include "equinet/burnside.hpp"
#include "equinet/error.hpp"
#include "equinet/invariant.hpp"
#include "oracles.hpp"

using namespace equinet;

namespace {

std::shared_ptr<const BurnsideRing> ring_of(int degree, std::vector<GroupElement> gens) {
  auto G = std::make_shared<const FiniteGroup>(close_generators(degree, gens));
  return std::make_shared<const BurnsideRing>(subgroup_lattice(G));
}

std::shared_ptr<const BurnsideRing> ring_of(const std::string& preset) {
  const GroupPreset p = group_preset(preset);
  return ring_of(p.degree, p.generators);
}

std::shared_ptr<const BurnsideRing> z2() { return ring_of(1, {GroupElement{{0}, -1}}); }
std::shared_ptr<const BurnsideRing> klein() {
  return ring_of(2, {GroupElement{{1, 0}, 1}, GroupElement{{0, 1}, -1}});
}
std::shared_ptr<const BurnsideRing> d4() {
  return ring_of(4, {GroupElement{{1, 2, 3, 0}, 1}, GroupElement{{0, 3, 2, 1}, 1}});
}
std::shared_ptr<const BurnsideRing> s4() {
  return ring_of(4, {GroupElement{{1, 2, 3, 0}, 1}, GroupElement{{1, 0, 2, 3}, 1}});
}

// phi_L(a) = sum_H a_H |(G/H)^L|, computed by brute force.
long mark_of(const BurnsideRing& R, int L, const BurnsideElement& a) {
  const auto& lat = R.lattice();
  long total = 0;
  for (const auto& [H, c] : a.coeffs())
    total += c * oracle::mark(lat.group(), lat.cls(L).representative, lat.cls(H).representative);
  return total;
}

BurnsideElement random_element(const BurnsideRing& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  BurnsideElement a = R.zero();
  for (int h = 0; h < R.lattice().size(); ++h) a.add(h, coeff(rng));
  return a;
}

}  // namespace

TEST(Burnside, Z2GeneratorSquares) {
  const auto R = z2();
  const int bottom = R->lattice().bottom();
  EXPECT_EQ(R->generator_product(bottom, bottom), R->generator(bottom, 2));
  EXPECT_EQ(R->multiply(R->unit(), R->generator(bottom)), R->generator(bottom));
}

TEST(Burnside, KleinDistinctOrderTwoProduct) {
  const auto R = klein();
  const auto& lat = R->lattice();
  ASSERT_EQ(lat.size(), 5);
  std::vector<int> order2;
  for (const auto& c : lat.classes())
    if (c.order == 2) order2.push_back(c.class_id);
  ASSERT_EQ(order2.size(), 3u);
  EXPECT_EQ(R->generator_product(order2[0], order2[1]), R->generator(lat.bottom()));
  EXPECT_EQ(R->generator_product(order2[0], order2[0]), R->generator(order2[0], 2));
}

TEST(Burnside, RecurrenceMatchesOrbitOracle) {
  for (const auto& R : {z2(), klein(), d4(), s4(), ring_of("cycle4"), ring_of("octahedron")}) {
    const int n = R->lattice().size();
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        ASSERT_EQ(R->generator_product(h, k), R->generator_product_oracle(h, k)) << h << "," << k;
  }
}

TEST(Burnside, MarksAreMultiplicative) {
  for (const auto& R : {d4(), s4(), ring_of("cycle4")}) {
    const int n = R->lattice().size();
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const BurnsideElement a = R->generator(h), b = R->generator(k), ab = R->multiply(a, b);
        for (int l = 0; l < n; ++l) EXPECT_EQ(mark_of(*R, l, ab), mark_of(*R, l, a) * mark_of(*R, l, b));
      }
  }
}

TEST(Burnside, RingAxiomsOnRandomElements) {
  const auto R = ring_of("octahedron");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(*R, rng), b = random_element(*R, rng), c = random_element(*R, rng);
    EXPECT_EQ(R->multiply(a, b), R->multiply(b, a));
    EXPECT_EQ(R->multiply(R->multiply(a, b), c), R->multiply(a, R->multiply(b, c)));
    EXPECT_EQ(R->multiply(a, b + c), R->multiply(a, b) + R->multiply(a, c));
    EXPECT_EQ(R->multiply(R->unit(), a), a);
  }
}

TEST(Burnside, ZeroCoefficientsDropped) {
  const auto R = z2();
  BurnsideElement a = R->generator(0, 3);
  a.add(0, -3);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(R->zero().to_string(), "0");
}

TEST(Burnside, MixingLatticesRejected) {
  const auto a = z2(), b = klein();
  EXPECT_THROW(a->multiply(a->unit(), b->unit()), ValidationError);
}

TEST(BasicDegree, MarksAreSigns) {
  const NetworkModel model = analyze_network(network_preset("octahedron"));
  const auto& R = *model.ring;
  ASSERT_EQ(model.degrees.size(), 5u);
  for (const auto& [id, deg] : model.degrees) {
    const auto dims = fixed_dimensions(model.decomposition, id, R.lattice());
    for (int l = 0; l < R.lattice().size(); ++l)
      EXPECT_EQ(mark_of(R, l, deg.value), dims[l] % 2 ? -1 : 1) << "irrep " << id << " class " << l;
  }
}

TEST(BasicDegree, DegreesAreUnits) {
  for (const char* net : {"chain4", "cycle4", "octahedron"}) {
    const NetworkModel model = analyze_network(network_preset(net));
    const auto& R = *model.ring;
    for (const auto& [id, deg] : model.degrees) {
      EXPECT_EQ(R.multiply(deg.value, deg.value), R.unit()) << net << " " << id;
      EXPECT_EQ(std::abs(deg.value.coeff(R.lattice().top())), 1);
    }
  }
}

TEST(BasicDegree, TrivialActionGivesMinusUnit) {
  const auto R = z2();
  // Antipode acts as -1 on R^1: only the bottom class fixes a line.
  const BasicDegree d = R->basic_degree(0, {0, 1});
  EXPECT_EQ(d.value, R->generator(0) - R->generator(1));
  // With the whole group fixing the line the degree is -(G).
  EXPECT_EQ(R->basic_degree(0, {1, 1}).value, R->generator(0, -1));
}

TEST(BasicDegree, ParityProductCancelsPairs) {
  const NetworkModel model = analyze_network(network_preset("cycle4"));
  const auto& R = *model.ring;
  const auto& a = model.degrees.begin()->second.value;
  const auto& b = std::next(model.degrees.begin())->second.value;
  EXPECT_EQ(R.parity_product({a, a, b}), b);
  EXPECT_EQ(R.parity_product({}), R.unit());
}

TEST(MaximalOrbitTypes, OctahedronFirstDegree) {
  const NetworkModel model = analyze_network(network_preset("octahedron"));
  const auto& lat = *model.lattice;
  for (const auto& [id, deg] : model.degrees) {
    const auto psi = maximal_orbit_types(lat, {deg.value});
    for (int h : psi) {
      EXPECT_NE(deg.value.coeff(h), 0);
      for (int k : psi)
        if (h != k) EXPECT_FALSE(lat.is_subconjugate(h, k));
    }
  }
}
