#include <gtest/gtest.h>

#include <numbers>

#include "equinet/error.hpp"
#include "equinet/orbit.hpp"
#include "oracles.hpp"

using namespace equinet;

namespace {

constexpr double kPi = std::numbers::pi;

struct Pair {
  NetworkModel model = analyze_network(network_preset("chain2"));
  ReductionChoice red = ReductionChoice::parse("z2d");
  // Antisymmetric eigenspace (mu = -2).
  FourierState seed(double lambda, std::optional<double> amp = std::nullopt, int N = 32) const {
    return seed_state(model.spectrum, 1, 1, lambda, red, N, model.spec.nonlinearity, 0, amp);
  }
};

double first_amplitude(const FourierState& s) { return std::abs(s.sine_coeff(1, 0)); }

}  // namespace

TEST(Residual, ZeroStateIsExact) {
  Pair p;
  const auto r = residual(FourierState::zero(2, 0.9, p.red, 16), p.model.laplacian, p.model.spec.nonlinearity);
  EXPECT_EQ(r.max_abs_coeff(), 0.0);
}

TEST(Residual, LinearResonance) {
  // With g = 0, v sin(kt) solves the equation exactly at lambda = k / omega.
  Pair p;
  const double lam = 1.0 / std::sqrt(2.0);
  FourierState s = FourierState::zero(2, lam, p.red, 8);
  s.sine(0, 0) = 0.3;
  s.sine(0, 1) = -0.3;
  EXPECT_LT(residual(s, p.model.laplacian, Nonlinearity::none()).max_abs_coeff(), 1e-14);
  s.lambda = 0.8;
  EXPECT_GT(residual(s, p.model.laplacian, Nonlinearity::none()).max_abs_coeff(), 1e-3);
}

TEST(Residual, OneModeDuffingBalance) {
  // x = a (sin t, -sin t): r_1 = (-1 + 2 lambda^2) a - (3/4) lambda^2 a^3 per vertex.
  Pair p;
  const double lam = 0.9, a = 0.4;
  FourierState s = FourierState::zero(2, lam, p.red, 8);
  s.sine(0, 0) = a;
  s.sine(0, 1) = -a;
  const auto r = residual(s, p.model.laplacian, p.model.spec.nonlinearity);
  const double want = (-1.0 + 2.0 * lam * lam) * a - 0.75 * lam * lam * a * a * a;
  EXPECT_NEAR(r.sine(0, 0), want, 1e-14);
  EXPECT_NEAR(r.sine(0, 1), -want, 1e-14);
  EXPECT_NEAR(r.sine(1, 0), 0.25 * lam * lam * a * a * a, 1e-14);  // sin^3 t feeds sin 3t
}

TEST(Collocation, SizeAvoidsAliasing) {
  EXPECT_GT(collocation_size(16, Nonlinearity::cubic()), 3 * 16);
  EXPECT_GT(collocation_size(16, Nonlinearity::cubic_quintic()), 5 * 16);
  EXPECT_GE(collocation_size(16, Nonlinearity::none()), 4 * 16);
}

TEST(Jacobian, AnalyticMatchesFiniteDifference) {
  const NetworkModel m = analyze_network(network_preset("cycle4"));
  const auto red = ReductionChoice::parse("z2d");
  FourierState s = seed_state(m.spectrum, 1, 1, 0.9, red, 8, m.spec.nonlinearity, 0, 0.7);
  s.cosine(1, 2) = 0.05;
  s.sine(2, 3) = -0.02;
  const auto A = jacobian_analytic(s, m.laplacian, m.spec.nonlinearity);
  const auto F = jacobian_fd(s, m.laplacian, m.spec.nonlinearity);
  EXPECT_LT((A - F).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Pack, RoundTrip) {
  const NetworkModel m = analyze_network(network_preset("cycle4"));
  FourierState s = seed_state(m.spectrum, 1, 1, 0.9, ReductionChoice::parse("z2d"), 8, m.spec.nonlinearity);
  s.cosine(2, 1) = 0.3;
  const FourierState t = unpack(s, pack(s));
  EXPECT_EQ(t.sine, s.sine);
  EXPECT_EQ(t.cosine, s.cosine);
}

TEST(Newton, PairMatchesShootingOracle) {
  Pair p;
  const double lam = 0.8;
  const auto res = newton_solve(p.seed(lam), p.model.laplacian, p.model.spec.nonlinearity);
  EXPECT_LT(res.residual_norm, 1e-10);
  const oracle::Duffing duff{lam};
  const double v = duff.shoot(0.3, 1.0);
  EXPECT_NEAR(first_amplitude(res.state), std::abs(duff.first_harmonic(v)), 1e-6);
  // Antisymmetric: x_1 = -x_0.
  EXPECT_NEAR(res.state.sine_coeff(1, 0), -res.state.sine_coeff(1, 1), 1e-10);
}

TEST(Newton, FiniteDifferenceJacobianConverges) {
  Pair p;
  const auto a = newton_solve(p.seed(0.8), p.model.laplacian, p.model.spec.nonlinearity);
  const auto b = newton_solve(p.seed(0.8), p.model.laplacian, p.model.spec.nonlinearity,
                              {.analytic_jacobian = false});
  EXPECT_NEAR(first_amplitude(a.state), first_amplitude(b.state), 1e-8);
}

TEST(Newton, ZeroSeedCollapses) {
  Pair p;
  try {
    newton_solve(FourierState::zero(2, 0.8, p.red, 16), p.model.laplacian, p.model.spec.nonlinearity);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("collapsed"), std::string::npos);
  }
}

TEST(Newton, RejectsBadTolerance) {
  Pair p;
  EXPECT_THROW(newton_solve(p.seed(0.8), p.model.laplacian, p.model.spec.nonlinearity, {.tol = 0.0}),
               ValidationError);
}

TEST(Newton, TruncationConverged) {
  Pair p;
  const auto& nl = p.model.spec.nonlinearity;
  const auto res = newton_solve(p.seed(0.8), p.model.laplacian, nl);
  const auto bigger = res.state.resized(64);
  EXPECT_LT(residual(bigger, p.model.laplacian, nl).max_abs_coeff(), 100 * 1e-10);
}

TEST(Newton, SineReductionStartsAtZero) {
  const NetworkModel m = analyze_network(network_preset("chain2"));
  const auto red = ReductionChoice::parse("dmz:1");
  const auto s = seed_state(m.spectrum, 1, 1, 0.8, red, 16, m.spec.nonlinearity);
  const auto res = newton_solve(s, m.laplacian, m.spec.nonlinearity);
  EXPECT_LT(res.state.evaluate(0.0).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(res.state.cosine.cwiseAbs().sum(), 0.0);
}

TEST(Seed, AmplitudeFromGalerkinBalance) {
  Pair p;
  const double lam = 0.8;
  const double a = std::sqrt(4.0 * (2 * lam * lam - 1) / (3 * lam * lam));
  EXPECT_NEAR(first_amplitude(p.seed(lam)), a, 1e-12);
  EXPECT_NEAR(first_amplitude(p.seed(lam, 0.25)), 0.25, 1e-15);
  EXPECT_THROW(seed_state(p.model.spectrum, 7, 1, lam, p.red, 16, p.model.spec.nonlinearity), ValidationError);
  EXPECT_THROW(seed_state(p.model.spectrum, 1, 2, lam, p.red, 16, p.model.spec.nonlinearity), ValidationError);
}

TEST(Symmetry, PairRelationsHold) {
  Pair p;
  const auto res = newton_solve(p.seed(0.8), p.model.laplacian, p.model.spec.nonlinearity);
  auto rel = reduction_relations(p.red, 2, true);
  const auto spatial = spatial_relations({GroupElement{{1, 0}, -1}});
  rel.insert(rel.end(), spatial.begin(), spatial.end());
  const auto rep = verify_symmetry(res.state, rel);
  EXPECT_TRUE(rep.pass);
  for (const auto& r : rep.relations) EXPECT_LT(r.max_violation, 1e-8) << r.description;
  // The antisymmetric orbit is not fixed by the plain swap.
  EXPECT_FALSE(verify_symmetry(res.state, spatial_relations({GroupElement{{1, 0}, 1}})).pass);
}

TEST(Symmetry, D2mdRelations) {
  const NetworkModel m = analyze_network(network_preset("chain2"));
  const auto red = ReductionChoice::parse("d2md:1");
  const auto s = seed_state(m.spectrum, 1, 1, 0.8, red, 16, m.spec.nonlinearity, 0, 0.5);
  const auto res = newton_solve(s, m.laplacian, m.spec.nonlinearity);
  const auto rel = reduction_relations(red, 2, true);
  EXPECT_EQ(rel.size(), 2u);
  EXPECT_TRUE(verify_symmetry(res.state, rel).pass);
}

TEST(Symmetry, IsotropyOfEigenvector) {
  const NetworkModel m = analyze_network(network_preset("chain4"));
  const Eigen::VectorXd v = m.spectrum.spaces[1].basis.col(0);
  const auto gens = isotropy_generators(*m.group, v);
  ASSERT_FALSE(gens.empty());
  for (const auto& g : gens) EXPECT_LT((action_matrix(g) * v - v).norm(), 1e-9);
}

TEST(Apriori, SolutionInsideNagumoBall) {
  Pair p;
  const auto& nl = p.model.spec.nonlinearity;
  const auto res = newton_solve(p.seed(0.8), p.model.laplacian, nl);
  const auto rep = apriori_check(res.state, nl, p.model.laplacian);
  EXPECT_FALSE(rep.warning);
  EXPECT_LT(rep.sup_norm, rep.nagumo_M);
  EXPECT_GE(rep.sup_norm, rep.sup_abs);
  EXPECT_TRUE(nl.verify_nagumo(p.model.laplacian, rep.nagumo_M));

  FourierState huge = res.state;
  huge.sine *= 100.0;
  const auto bad = apriori_check(huge, nl, p.model.laplacian);
  EXPECT_TRUE(bad.warning);
  EXPECT_FALSE(bad.message.empty());
}

TEST(Continuation, AmplitudeGrowsWithLambda) {
  Pair p;
  const auto& nl = p.model.spec.nonlinearity;
  std::vector<double> targets;
  for (int i = 0; i <= 9; ++i) targets.push_back(0.75 + 0.05 * i);
  const auto start = newton_solve(p.seed(0.75), p.model.laplacian, nl).state;
  const auto res = continue_in_lambda(start, p.model.laplacian, nl, targets);
  ASSERT_TRUE(res.complete) << res.message;
  ASSERT_EQ(res.steps.size(), targets.size());
  EXPECT_NEAR(res.last_good_lambda, 1.2, 1e-12);
  for (std::size_t i = 1; i < res.steps.size(); ++i)
    EXPECT_GT(first_amplitude(res.steps[i].state), first_amplitude(res.steps[i - 1].state));
}

TEST(Continuation, CrossingIsFlaggedAndStops) {
  Pair p;
  const auto& nl = p.model.spec.nonlinearity;
  const auto freq = critical_values(p.model.spectrum, p.red, 3.0);
  const auto start = newton_solve(p.seed(0.8), p.model.laplacian, nl).state;
  const auto res = continue_in_lambda(start, p.model.laplacian, nl, {0.75, 0.68}, {}, &freq);
  ASSERT_FALSE(res.steps.empty());
  EXPECT_FALSE(res.steps[0].crossed_critical);
  // Below 1/omega the branch has shrunk to zero.
  EXPECT_FALSE(res.complete);
  EXPECT_NEAR(res.last_good_lambda, 0.75, 1e-12);
  EXPECT_NE(res.message.find("last good lambda"), std::string::npos);
}

TEST(Continuation, EmptyTargets) {
  Pair p;
  const auto res = continue_in_lambda(p.seed(0.8), p.model.laplacian, p.model.spec.nonlinearity, {});
  EXPECT_TRUE(res.complete);
  EXPECT_TRUE(res.steps.empty());
  EXPECT_DOUBLE_EQ(res.last_good_lambda, 0.8);
}

TEST(Nonlinearity, ValuesAndValidation) {
  const auto cq = Nonlinearity::cubic_quintic();
  EXPECT_DOUBLE_EQ(cq.value(2.0), -8.0 + 32.0);
  EXPECT_DOUBLE_EQ(cq.derivative(1.0), -3.0 + 5.0);
  EXPECT_EQ(cq.degree(), 5);
  EXPECT_EQ(Nonlinearity::none().degree(), 1);
  EXPECT_THROW(Nonlinearity::polynomial({{2, 1.0}}), ValidationError);
  EXPECT_THROW(Nonlinearity::polynomial({{3, -1.0}}), ValidationError);
}
