#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "equinet/invariant.hpp"
#include "equinet/nonlinearity.hpp"

namespace equinet {

// x(t) = sum_k sine_k sin(kt) + cosine_k cos(kt) over the reduction's modes
// up to the truncation; rows of sine/cosine are modes, columns vertices.
struct FourierState {
  double lambda = 0.0;
  ReductionChoice reduction;
  int truncation = 32;
  std::vector<int> modes;
  Eigen::MatrixXd sine;
  Eigen::MatrixXd cosine;  // zero unless the reduction has cosines

  static FourierState zero(int vertices, double lambda, const ReductionChoice& red, int truncation);
  int vertices() const { return static_cast<int>(sine.cols()); }
  Eigen::VectorXd evaluate(double t) const;
  double max_abs_coeff() const;
  // Same function, different truncation (padding or cutting modes).
  FourierState resized(int truncation) const;
  // Coefficient of sin(kt) on vertex i (0 if k is not a mode).
  double sine_coeff(int k, int i) const;
};

// Equispaced collocation points; exact for products up to the polynomial
// degree of g.
int collocation_size(int truncation, const Nonlinearity& nl);

// r_k = -k^2 x_k - lambda^2 (k-th coefficient of Delta x + g(x)).
FourierState residual(const FourierState& state, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl,
                      int collocation_points = 0);

// Unknown vector layout: mode-major, then sine/cosine, then vertex.
Eigen::VectorXd pack(const FourierState& state);
FourierState unpack(const FourierState& shape, const Eigen::VectorXd& z);
Eigen::MatrixXd jacobian_analytic(const FourierState& state, const Eigen::MatrixXd& laplacian,
                                  const Nonlinearity& nl);
Eigen::MatrixXd jacobian_fd(const FourierState& state, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl);

struct NewtonOptions {
  double tol = 1e-10;
  int max_iter = 50;
  bool analytic_jacobian = true;
  int phase_vertex = -1;  // -1: the vertex with the largest first-mode amplitude
};

struct NewtonResult {
  FourierState state;
  int iterations = 0;
  double residual_norm = 0.0;
};

// Throws ValidationError("collapsed to trivial solution ...") or
// ValidationError("no convergence ...").
NewtonResult newton_solve(const FourierState& initial, const Eigen::MatrixXd& laplacian, const Nonlinearity& nl,
                          const NewtonOptions& opts = {});

// A * v * sin(kt) with A from the one-mode Galerkin balance; v is column
// `column` of eigenspace j scaled to peak entry +1, so A is the largest
// vertex amplitude. amplitude overrides A when given.
FourierState seed_state(const SpectralData& spectrum, int j, int k, double lambda, const ReductionChoice& red,
                        int truncation, const Nonlinearity& nl, int column = 0,
                        std::optional<double> amplitude = std::nullopt);
double seed_amplitude(double mu, int k, double lambda, const Eigen::VectorXd& v, const Nonlinearity& nl);

// x_{perm[i]}(t) = sign * x_i(s t + shift), s = -1 with time reversal.
struct SymmetryRelation {
  std::string description;
  std::vector<int> perm;
  int sign = 1;
  double time_shift = 0.0;
  bool time_reversal = false;
};

struct RelationResult {
  std::string description;
  double max_violation = 0.0;
  bool pass = false;
};

struct SymmetryReport {
  std::vector<RelationResult> relations;
  bool pass = true;
};

SymmetryReport verify_symmetry(const FourierState& state, const std::vector<SymmetryRelation>& relations,
                               double tol = 1e-8, int grid = 1024);

// Temporal relations of the reduction. With odd_in_time the reversal
// x(-t) = -x(t) is included for Z2m_d as well.
std::vector<SymmetryRelation> reduction_relations(const ReductionChoice& red, int vertices, bool odd_in_time);
// x = sign * gamma x for each generator.
std::vector<SymmetryRelation> spatial_relations(const std::vector<GroupElement>& generators);
// Elements of the group fixing v (up to 1e-9), as relations.
std::vector<GroupElement> isotropy_generators(const FiniteGroup& G, const Eigen::VectorXd& v);

struct AprioriReport {
  double sup_norm = 0.0;  // sup_t |x(t)|
  double sup_abs = 0.0;   // sup_t max_j |x_j(t)|
  double nagumo_M = 0.0;
  bool warning = false;
  std::string message;
};
AprioriReport apriori_check(const FourierState& state, const Nonlinearity& nl, const Eigen::MatrixXd& laplacian);

struct ContinuationStep {
  double lambda = 0.0;
  FourierState state;
  int iterations = 0;
  double residual_norm = 0.0;
  bool crossed_critical = false;
  bool bisected = false;
};

struct ContinuationResult {
  std::vector<ContinuationStep> steps;
  bool complete = true;
  double last_good_lambda = 0.0;
  std::string message;
};

// freq may be null; when given, steps that cross a critical value are
// flagged.
ContinuationResult continue_in_lambda(const FourierState& start, const Eigen::MatrixXd& laplacian,
                                      const Nonlinearity& nl, const std::vector<double>& lambda_targets,
                                      const NewtonOptions& opts = {}, const FrequencyLattice* freq = nullptr);

}  // namespace equinet
