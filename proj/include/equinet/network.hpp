#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "equinet/group.hpp"
#include "equinet/nonlinearity.hpp"
#include "equinet/repr.hpp"

namespace equinet {

struct NetworkSpec {
  std::string name;
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, 0-based
  std::vector<GroupElement> symmetry;      // declared generators of Gamma (x Z2)
  Nonlinearity nonlinearity = Nonlinearity::cubic();

  // Throws ValidationError on self-loops, duplicates or bad indices.
  void validate() const;
  // Gamma x Z2: declared generators plus the antipode.
  std::shared_ptr<const FiniteGroup> symmetry_group() const;
};

// Graph presets: "chain<n>", "cycle<n>", "octahedron" (optionally with a
// "preset:" prefix).
bool is_network_preset(const std::string& name);
NetworkSpec network_preset(const std::string& name);

// Delta = A - D.
Eigen::MatrixXd build_laplacian(const NetworkSpec& spec);

struct EquivarianceCheck {
  bool ok = true;
  int offending_generator = -1;
  std::string message;
};
EquivarianceCheck verify_equivariance(const NetworkSpec& spec, const Eigen::MatrixXd& laplacian);

struct Eigenspace {
  double mu = 0.0;
  double omega = 0.0;
  int dim = 0;
  Eigen::MatrixXd basis;                      // n x dim, orthonormal
  std::vector<IsotypicalMultiplicity> labels;  // nonzero multiplicities only
  bool accidental = false;                    // more than one irrep
};

// Eigenspaces ordered by descending mu: index 0 is the Goldstone space.
struct SpectralData {
  std::vector<Eigenspace> spaces;
  double spectral_norm = 0.0;
};

SpectralData spectral_decompose(const Eigen::MatrixXd& laplacian, const IsotypicalDecomposition& decomp,
                                double relative_tol = 1e-9);

}  // namespace equinet
