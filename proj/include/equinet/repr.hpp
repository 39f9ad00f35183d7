#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "equinet/lattice.hpp"

namespace equinet {

struct IrrepComponent {
  int irrep_id = 0;
  std::string label;  // "V3-" etc.
  int dim = 0;
  int multiplicity = 0;
  bool antipodal = false;  // (id,-1) acts as -1
  Eigen::MatrixXd projector;
  std::vector<double> character;  // indexed by element conjugacy class
};

struct ReprOptions {
  std::uint64_t seed = 20240101;
  double character_tol = 1e-8;
  double integrality_tol = 1e-6;
};

class IsotypicalDecomposition {
 public:
  std::shared_ptr<const FiniteGroup> group;
  int dimension = 0;
  std::uint64_t seed = 0;
  std::vector<IrrepComponent> components;  // sorted by irrep_id

  const IrrepComponent& component(int irrep_id) const;
  bool has(int irrep_id) const;
  // Character of the irreducible at element index g.
  double character(int irrep_id, std::size_t g) const;
};

// Signed permutation matrix of g on R^n.
Eigen::MatrixXd action_matrix(const GroupElement& g);

IsotypicalDecomposition isotypical_decompose(std::shared_ptr<const FiniteGroup> group,
                                             const ReprOptions& opts = {});

// trace(rho(g) P_i) / m_i
double component_character(const IsotypicalDecomposition& decomp, int irrep_id, const GroupElement& g);

struct IsotypicalMultiplicity {
  double mu = 0.0;
  int irrep_id = 0;
  int multiplicity = 0;
};

// basis: n x k with orthonormal columns spanning an invariant subspace.
std::vector<IsotypicalMultiplicity> eigen_multiplicity(const IsotypicalDecomposition& decomp,
                                                       const Eigen::MatrixXd& basis, double mu = 0.0,
                                                       double integrality_tol = 1e-6);

// dim V^H of the raw signed-permutation action on R^n.
int fixed_point_dimension(const SubgroupLattice& lattice, int class_id, double tol = 1e-6);
// dim of the H-fixed subspace of the irreducible of a component.
int fixed_point_dimension(const IsotypicalDecomposition& decomp, int irrep_id,
                          const SubgroupLattice& lattice, int class_id, double tol = 1e-6);
// One entry per class of the lattice.
std::vector<int> fixed_dimensions(const IsotypicalDecomposition& decomp, int irrep_id,
                                  const SubgroupLattice& lattice);

// Column labels and ordering for a character table; family conventions
// where recognised.
struct CharacterColumn {
  std::size_t element_class = 0;
  std::string label;
};
std::vector<CharacterColumn> character_columns(const FiniteGroup& G);

}  // namespace equinet
