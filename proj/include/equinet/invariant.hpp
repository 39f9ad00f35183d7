#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "equinet/burnside.hpp"
#include "equinet/network.hpp"

namespace equinet {

enum class ReductionKind { Z2m_d, Dm_z, D2m_d };

struct ReductionChoice {
  ReductionKind kind = ReductionKind::Z2m_d;
  int m = 1;

  // "z2d", "z2d:m", "dmz:m", "d2md:m"
  static ReductionChoice parse(const std::string& text);
  std::string to_string() const;
  bool contains_mode(int k) const;
  bool has_cosine() const { return kind == ReductionKind::Z2m_d; }
  std::vector<int> modes(int k_max) const;
};

// (k^2 + lambda^2 mu) / (1 + k^2)
double xi_eigenvalue(int k, double lambda, double mu);

struct CriticalEntry {
  double value = 0.0;  // k / omega_j
  int k = 0;
  int j = 0;  // eigenspace index
  int irrep_id = 0;
  int multiplicity = 1;
};

struct CriticalPoint {
  double value = 0.0;
  std::vector<CriticalEntry> entries;  // more than one at a resonance
};

struct FrequencyLattice {
  double lambda_max = 0.0;
  std::vector<CriticalEntry> entries;  // ascending
  std::vector<CriticalPoint> points;   // entries merged at coincidences
};

FrequencyLattice critical_values(const SpectralData& spectral, const ReductionChoice& red, double lambda_max);

// Everything derived from a network that the invariant needs.
struct NetworkModel {
  NetworkSpec spec;
  Eigen::MatrixXd laplacian;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::shared_ptr<const BurnsideRing> ring;
  IsotypicalDecomposition decomposition;
  SpectralData spectrum;
  std::map<int, BasicDegree> degrees;  // by irrep id

  const BasicDegree& degree(int irrep_id) const;
};

// Throws ValidationError if the declared symmetry does not commute with the
// Laplacian.
NetworkModel analyze_network(const NetworkSpec& spec, const ReprOptions& opts = {});

struct Factor {
  int irrep_id = 0;
  std::string irrep;
  int count = 0;  // sum of multiplicities of crossed entries
  bool survives = false;
  std::vector<std::pair<int, int>> crossings;  // (j, k)
};

struct GuaranteedType {
  int class_id = 0;
  std::string name;
  std::string structural;
  bool twisted = false;
  std::int64_t coefficient = 0;
  std::vector<int> irrep_ids;
  std::vector<int> modes;
  std::vector<GroupElement> generators;  // generate the representative
  std::string label;
};

struct InvariantReport {
  double lambda_lo = 0.0;
  double lambda_hi = std::numeric_limits<double>::infinity();
  double lambda = 0.0;  // evaluation point
  ReductionChoice reduction;
  std::vector<Factor> factors;
  BurnsideElement product;
  BurnsideElement omega;
  std::vector<GuaranteedType> guaranteed_types;  // maximal orbit types
  std::vector<GuaranteedType> support;           // every nonzero class except the top
  // Classes of the support (other than the trivial group) carrying a negative
  // coefficient in some surviving factor: isotropy types contributed directly
  // by a crossing.
  std::vector<GuaranteedType> primary_types;

  double period_lo() const;
  double period_hi() const;
};

InvariantReport omega_invariant(const NetworkModel& model, const FrequencyLattice& freq,
                                const ReductionChoice& red, double lambda);

std::vector<InvariantReport> classify_period_range(const NetworkModel& model, const ReductionChoice& red,
                                                   double p_lo, double p_hi);

// Generators of the representative of a class, as group elements.
std::vector<GroupElement> class_generators(const SubgroupLattice& lattice, int class_id);

std::string spatio_temporal_label(const ReductionChoice& red, const std::vector<int>& modes,
                                  const std::string& spatial_type);

}  // namespace equinet
