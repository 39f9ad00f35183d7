#include "equinet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "equinet/octahedron.hpp"

namespace equinet {

void NetworkSpec::validate() const {
  if (n <= 0) throw ValidationError("n: vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ValidationError("edges: vertex index out of range in [" + std::to_string(a) + "," +
                            std::to_string(b) + "]");
    if (a == b) throw ValidationError("edges: self-loop at vertex " + std::to_string(a));
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
      throw ValidationError("edges: duplicate edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
  }
  for (const auto& g : symmetry) validate_element(g, n);
}

std::shared_ptr<const FiniteGroup> NetworkSpec::symmetry_group() const {
  return std::make_shared<const FiniteGroup>(close_generators(n, with_antipode(n, symmetry)));
}

bool is_network_preset(const std::string& name) { return is_group_preset(name); }

NetworkSpec network_preset(const std::string& name) {
  GroupPreset gp = group_preset(name);
  NetworkSpec spec;
  spec.n = gp.degree;
  spec.symmetry = gp.generators;
  std::string base = name.rfind("preset:", 0) == 0 ? name.substr(7) : name;
  const bool octa = gp.degree == 24 && (base.find("octahedron") != std::string::npos);
  const bool cycle = !octa && base.find("cycle") != std::string::npos;
  if (octa) {
    spec.name = "truncated-octahedron";
    spec.edges = octahedron_edges();
  } else if (cycle) {
    spec.name = "cycle" + std::to_string(spec.n);
    for (int j = 0; j < spec.n; ++j) spec.edges.emplace_back(std::min(j, (j + 1) % spec.n), std::max(j, (j + 1) % spec.n));
  } else {
    spec.name = "chain" + std::to_string(spec.n);
    for (int j = 0; j + 1 < spec.n; ++j) spec.edges.emplace_back(j, j + 1);
  }
  spec.validate();
  return spec;
}

Eigen::MatrixXd build_laplacian(const NetworkSpec& spec) {
  spec.validate();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(spec.n, spec.n);
  for (const auto& [a, b] : spec.edges) {
    L(a, b) += 1.0;
    L(b, a) += 1.0;
    L(a, a) -= 1.0;
    L(b, b) -= 1.0;
  }
  return L;
}

EquivarianceCheck verify_equivariance(const NetworkSpec& spec, const Eigen::MatrixXd& laplacian) {
  EquivarianceCheck out;
  for (std::size_t k = 0; k < spec.symmetry.size(); ++k) {
    const auto& p = spec.symmetry[k].perm;
    for (int i = 0; i < spec.n && out.ok; ++i)
      for (int j = 0; j < spec.n; ++j)
        if (laplacian(p[i], p[j]) != laplacian(i, j)) {
          out.ok = false;
          out.offending_generator = static_cast<int>(k);
          out.message = "symmetry generator " + std::to_string(k) + " " + to_string(spec.symmetry[k]) +
                        " does not commute with the Laplacian";
          break;
        }
    if (!out.ok) break;
  }
  return out;
}

SpectralData spectral_decompose(const Eigen::MatrixXd& laplacian, const IsotypicalDecomposition& decomp,
                                double relative_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const int n = static_cast<int>(ev.size());
  SpectralData out;
  out.spectral_norm = ev.cwiseAbs().maxCoeff();
  const double tol = relative_tol * std::max(out.spectral_norm, 1.0);
  for (int end = n; end > 0;) {
    int start = end - 1;
    while (start > 0 && ev(end - 1) - ev(start - 1) < tol) --start;
    Eigenspace sp;
    sp.dim = end - start;
    sp.mu = ev.segment(start, sp.dim).mean();
    if (std::abs(sp.mu) < tol) sp.mu = 0.0;
    sp.omega = std::sqrt(std::max(0.0, -sp.mu));
    sp.basis = es.eigenvectors().middleCols(start, sp.dim);
    for (const auto& m : eigen_multiplicity(decomp, sp.basis, sp.mu))
      if (m.multiplicity > 0) sp.labels.push_back(m);
    sp.accidental = sp.labels.size() > 1;
    out.spaces.push_back(std::move(sp));
    end = start;
  }
  return out;
}

}  // namespace equinet
