#include "equinet/repr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "equinet/naming.hpp"

namespace equinet {

namespace {

// rho(g) B: row perm[i] of the result is sign * row i of B.
Eigen::MatrixXd apply(const GroupElement& g, const Eigen::MatrixXd& B) {
  Eigen::MatrixXd out(B.rows(), B.cols());
  for (int i = 0; i < g.degree(); ++i) out.row(g.perm[i]) = g.sign * B.row(i);
  return out;
}

double round_checked(double x, double tol, const char* what) {
  const double r = std::round(x);
  if (std::abs(x - r) > tol) throw ValidationError(what);
  return r;
}

std::size_t element_index(const FiniteGroup& G, const Perm& p, int sign) {
  GroupElement g{p, sign};
  return G.index_of(g);
}

// Gamma character of a component at permutation p, via (p,+1).
double gamma_char(const FiniteGroup& G, const std::vector<double>& chi, const Perm& p) {
  std::size_t i = element_index(G, p, 1);
  if (i >= G.order()) return std::nan("");
  return chi[G.element_class_of(i)];
}

int near(double x) { return static_cast<int>(std::lround(x)); }

// Family id for a component, -1 if unrecognised.
int family_irrep_id(const GammaStructure& gs, const FiniteGroup& G, const std::vector<double>& chi,
                    int dim) {
  switch (gs.family()) {
    case GammaFamily::Trivial: return 0;
    case GammaFamily::Z2: {
      double x = gamma_char(G, chi, gs.transposition());
      return std::isnan(x) ? -1 : (x > 0 ? 0 : 1);
    }
    case GammaFamily::S4: {
      double t = gamma_char(G, chi, gs.transposition());
      if (std::isnan(t)) return -1;
      if (dim == 1) return t > 0 ? 0 : 1;
      if (dim == 2) return 2;
      if (dim == 3) return t < 0 ? 3 : 4;
      return -1;
    }
    case GammaFamily::Dihedral: {
      const int n = gs.dihedral_n();
      double z = gamma_char(G, chi, gs.rotation());
      double r = gamma_char(G, chi, gs.vertex_reflection().empty() ? gs.edge_reflection()
                                                                   : gs.vertex_reflection());
      if (std::isnan(z) || std::isnan(r)) return -1;
      if (dim == 1) {
        if (near(z) == 1) return near(r) == 1 ? 0 : n;
        return near(r) == 1 ? n / 2 : n + 1;
      }
      if (dim == 2) {
        double angle = std::acos(std::clamp(z / 2.0, -1.0, 1.0));
        return near(angle * n / (2.0 * std::numbers::pi));
      }
      return -1;
    }
    case GammaFamily::Other: return -1;
  }
  return -1;
}

}  // namespace

const IrrepComponent& IsotypicalDecomposition::component(int irrep_id) const {
  for (const auto& c : components)
    if (c.irrep_id == irrep_id) return c;
  throw ValidationError("no component with irrep id " + std::to_string(irrep_id));
}

bool IsotypicalDecomposition::has(int irrep_id) const {
  for (const auto& c : components)
    if (c.irrep_id == irrep_id) return true;
  return false;
}

double IsotypicalDecomposition::character(int irrep_id, std::size_t g) const {
  return component(irrep_id).character[group->element_class_of(g)];
}

Eigen::MatrixXd action_matrix(const GroupElement& g) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(g.degree(), g.degree());
  for (int i = 0; i < g.degree(); ++i) M(g.perm[i], i) = g.sign;
  return M;
}

IsotypicalDecomposition isotypical_decompose(std::shared_ptr<const FiniteGroup> group,
                                             const ReprOptions& opts) {
  const FiniteGroup& G = *group;
  const int n = G.degree();
  const double order = static_cast<double>(G.order());
  const auto& classes = G.element_classes();

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = unif(rng);

  // Reynolds average; the sign cancels in rho A rho^T.
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(n, n);
  for (const auto& g : G.elements())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) R(g.perm[i], g.perm[j]) += A(i, j);
  R /= order;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

  struct Cluster {
    Eigen::MatrixXd basis;
    std::vector<double> chi;
  };
  std::vector<Cluster> clusters;
  for (int start = 0; start < n;) {
    int end = start + 1;
    while (end < n && ev(end) - ev(end - 1) < 1e-10 * scale) ++end;
    Cluster c;
    c.basis = es.eigenvectors().middleCols(start, end - start);
    for (const auto& cls : classes) {
      const GroupElement& g = G.element(cls.front());
      c.chi.push_back((c.basis.transpose() * apply(g, c.basis)).trace());
    }
    clusters.push_back(std::move(c));
    start = end;
  }

  struct Merged {
    std::vector<double> chi;
    int copies = 0;
  };
  std::vector<Merged> merged;
  for (const auto& c : clusters) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Merged& m) {
      for (std::size_t k = 0; k < m.chi.size(); ++k)
        if (std::abs(m.chi[k] - c.chi[k]) > opts.character_tol) return false;
      return true;
    });
    if (it == merged.end())
      merged.push_back({c.chi, 1});
    else
      ++it->copies;
  }

  GammaStructure gs(G);
  const std::size_t antipode = G.antipode_index();
  IsotypicalDecomposition out;
  out.group = group;
  out.dimension = n;
  out.seed = opts.seed;
  for (const auto& m : merged) {
    double norm = 0.0, fs = 0.0;
    for (std::size_t k = 0; k < classes.size(); ++k) norm += classes[k].size() * m.chi[k] * m.chi[k];
    norm /= order;
    for (std::size_t g = 0; g < G.order(); ++g) fs += m.chi[G.element_class_of(G.multiply(g, g))];
    fs /= order;
    const double rn = std::round(norm);
    if (std::abs(norm - rn) > opts.integrality_tol)
      throw ValidationError("decomposition failed, rerun with new random seed");
    if (rn == 2.0 && std::abs(fs) < opts.integrality_tol)
      throw ValidationError(
          "complex-type irreducible detected (Frobenius-Schur indicator 0); only real-type "
          "irreducibles are supported");
    if (rn != 1.0 || std::abs(fs - 1.0) > opts.integrality_tol)
      throw ValidationError("decomposition failed, rerun with new random seed");

    IrrepComponent comp;
    comp.character = m.chi;
    comp.dim = static_cast<int>(round_checked(m.chi[G.element_class_of(G.identity_index())],
                                              opts.integrality_tol,
                                              "decomposition failed, rerun with new random seed"));
    comp.antipodal = antipode < G.order() &&
                     std::abs(m.chi[G.element_class_of(antipode)] + comp.dim) < opts.integrality_tol;
    comp.projector = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t gi = 0; gi < G.order(); ++gi) {
      const GroupElement& g = G.element(gi);
      const double coef = comp.dim * m.chi[G.element_class_of(gi)] / order;
      for (int i = 0; i < n; ++i) comp.projector(g.perm[i], i) += coef * g.sign;
    }
    const double trace = comp.projector.trace();
    comp.multiplicity = static_cast<int>(round_checked(
        trace / comp.dim, opts.integrality_tol, "decomposition failed, rerun with new random seed"));
    if (comp.multiplicity != m.copies)
      throw ValidationError("decomposition failed, rerun with new random seed");
    comp.irrep_id = family_irrep_id(gs, G, m.chi, comp.dim);
    out.components.push_back(std::move(comp));
  }

  // Fallback ids: by dimension, then character descending.
  bool unique = std::none_of(out.components.begin(), out.components.end(),
                             [](const IrrepComponent& c) { return c.irrep_id < 0; });
  for (std::size_t a = 0; unique && a < out.components.size(); ++a)
    for (std::size_t b = a + 1; b < out.components.size(); ++b)
      if (out.components[a].irrep_id == out.components[b].irrep_id) unique = false;
  if (!unique) {
    std::sort(out.components.begin(), out.components.end(), [](const auto& a, const auto& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      for (std::size_t k = 0; k < a.character.size(); ++k)
        if (std::abs(a.character[k] - b.character[k]) > 1e-8) return a.character[k] > b.character[k];
      return false;
    });
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i].irrep_id = static_cast<int>(i);
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.irrep_id < b.irrep_id; });
  for (auto& c : out.components) c.label = "V" + std::to_string(c.irrep_id) + (c.antipodal ? "-" : "");

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (const auto& c : out.components) sum += c.projector;
  if ((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw InternalError("isotypical projectors do not sum to the identity");
  return out;
}

double component_character(const IsotypicalDecomposition& decomp, int irrep_id, const GroupElement& g) {
  const auto& c = decomp.component(irrep_id);
  return apply(g, c.projector).trace() / c.multiplicity;
}

std::vector<IsotypicalMultiplicity> eigen_multiplicity(const IsotypicalDecomposition& decomp,
                                                       const Eigen::MatrixXd& basis, double mu,
                                                       double integrality_tol) {
  std::vector<IsotypicalMultiplicity> out;
  for (const auto& c : decomp.components) {
    const double t = (basis.transpose() * c.projector * basis).trace() / c.dim;
    const double r = std::round(t);
    if (std::abs(t - r) > integrality_tol)
      throw ValidationError("eigenspace not G-invariant (check symmetry declaration)");
    out.push_back({mu, c.irrep_id, static_cast<int>(r)});
  }
  return out;
}

int fixed_point_dimension(const SubgroupLattice& lattice, int class_id, double tol) {
  const auto& H = lattice.cls(class_id);
  double sum = 0.0;
  for (auto h : H.representative) sum += lattice.group().element(h).trace();
  const double avg = sum / H.order;
  if (std::abs(avg - std::round(avg)) > tol) throw ValidationError("inconsistent representation");
  return static_cast<int>(std::lround(avg));
}

int fixed_point_dimension(const IsotypicalDecomposition& decomp, int irrep_id,
                          const SubgroupLattice& lattice, int class_id, double tol) {
  const auto& H = lattice.cls(class_id);
  if (&lattice.group() != decomp.group.get() && lattice.group().order() != decomp.group->order())
    throw ValidationError("inconsistent representation");
  double sum = 0.0;
  for (auto h : H.representative) sum += decomp.character(irrep_id, h);
  const double avg = sum / H.order;
  if (std::abs(avg - std::round(avg)) > tol) throw ValidationError("inconsistent representation");
  return static_cast<int>(std::lround(avg));
}

std::vector<int> fixed_dimensions(const IsotypicalDecomposition& decomp, int irrep_id,
                                  const SubgroupLattice& lattice) {
  std::vector<int> out;
  for (int id = 0; id < lattice.size(); ++id) out.push_back(fixed_point_dimension(decomp, irrep_id, lattice, id));
  return out;
}

std::vector<CharacterColumn> character_columns(const FiniteGroup& G) {
  GammaStructure gs(G);
  const auto& classes = G.element_classes();
  std::vector<CharacterColumn> cols;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const GroupElement& g = G.element(classes[k].front());
    const std::string sign = g.sign > 0 ? "1" : "-1";
    std::string name;
    if (gs.family() == GammaFamily::Dihedral && gs.dihedral_n() == 4) {
      if (gs.is_rotation(g.perm)) {
        const int ord = gs.perm_order(g.perm);
        name = ord == 1 ? "1" : ord == 2 ? "-1" : "i";
      } else {
        name = gs.has_fixed_point(g.perm) ? "κi" : "κ";
      }
    } else if (gs.family() == GammaFamily::Dihedral) {
      if (gs.is_rotation(g.perm)) {
        Perm q(g.perm.size());
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = static_cast<int>(i);
        int r = 0;
        while (q != g.perm) {
          q = compose(q, gs.rotation());
          ++r;
        }
        r = std::min(r, gs.dihedral_n() - r);
        name = r == 0 ? "1" : "ζ^" + std::to_string(r);
      } else {
        name = gs.has_fixed_point(g.perm) ? "κ" : "κζ";
      }
    } else if (gs.family() == GammaFamily::S4) {
      const int ord = gs.perm_order(g.perm);
      if (ord == 1) name = "()";
      else if (ord == 2) name = gs.in_derived(g.perm) ? "(12)(34)" : "(12)";
      else if (ord == 3) name = "(123)";
      else name = "(1234)";
    } else {
      bool id = true;
      for (int i = 0; i < g.degree(); ++i) id = id && g.perm[i] == i;
      name = id ? "1" : gs.family() == GammaFamily::Z2 ? "ξ" : "g" + std::to_string(k);
    }
    cols.push_back({k, "(" + name + "," + sign + ")"});
  }
  // D4 x Z2 layout: (1,1),(κ,1),(i,1),(-1,1),(1,-1),(κi,1),(κ,-1),(i,-1),(-1,-1),(κi,-1)
  static const std::vector<std::string> d4 = {
      "(1,1)",   "(κ,1)",  "(i,1)",        "(-1,1)",     "(1,-1)",        "(κi,1)",
      "(κ,-1)",  "(i,-1)", "(-1,-1)",      "(κi,-1)",    "((),1)",        "((12),1)",
      "((12)(34),1)", "((123),1)", "((1234),1)", "((),-1)", "((12),-1)", "((12)(34),-1)",
      "((123),-1)", "((1234),-1)", "(1,1)", "(ξ,1)", "(1,-1)", "(ξ,-1)"};
  auto rank = [&](const std::string& s) {
    auto it = std::find(d4.begin(), d4.end(), s);
    return it == d4.end() ? d4.size() : static_cast<std::size_t>(it - d4.begin());
  };
  std::stable_sort(cols.begin(), cols.end(), [&](const auto& a, const auto& b) { return rank(a.label) < rank(b.label); });
  return cols;
}

}  // namespace equinet
