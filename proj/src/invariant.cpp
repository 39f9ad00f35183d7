#include "equinet/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

namespace equinet {

ReductionChoice ReductionChoice::parse(const std::string& text) {
  static const std::regex re(R"((z2d|dmz|d2md)(?::(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw ValidationError("reduction: expected z2d[:m], dmz:m or d2md:m, got '" + text + "'");
  ReductionChoice r;
  const std::string kind = m[1].str();
  r.kind = kind == "z2d" ? ReductionKind::Z2m_d : kind == "dmz" ? ReductionKind::Dm_z : ReductionKind::D2m_d;
  r.m = m[2].matched ? std::stoi(m[2].str()) : 1;
  if (r.m <= 0) throw ValidationError("reduction: m must be positive");
  return r;
}

std::string ReductionChoice::to_string() const {
  const char* k = kind == ReductionKind::Z2m_d ? "z2d" : kind == ReductionKind::Dm_z ? "dmz" : "d2md";
  return std::string(k) + ":" + std::to_string(m);
}

bool ReductionChoice::contains_mode(int k) const {
  if (k <= 0 || k % m != 0) return false;
  return kind == ReductionKind::Dm_z || (k / m) % 2 == 1;
}

std::vector<int> ReductionChoice::modes(int k_max) const {
  std::vector<int> out;
  for (int k = 1; k <= k_max; ++k)
    if (contains_mode(k)) out.push_back(k);
  return out;
}

double xi_eigenvalue(int k, double lambda, double mu) {
  const double k2 = static_cast<double>(k) * k;
  return (k2 + lambda * lambda * mu) / (1.0 + k2);
}

namespace {

bool same_value(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

}  // namespace

FrequencyLattice critical_values(const SpectralData& spectral, const ReductionChoice& red, double lambda_max) {
  FrequencyLattice out;
  out.lambda_max = lambda_max;
  for (std::size_t j = 0; j < spectral.spaces.size(); ++j) {
    const auto& sp = spectral.spaces[j];
    if (sp.omega <= 0.0) continue;
    const int k_max = static_cast<int>(std::floor(lambda_max * sp.omega * (1.0 + 1e-12)));
    for (int k : red.modes(k_max)) {
      const double v = k / sp.omega;
      if (v > lambda_max * (1.0 + 1e-12)) continue;
      for (const auto& l : sp.labels) out.entries.push_back({v, k, static_cast<int>(j), l.irrep_id, l.multiplicity});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const CriticalEntry& a, const CriticalEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.j != b.j) return a.j < b.j;
    return a.irrep_id < b.irrep_id;
  });
  for (const auto& e : out.entries) {
    if (out.points.empty() || !same_value(e.value, out.points.back().value))
      out.points.push_back({e.value, {e}});
    else
      out.points.back().entries.push_back(e);
  }
  return out;
}

const BasicDegree& NetworkModel::degree(int irrep_id) const {
  auto it = degrees.find(irrep_id);
  if (it == degrees.end()) throw ValidationError("no basic degree for irrep " + std::to_string(irrep_id));
  return it->second;
}

NetworkModel analyze_network(const NetworkSpec& spec, const ReprOptions& opts) {
  NetworkModel m;
  m.spec = spec;
  m.laplacian = build_laplacian(spec);
  auto check = verify_equivariance(spec, m.laplacian);
  if (!check.ok) throw ValidationError("symmetry: " + check.message);
  m.group = spec.symmetry_group();
  m.lattice = subgroup_lattice(m.group);
  m.ring = std::make_shared<const BurnsideRing>(m.lattice);
  m.decomposition = isotypical_decompose(m.group, opts);
  m.spectrum = spectral_decompose(m.laplacian, m.decomposition);
  for (const auto& c : m.decomposition.components)
    m.degrees.emplace(c.irrep_id, m.ring->basic_degree(c.irrep_id, fixed_dimensions(m.decomposition, c.irrep_id, *m.lattice)));
  return m;
}

double InvariantReport::period_lo() const { return 2.0 * std::numbers::pi * lambda_lo; }
double InvariantReport::period_hi() const { return 2.0 * std::numbers::pi * lambda_hi; }

std::vector<GroupElement> class_generators(const SubgroupLattice& lattice, int class_id) {
  const auto& rep = lattice.cls(class_id).representative;
  std::vector<std::size_t> gens;
  ElementSet span = lattice.closure({});
  for (auto e : rep) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = lattice.closure(gens);
  }
  std::vector<GroupElement> out;
  for (auto g : gens) out.push_back(lattice.group().element(g));
  return out;
}

std::string spatio_temporal_label(const ReductionChoice& red, const std::vector<int>& modes,
                                  const std::string& spatial_type) {
  std::ostringstream k;
  if (modes.size() == 1) {
    k << modes.front();
  } else {
    k << "k";
  }
  const std::string kk = k.str();
  std::ostringstream os;
  switch (red.kind) {
    case ReductionKind::Z2m_d:
      os << "x(t) = x(t+2π/" << kk << ") = -x(t+π/" << kk << "), time-reversible";
      break;
    case ReductionKind::D2m_d:
      os << "x(t) = x(t+2π/" << kk << ") = -x(t+π/" << kk << ") = -x(-t)";
      break;
    case ReductionKind::Dm_z:
      os << "x(t) = x(t+2π/" << kk << ") = -x(-t)";
      break;
  }
  if (modes.size() > 1) {
    os << ", k in {";
    for (std::size_t i = 0; i < modes.size(); ++i) os << (i ? "," : "") << modes[i];
    os << "}";
  }
  os << ", spatial type (" << spatial_type << ")";
  return os.str();
}

InvariantReport omega_invariant(const NetworkModel& model, const FrequencyLattice& freq,
                                const ReductionChoice& red, double lambda) {
  for (const auto& p : freq.points)
    if (same_value(lambda, p.value)) throw ValidationError("resonant period, invariant undefined");
  const SubgroupLattice& lat = *model.lattice;
  const BurnsideRing& ring = *model.ring;

  InvariantReport rep;
  rep.lambda = lambda;
  rep.reduction = red;
  std::map<int, Factor> factors;
  for (const auto& e : freq.entries) {
    if (e.value >= lambda) break;
    Factor& f = factors[e.irrep_id];
    f.irrep_id = e.irrep_id;
    f.irrep = model.decomposition.component(e.irrep_id).label;
    f.count += e.multiplicity;
    f.crossings.emplace_back(e.j, e.k);
  }

  // Equal basic degrees cancel in pairs, whichever irreps they come from.
  std::vector<std::pair<BurnsideElement, int>> groups;
  for (const auto& [id, f] : factors) {
    const auto& d = model.degree(id).value;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == d; });
    if (it == groups.end())
      groups.emplace_back(d, f.count);
    else
      it->second += f.count;
  }
  std::vector<BurnsideElement> survivors;
  for (const auto& [d, c] : groups)
    if (c % 2 == 1) survivors.push_back(d);
  for (auto& [id, f] : factors) {
    const auto& d = model.degree(id).value;
    f.survives = std::find(survivors.begin(), survivors.end(), d) != survivors.end();
    rep.factors.push_back(f);
  }

  rep.product = ring.unit();
  for (const auto& s : survivors) rep.product = ring.multiply(rep.product, s);
  rep.omega = ring.unit() - rep.product;

  auto describe = [&](int h) {
    GuaranteedType t;
    t.class_id = h;
    t.name = lat.cls(h).name;
    t.structural = lat.cls(h).label;
    t.twisted = lat.cls(h).twisted;
    t.coefficient = rep.omega.coeff(h);
    std::vector<int> modes;
    for (const auto& f : rep.factors) {
      if (!f.survives || model.degree(f.irrep_id).value.coeff(h) == 0) continue;
      t.irrep_ids.push_back(f.irrep_id);
      for (const auto& [j, k] : f.crossings) modes.push_back(k);
    }
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    t.modes = modes;
    t.generators = class_generators(lat, h);
    t.label = spatio_temporal_label(red, modes, t.name);
    return t;
  };

  for (int h : maximal_orbit_types(lat, survivors)) {
    if (rep.omega.coeff(h) == 0) throw InternalError("maximal orbit type with zero coefficient in omega");
    rep.guaranteed_types.push_back(describe(h));
  }
  for (int h : rep.omega.support()) {
    if (h == lat.top()) continue;
    rep.support.push_back(describe(h));
    if (h == lat.bottom()) continue;
    for (const auto& s : survivors)
      if (s.coeff(h) < 0) {
        rep.primary_types.push_back(rep.support.back());
        break;
      }
  }
  return rep;
}

std::vector<InvariantReport> classify_period_range(const NetworkModel& model, const ReductionChoice& red,
                                                   double p_lo, double p_hi) {
  if (!(p_lo > 0.0)) throw ValidationError("period-min: must be positive");
  std::vector<InvariantReport> out;
  if (!(p_hi > p_lo)) return out;
  const double l_lo = p_lo / (2.0 * std::numbers::pi), l_hi = p_hi / (2.0 * std::numbers::pi);

  double w_min = 0.0;
  for (const auto& sp : model.spectrum.spaces)
    if (sp.omega > 0.0 && (w_min == 0.0 || sp.omega < w_min)) w_min = sp.omega;
  const double reach = w_min > 0.0 ? l_hi + 2.0 * red.m / w_min : l_hi;
  const FrequencyLattice freq = critical_values(model.spectrum, red, reach);

  std::vector<double> bounds{0.0};
  for (const auto& p : freq.points) bounds.push_back(p.value);
  bounds.push_back(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i], b = bounds[i + 1];
    if (!(b > l_lo) || !(a < l_hi)) continue;
    const double mid = std::isfinite(b) ? 0.5 * (a + b) : a + 1.0;
    InvariantReport r = omega_invariant(model, freq, red, mid);
    r.lambda_lo = a;
    r.lambda_hi = b;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace equinet
