#include "equinet/corpus.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "equinet/error.hpp"

namespace equinet {

namespace {

const NetworkModel& model(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<NetworkModel>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<NetworkModel>(analyze_network(network_preset(name)));
  return *slot;
}

template <class F>
CheckResult timed(std::string suite, std::string name, F&& body) {
  CheckResult r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
  return out + "}";
}

double omega_of(const NetworkModel& m, int j) { return m.spectrum.spaces.at(j).omega; }

// Critical values strictly inside (a, b) split it into sub-windows; returns
// their midpoints.
std::vector<double> sub_window_midpoints(const NetworkModel& m, const ReductionChoice& red, double a, double b) {
  const FrequencyLattice freq = critical_values(m.spectrum, red, b * 1.01);
  std::vector<double> cuts{a};
  for (const auto& p : freq.points)
    if (p.value > a * (1 + 1e-9) && p.value < b * (1 - 1e-9)) cuts.push_back(p.value);
  cuts.push_back(b);
  std::vector<double> mids;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) mids.push_back(0.5 * (cuts[i] + cuts[i + 1]));
  return mids;
}

std::map<std::string, std::int64_t> named_coeffs(const BurnsideElement& a) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [id, c] : a.coeffs()) out[a.lattice()->cls(id).name] = c;
  return out;
}

}  // namespace

std::set<std::string> primary_type_names(const NetworkModel& m, const ReductionChoice& red, double lambda,
                                         bool twisted_only) {
  const FrequencyLattice freq = critical_values(m.spectrum, red, lambda * 1.01 + 1.0);
  const InvariantReport rep = omega_invariant(m, freq, red, lambda);
  std::set<std::string> out;
  for (const auto& t : rep.primary_types)
    if (!twisted_only || t.twisted) out.insert(t.name);
  return out;
}

CheckResult check_cycle_character_table() {
  return timed("cycle", "D4xZ2 character table", [](CheckResult& r) {
    const NetworkModel& m = model("cycle4");
    const std::vector<std::string> labels{"(1,1)",  "(κ,1)",  "(i,1)",  "(-1,1)",  "(1,-1)",
                                          "(κi,1)", "(κ,-1)", "(i,-1)", "(-1,-1)", "(κi,-1)"};
    const std::map<std::string, std::vector<int>> expected{
        {"V0-", {1, 1, 1, 1, -1, 1, -1, -1, -1, -1}},
        {"V1-", {2, 0, 0, -2, -2, 0, 0, 0, 2, 0}},
        {"V2-", {1, -1, -1, 1, 1, 1, -1, -1, 1, 1}},
    };
    const auto cols = character_columns(*m.group);
    int entries = 0, mismatches = 0;
    std::ostringstream os;
    if (cols.size() != labels.size()) throw InternalError("unexpected column count");
    for (const auto& [label, row] : expected) {
      const IrrepComponent* comp = nullptr;
      for (const auto& c : m.decomposition.components)
        if (c.label == label) comp = &c;
      if (!comp) {
        mismatches += 10;
        os << label << " missing; ";
        continue;
      }
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].label != labels[c]) throw InternalError("column label " + cols[c].label);
        const double got = comp->character[cols[c].element_class];
        ++entries;
        if (std::abs(got - row[c]) > 1e-9) {
          ++mismatches;
          os << label << "@" << labels[c] << " got " << std::lround(got) << " want " << row[c] << "; ";
        }
      }
    }
    r.pass = mismatches == 0 && entries == 30 && m.decomposition.components.size() == 3;
    r.detail = std::to_string(entries - mismatches) + "/30 entries agree" + (mismatches ? ": " + os.str() : "");
  });
}

CheckResult check_cycle_spectrum() {
  return timed("cycle", "4-cycle spectrum", [](CheckResult& r) {
    const NetworkModel& m = model("cycle4");
    const std::vector<std::pair<double, int>> want{{0, 1}, {-2, 2}, {-4, 1}};
    r.pass = m.spectrum.spaces.size() == want.size();
    for (std::size_t j = 0; r.pass && j < want.size(); ++j)
      r.pass = std::abs(m.spectrum.spaces[j].mu - want[j].first) < 1e-9 && m.spectrum.spaces[j].dim == want[j].second;
    r.detail = std::to_string(m.spectrum.spaces.size()) + " eigenspaces";
  });
}

CheckResult check_octahedron_spectrum() {
  return timed("octahedron", "spectrum and irrep labels", [](CheckResult& r) {
    const NetworkModel& m = model("octahedron");
    const double s2 = std::numbers::sqrt2, s3 = std::numbers::sqrt3;
    const std::vector<double> mu{0, s2 - 2, s3 - 3, -2, s2 - 4, -s2 - 2, -4, -s3 - 3, -s2 - 4, -6};
    const std::vector<int> dim{1, 3, 2, 3, 3, 3, 3, 2, 3, 1};
    const std::vector<std::string> label{"V0-", "V3-", "V2-", "V4-", "V4-", "V3-", "V3-", "V2-", "V4-", "V1-"};
    std::ostringstream os;
    double worst = 0.0;
    bool ok = m.spectrum.spaces.size() == mu.size();
    for (std::size_t j = 0; ok && j < mu.size(); ++j) {
      const auto& sp = m.spectrum.spaces[j];
      worst = std::max(worst, std::abs(sp.mu - mu[j]));
      const bool lab = sp.labels.size() == 1 && sp.labels[0].multiplicity == 1 &&
                       m.decomposition.component(sp.labels[0].irrep_id).label == label[j];
      if (std::abs(sp.mu - mu[j]) >= 1e-9 || sp.dim != dim[j] || !lab) {
        ok = false;
        os << "mu_" << j << " mismatch; ";
      }
    }
    r.pass = ok;
    os << "max |dmu| = " << worst;
    r.detail = os.str();
  });
}

CheckResult check_octahedron_eigenvectors() {
  return timed("octahedron", "listed eigenvectors", [](CheckResult& r) {
    const NetworkModel& m = model("octahedron");
    const double s3 = std::numbers::sqrt3;
    struct Case {
      std::string name;
      double mu;
      std::vector<double> v;
    };
    const std::vector<Case> cases{
        {"v9", -6, {-1, 1, -1, 1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 1}},
        {"v10", 0, std::vector<double>(24, 1.0)},
        {"v5,1", -2, {0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"v5,2", -2, {1, 0, -1, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 1}},
        {"v5,3", -2, {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0}},
        {"v6,1", -4, {0, 1, 0, -1, 0, 1, 0, -1, 0, -1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
        {"v6,2", -4, {-1, 0, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, -1, 0, 1}},
        {"v6,3", -4, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 1, 0, -1, 0, -1, 0, 1, 0, -1, 0, 1, 0}},
        {"v7,1", s3 - 3, {-2, -s3, -2, -s3, -2, -s3, -2, -s3, s3, 1, s3, 1, s3, 1, s3, 1, 1, 0, 1, 0, 1, 0, 1, 0}},
        {"v7,2", s3 - 3, {s3, 1, s3, 1, s3, 1, s3, 1, -2, -s3, -2, -s3, -2, -s3, -2, -s3, 0, 1, 0, 1, 0, 1, 0, 1}},
    };
    double worst = 0.0;
    std::string bad;
    for (const auto& c : cases) {
      const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(c.v.data(), 24);
      const double res = (m.laplacian * v - c.mu * v).cwiseAbs().maxCoeff();
      worst = std::max(worst, res);
      if (!(res < 1e-9)) bad += c.name + " ";
    }
    r.pass = bad.empty();
    std::ostringstream os;
    os << cases.size() << " vectors, max residual " << worst << (bad.empty() ? "" : "; failing: " + bad);
    r.detail = os.str();
  });
}

CheckResult check_octahedron_degrees() {
  return timed("octahedron", "basic degrees", [](CheckResult& r) {
    const NetworkModel& m = model("octahedron");
    using Terms = std::map<std::string, std::int64_t>;
    const std::map<std::string, Terms> want{
        {"V0-", {{"S4xZ2", 1}, {"S4", -1}}},
        {"V1-", {{"S4xZ2", 1}, {"S4^-", -1}}},
        {"V2-", {{"S4xZ2", 1}, {"D4^dhat", -1}, {"D4", -1}, {"V4", 1}}},
        {"V3-", {{"S4xZ2", 1}, {"D4^z", -1}, {"D3^z", -1}, {"D2^d", -1}, {"D1^z", 2}, {"Z2^-", 1}, {"Z1", -1}}},
        {"V4-", {{"S4xZ2", 1}, {"D4^d", -1}, {"D3", -1}, {"D2^d", -1}, {"Z2^-", 1}, {"D1", 2}, {"Z1", -1}}},
    };
    std::string bad;
    int matched = 0;
    for (const auto& [id, d] : m.degrees) {
      const std::string label = m.decomposition.component(id).label;
      auto it = want.find(label);
      const bool eq = it != want.end() && named_coeffs(d.value) == it->second;
      const bool involutive = m.ring->multiply(d.value, d.value) == m.ring->unit();
      if (eq && involutive)
        ++matched;
      else
        bad += label + (eq ? " (square)" : " (terms)") + " ";
    }
    r.pass = matched == 5 && m.degrees.size() == 5;
    r.detail = std::to_string(matched) + "/5 degrees match and square to (G)" + (bad.empty() ? "" : "; " + bad);
  });
}

CheckResult check_burnside_oracle(const std::string& network) {
  return timed(network, "Burnside products vs orbit counting", [&](CheckResult& r) {
    const NetworkModel& m = model(network);
    const int n = m.lattice->size();
    int pairs = 0, mismatches = 0;
    for (int h = 0; h < n; ++h)
      for (int k = h; k < n; ++k) {
        ++pairs;
        if (!(m.ring->generator_product(h, k) == m.ring->generator_product_oracle(h, k))) ++mismatches;
      }
    r.pass = mismatches == 0;
    r.detail = std::to_string(n) + " classes, " + std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
               " mismatches";
  });
}

CheckResult check_octahedron_windows() {
  return timed("octahedron", "window tables (a)-(f)", [](CheckResult& r) {
    const NetworkModel& m = model("octahedron");
    const ReductionChoice red = ReductionChoice::parse("dmz:1");
    auto c = [&](int k, int j) { return k / omega_of(m, j); };
    struct Window {
      std::string name;
      double lo, hi;
      std::set<std::string> types;
    };
    const std::set<std::string> a{"S4^-"}, b{"S4^-", "D4^d", "D2^d"}, cc{"S4^-", "D4^dhat", "D2^d", "D4^d"},
        d{"S4^-", "D4^d", "D4^dhat"}, e{"S4^-", "D2^d", "D4^dhat"}, f{"D4^d", "D2^d", "D4^dhat"};
    const std::vector<Window> windows{
        {"(a) 1/w9..1/w8", c(1, 9), c(1, 8), a},   {"(b) 1/w8..1/w7", c(1, 8), c(1, 7), b},
        {"(b) 1/w2..2/w7", c(1, 2), c(2, 7), b},   {"(c) 1/w7..1/w6", c(1, 7), c(1, 6), cc},
        {"(c) 1/w5..1/w4", c(1, 5), c(1, 4), cc},  {"(c) 1/w3..2/w9", c(1, 3), c(2, 9), cc},
        {"(c) 2/w8..1/w2", c(2, 8), c(1, 2), cc},  {"(c) 2/w7..2/w6", c(2, 7), c(2, 6), cc},
        {"(c) 2/w5..1/w1", c(2, 5), c(1, 1), cc},  {"(d) 1/w6..1/w5", c(1, 6), c(1, 5), d},
        {"(d) 2/w8..2/w7", c(2, 8), c(2, 7), d},   {"(d) 2/w6..2/w5", c(2, 6), c(2, 5), d},
        {"(e) 1/w4..1/w3", c(1, 4), c(1, 3), e},   {"(f) 2/w9..2/w8", c(2, 9), c(2, 8), f},
    };
    int ok = 0;
    std::ostringstream os;
    for (const auto& w : windows) {
      bool pass = true;
      std::string got;
      for (double lam : sub_window_midpoints(m, red, w.lo, w.hi)) {
        const auto s = primary_type_names(m, red, lam, true);
        if (s != w.types) {
          pass = false;
          got += join(s);
        }
      }
      if (pass)
        ++ok;
      else
        os << w.name << " want " << join(w.types) << " got " << got << "; ";
    }
    r.pass = ok == static_cast<int>(windows.size());
    r.detail = std::to_string(ok) + "/" + std::to_string(windows.size()) + " windows agree" +
               (r.pass ? "" : ": " + os.str());
  });
}

CheckResult check_octahedron_ordering() {
  return timed("octahedron", "critical value ordering", [](CheckResult& r) {
    const NetworkModel& m = model("octahedron");
    const std::vector<std::pair<int, int>> want{{1, 9}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {1, 3},
                                                {2, 9}, {2, 8}, {1, 2}, {2, 7}, {2, 6}, {2, 5}, {1, 1}};
    const FrequencyLattice freq = critical_values(m.spectrum, ReductionChoice::parse("dmz:1"), 1.0 / omega_of(m, 1));
    std::vector<std::pair<int, int>> got;
    for (const auto& p : freq.points) got.emplace_back(p.entries.front().k, p.entries.front().j);
    r.pass = got == want;
    std::ostringstream os;
    for (const auto& [k, j] : got) os << k << "/w" << j << " ";
    r.detail = "computed: " + os.str();
  });
}

CheckResult check_chain_ordering() {
  return timed("chain", "critical value ordering", [](CheckResult& r) {
    const NetworkModel& m = model("chain4");
    std::vector<std::pair<int, int>> want;
    for (int k = 1; k <= 9; k += 2)
      for (int j = 3; j >= 1; --j) want.emplace_back(k, j);
    const FrequencyLattice freq = critical_values(m.spectrum, ReductionChoice::parse("z2d"), 9.0 / omega_of(m, 1));
    std::vector<std::pair<int, int>> got;
    for (const auto& p : freq.points) got.emplace_back(p.entries.front().k, p.entries.front().j);
    r.pass = got == want;
    std::ostringstream os;
    for (const auto& [k, j] : got) os << k << "/w" << j << " ";
    r.detail = "computed: " + os.str();
  });
}

CheckResult check_chain_windows() {
  return timed("chain", "window tables (a)-(c)", [](CheckResult& r) {
    const NetworkModel& m = model("chain4");
    const ReductionChoice red = ReductionChoice::parse("z2d");
    auto c = [&](int k, int j) { return k / omega_of(m, j); };
    int ok = 0, total = 0, vacuous = 0;
    std::ostringstream os;
    for (int k = 0; k <= 2; ++k) {
      const int o = 2 * k + 1;
      const std::vector<std::tuple<std::string, double, double, std::set<std::string>>> windows{
          {"(a)", c(o, 1), c(o + 2, 3), {"Z2"}},
          {"(b)", c(o, 2), c(o, 1), {"Z2", "Z2^-"}},
          {"(c)", c(o, 3), c(o, 2), {"Z2^-"}},
      };
      for (const auto& [name, lo, hi, types] : windows) {
        ++total;
        if (!(hi > lo)) {
          ++ok;
          ++vacuous;
          continue;
        }
        bool pass = true;
        std::string got;
        for (double lam : sub_window_midpoints(m, red, lo, hi)) {
          const FrequencyLattice freq = critical_values(m.spectrum, red, hi * 2);
          const InvariantReport rep = omega_invariant(m, freq, red, lam);
          std::set<std::string> names;
          bool odd_modes = true;
          for (const auto& t : rep.primary_types) {
            names.insert(t.name);
            if (t.modes.empty()) odd_modes = false;
            for (int q : t.modes)
              if (q % 2 == 0) odd_modes = false;
          }
          if (names != types || !odd_modes) {
            pass = false;
            got += join(names);
          }
        }
        if (pass)
          ++ok;
        else
          os << name << " k=" << k << " got " << got << "; ";
      }
    }
    r.pass = ok == total;
    r.detail = std::to_string(ok) + "/" + std::to_string(total) + " windows agree (types and odd modes, " + std::to_string(vacuous) +
               " empty)" +
               (r.pass ? "" : ": " + os.str());
  });
}

CheckResult check_chain_orbit() {
  return timed("chain", "4-chain orbit in window (a)", [](CheckResult& r) {
    const NetworkModel& m = model("chain4");
    const ReductionChoice red = ReductionChoice::parse("z2d");
    const double lam = 0.5 * (1.0 / omega_of(m, 1) + 3.0 / omega_of(m, 3));
    // v2 spans the xi-symmetric mode that drives the Z2 type.
    const FourierState seed = seed_state(m.spectrum, 2, 1, lam, red, 32, m.spec.nonlinearity);
    const NewtonResult res = newton_solve(seed, m.laplacian, m.spec.nonlinearity);
    auto rel = reduction_relations(red, 4, true);
    const auto sp = spatial_relations({GroupElement{{3, 2, 1, 0}, 1}});
    rel.insert(rel.end(), sp.begin(), sp.end());
    const SymmetryReport sym = verify_symmetry(res.state, rel);
    double worst = 0.0;
    for (const auto& x : sym.relations) worst = std::max(worst, x.max_violation);
    r.pass = sym.pass && res.residual_norm < 1e-10;
    std::ostringstream os;
    os << "lambda " << lam << ", residual " << res.residual_norm << ", max symmetry violation " << worst;
    r.detail = os.str();
  });
}

std::vector<CheckResult> check_invariant_suite() {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, std::string>> nets{
      {"chain4", "z2d"}, {"cycle4", "z2d"}, {"octahedron", "dmz:1"}};
  for (const auto& [net, redname] : nets) {
    const ReductionChoice red = ReductionChoice::parse(redname);
    out.push_back(timed(net, "adjacent-window parity flip", [&](CheckResult& r) {
      const NetworkModel& m = model(net);
      const auto reps = classify_period_range(m, red, 0.5, 2.0 * std::numbers::pi * 2.5);
      int checked = 0, bad = 0;
      for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
        BurnsideElement expect = reps[i].product;
        const FrequencyLattice freq = critical_values(m.spectrum, red, reps[i].lambda_hi * 1.01);
        for (const auto& p : freq.points) {
          if (std::abs(p.value - reps[i].lambda_hi) > 1e-9 * p.value) continue;
          for (const auto& e : p.entries)
            if (e.multiplicity % 2 == 1) expect = m.ring->multiply(expect, m.degree(e.irrep_id).value);
        }
        ++checked;
        if (!(expect == reps[i + 1].product)) ++bad;
      }
      r.pass = bad == 0 && checked > 0;
      r.detail = std::to_string(checked) + " boundaries, " + std::to_string(bad) + " violations";
    }));
    out.push_back(timed(net, "omega constant within windows", [&](CheckResult& r) {
      const NetworkModel& m = model(net);
      const auto reps = classify_period_range(m, red, 0.5, 2.0 * std::numbers::pi * 2.5);
      int bad = 0, checked = 0;
      for (const auto& rep : reps) {
        if (!std::isfinite(rep.lambda_hi)) continue;
        const FrequencyLattice freq = critical_values(m.spectrum, red, rep.lambda_hi * 1.01);
        for (double t : {0.1, 0.9}) {
          const double lam = rep.lambda_lo + t * (rep.lambda_hi - rep.lambda_lo);
          if (lam <= 0) continue;
          ++checked;
          if (!(omega_invariant(m, freq, red, lam).omega == rep.omega)) ++bad;
        }
      }
      r.pass = bad == 0 && checked > 0;
      r.detail = std::to_string(checked) + " samples, " + std::to_string(bad) + " changes";
    }));
  }
  for (const auto& [net, redname] : nets) {
    out.push_back(timed(net, "deg^2 = (G), projectors, row sums", [&](CheckResult& r) {
      const NetworkModel& m = model(net);
      int bad_deg = 0;
      for (const auto& [id, d] : m.degrees)
        if (!(m.ring->multiply(d.value, d.value) == m.ring->unit())) ++bad_deg;
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m.spec.n, m.spec.n);
      for (const auto& c : m.decomposition.components) sum += c.projector;
      const double proj = (sum - Eigen::MatrixXd::Identity(m.spec.n, m.spec.n)).cwiseAbs().maxCoeff();
      const double rows = m.laplacian.rowwise().sum().cwiseAbs().maxCoeff();
      r.pass = bad_deg == 0 && proj < 1e-10 && rows < 1e-12;
      std::ostringstream os;
      os << m.degrees.size() << " degrees (" << bad_deg << " bad), projector defect " << proj << ", row sum "
         << rows;
      r.detail = os.str();
    }));
  }
  return out;
}

std::vector<CheckResult> verify_reference(const std::string& suite) {
  if (suite != "all" && suite != "cycle" && suite != "octahedron" && suite != "chain")
    throw ValidationError("case: expected octahedron, chain, cycle or all");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "cycle") {
    out.push_back(check_cycle_character_table());
    out.push_back(check_cycle_spectrum());
  }
  if (all || suite == "octahedron") {
    out.push_back(check_octahedron_spectrum());
    out.push_back(check_octahedron_eigenvectors());
    out.push_back(check_octahedron_degrees());
    out.push_back(check_burnside_oracle("octahedron"));
    out.push_back(check_octahedron_ordering());
    out.push_back(check_octahedron_windows());
  }
  if (all || suite == "chain") {
    out.push_back(check_chain_ordering());
    out.push_back(check_chain_windows());
    out.push_back(check_chain_orbit());
  }
  for (auto& c : check_invariant_suite()) {
    const bool match = all || c.suite == suite || (suite == "chain" && c.suite == "chain4") ||
                       (suite == "cycle" && c.suite == "cycle4");
    if (match) out.push_back(std::move(c));
  }
  return out;
}

std::string format_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    char t[32];
    std::snprintf(t, sizeof t, "%.3fs", c.seconds);
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.suite << ": " << c.name << " (" << t << ")  " << c.detail << "\n";
  }
  return os.str();
}

}  // namespace equinet
