#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "equinet/corpus.hpp"
#include "equinet/error.hpp"
#include "equinet/io.hpp"

namespace equinet::cli {

namespace {

struct Common {
  std::uint64_t seed = 20240101;
  double character_tol = 1e-8;
  double integrality_tol = 1e-6;
  std::string format;

  ReprOptions repr() const { return {seed, character_tol, integrality_tol}; }
};

void check_positive(double v, const std::string& field) {
  if (!(v > 0.0)) throw ValidationError(field + ": must be positive");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Resolves the output format from --format, then the file extension.
std::string resolve_format(const std::string& requested, const std::string& path, const std::string& fallback) {
  if (!requested.empty()) {
    if (requested != "json" && requested != "csv") throw ValidationError("format: expected json or csv");
    return requested;
  }
  if (ends_with(path, ".json")) return "json";
  if (ends_with(path, ".csv")) return "csv";
  return fallback;
}

json envelope(const std::string& command, json config, const Common& c) {
  config["command"] = command;
  config["seed"] = c.seed;
  config["character_tol"] = c.character_tol;
  config["integrality_tol"] = c.integrality_tol;
  json out;
  out["artifact"] = "equinet";
  out["version"] = kArtifactVersion;
  out["config_hash"] = config_hash(config);
  out["seed"] = c.seed;
  out["config"] = config;
  return out;
}

std::string csv_preamble(const json& env) {
  return "# equinet " + env["version"].get<std::string>() + " config_hash=" + env["config_hash"].get<std::string>() +
         " seed=" + std::to_string(env["seed"].get<std::uint64_t>()) + "\n";
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty())
    out << content;
  else
    write_atomic(path, content);
}

std::shared_ptr<const FiniteGroup> group_from(const std::string& source) {
  const GroupPreset g = load_group(source);
  return std::make_shared<const FiniteGroup>(close_generators(g.degree, with_antipode(g.degree, g.generators)));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric periodic solutions of second-order networks: degree invariants and orbit solver",
               "equinet"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--seed", c.seed, "Random seed for the isotypical decomposition (EQUINET_SEED overrides)");
  app.add_option("--character-tol", c.character_tol, "Character matching tolerance");
  app.add_option("--integrality-tol", c.integrality_tol, "Integrality tolerance for multiplicities");
  app.add_option("--format", c.format, "Output format: json or csv");

  // spectrum
  std::string sp_graph, sp_out;
  bool sp_csv = false;
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues with isotypical labels");
  spectrum->add_option("graph", sp_graph, "Graph file or preset (preset:chain4, preset:cycle4, preset:octahedron)")
      ->required();
  spectrum->add_flag("--csv", sp_csv, "CSV output");
  spectrum->add_option("--out", sp_out, "Output file (stdout if omitted)");

  // burnside
  std::string bs_group, bs_table;
  bool bs_degrees = false;
  auto* burnside = app.add_subcommand("burnside", "Subgroup classes, Burnside products and basic degrees");
  burnside->add_option("--group", bs_group, "Group file or preset")->required();
  burnside->add_option("--table", bs_table, "Write the generator multiplication table (JSON)");
  burnside->add_flag("--basic-degrees", bs_degrees, "Print the basic degrees of the natural representation");

  // repr
  std::string rp_group, rp_table;
  int rp_dim = 0;
  auto* repr = app.add_subcommand("repr", "Character table of the irreducibles in the natural representation");
  repr->add_option("--group", rp_group, "Group file or preset")->required();
  repr->add_option("--dim", rp_dim, "Dimension of the representation (must equal the group degree)");
  repr->add_option("--table", rp_table, "Output CSV file (stdout if omitted)");

  // classify
  std::string cl_graph, cl_red = "z2d", cl_out;
  double cl_pmin = 0.0, cl_pmax = 0.0;
  auto* classify = app.add_subcommand("classify", "Invariant and guaranteed orbit types per period window");
  classify->add_option("graph", cl_graph, "Graph file or preset")->required();
  classify->add_option("--reduction", cl_red, "z2d[:m], dmz:m or d2md:m");
  classify->add_option("--period-min", cl_pmin, "Lower period bound")->required();
  classify->add_option("--period-max", cl_pmax, "Upper period bound")->required();
  classify->add_option("--out", cl_out, "Report file (.json or .csv)");

  // solve
  std::string sv_graph, sv_red = "z2d", sv_mode = "1,1", sv_out, sv_ts;
  double sv_lambda = 0.0, sv_tol = 1e-10;
  std::optional<double> sv_amp;
  int sv_trunc = 32, sv_iter = 50, sv_column = 0;
  bool sv_fd = false;
  auto* solve = app.add_subcommand("solve", "Fourier-Galerkin Newton solve in a symmetric mode set");
  solve->add_option("graph", sv_graph, "Graph file or preset")->required();
  solve->add_option("--lambda", sv_lambda, "Frequency parameter lambda = p / 2pi")->required();
  solve->add_option("--reduction", sv_red, "z2d[:m], dmz:m or d2md:m");
  solve->add_option("--seed-mode", sv_mode, "Eigenspace index j and mode k, as j,k");
  solve->add_option("--column", sv_column, "Basis vector of the eigenspace used in the seed");
  solve->add_option("--amplitude", sv_amp, "Seed amplitude (default: one-mode balance)");
  solve->add_option("--truncation", sv_trunc, "Highest Fourier mode N");
  solve->add_option("--tol", sv_tol, "Residual tolerance");
  solve->add_option("--max-iter", sv_iter, "Newton iteration limit");
  solve->add_flag("--fd-jacobian", sv_fd, "Use a finite-difference Jacobian");
  solve->add_option("--out", sv_out, "orbit.json");
  solve->add_option("--emit-timeseries", sv_ts, "CSV of (t, x_1..x_n)");

  // verify-paper
  std::string vp_case = "all";
  auto* verify = app.add_subcommand("verify-paper", "Run the reference checks and print a pass/fail table");
  verify->add_option("--case", vp_case, "octahedron, chain, cycle or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (const char* env = std::getenv("EQUINET_SEED")) {
      try {
        std::size_t pos = 0;
        c.seed = std::stoull(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("EQUINET_SEED: not an unsigned integer");
      }
    }
    check_positive(c.character_tol, "character-tol");
    check_positive(c.integrality_tol, "integrality-tol");

    if (spectrum->parsed()) {
      const std::string fmt = resolve_format(sp_csv ? "csv" : c.format, sp_out, "csv");
      const NetworkModel m = analyze_network(load_network(sp_graph), c.repr());
      json env = envelope("spectrum", {{"graph", sp_graph}}, c);
      if (fmt == "csv") {
        emit(out, sp_out, csv_preamble(env) + spectrum_csv(m));
      } else {
        env["spectrum"] = spectrum_json(m);
        emit(out, sp_out, env.dump(2) + "\n");
      }
      return 0;
    }

    if (burnside->parsed()) {
      auto G = group_from(bs_group);
      auto lat = subgroup_lattice(G);
      auto ring = std::make_shared<BurnsideRing>(lat);
      json env = envelope("burnside", {{"group", bs_group}}, c);
      if (!bs_table.empty()) {
        json t = env;
        t["table"] = burnside_table_json(*ring);
        write_atomic(bs_table, t.dump(1) + "\n");
      }
      json degrees = json::array();
      if (bs_degrees) {
        const auto decomp = isotypical_decompose(G, c.repr());
        for (const auto& comp : decomp.components) {
          const BasicDegree d = ring->basic_degree(comp.irrep_id, fixed_dimensions(decomp, comp.irrep_id, *lat));
          json e = element_to_json(d.value);
          e["irrep_id"] = comp.irrep_id;
          e["irrep"] = comp.label;
          degrees.push_back(e);
        }
      }
      if (c.format == "json") {
        env["classes"] = lattice_to_json(*lat);
        if (bs_degrees) env["basic_degrees"] = degrees;
        out << env.dump(2) << "\n";
      } else {
        out << "# equinet " << kArtifactVersion << " config_hash=" << env["config_hash"].get<std::string>()
            << " seed=" << c.seed << "\n";
        out << "group order " << G->order() << ", " << lat->size() << " subgroup classes\n";
        out << "id,name,order,weyl_order,structural\n";
        for (const auto& cls : lat->classes())
          out << cls.class_id << "," << cls.name << "," << cls.order << "," << cls.weyl_order << "," << cls.label
              << "\n";
        for (const auto& d : degrees)
          out << "deg " << d["irrep"].get<std::string>() << " = " << d["text"].get<std::string>() << "\n";
      }
      return 0;
    }

    if (repr->parsed()) {
      auto G = group_from(rp_group);
      if (rp_dim != 0 && rp_dim != G->degree())
        throw ValidationError("dim: group acts on R^" + std::to_string(G->degree()) + ", not R^" +
                              std::to_string(rp_dim));
      const auto decomp = isotypical_decompose(G, c.repr());
      json env = envelope("repr", {{"group", rp_group}, {"dim", G->degree()}}, c);
      emit(out, rp_table, csv_preamble(env) + character_table_csv(decomp));
      return 0;
    }

    if (classify->parsed()) {
      const ReductionChoice red = ReductionChoice::parse(cl_red);
      check_positive(cl_pmin, "period-min");
      if (!(cl_pmax > cl_pmin)) throw ValidationError("period-max: must exceed period-min");
      const NetworkModel m = analyze_network(load_network(cl_graph), c.repr());
      const auto reps = classify_period_range(m, red, cl_pmin, cl_pmax);
      json env = envelope("classify",
                          {{"graph", cl_graph},
                           {"reduction", red.to_string()},
                           {"period_min", cl_pmin},
                           {"period_max", cl_pmax}},
                          c);
      const std::string fmt = resolve_format(c.format, cl_out, cl_out.empty() ? "table" : "json");
      if (fmt == "json") {
        json windows = json::array();
        for (const auto& r : reps) windows.push_back(report_json(r));
        env["windows"] = windows;
        emit(out, cl_out, env.dump(2) + "\n");
      } else if (fmt == "csv") {
        emit(out, cl_out, csv_preamble(env) + reports_csv(reps));
      } else {
        std::ostringstream os;
        os << csv_preamble(env);
        for (const auto& r : reps) {
          os << "lambda (" << format_number(r.lambda_lo) << ", "
             << (std::isfinite(r.lambda_hi) ? format_number(r.lambda_hi) : std::string("inf")) << ")  period ("
             << format_number(r.period_lo()) << ", "
             << (std::isfinite(r.period_hi()) ? format_number(r.period_hi()) : std::string("inf")) << ")\n";
          os << "  omega = " << r.omega.to_string() << "\n";
          os << "  primary:";
          for (const auto& t : r.primary_types) {
            os << " (" << t.name << ") k=";
            for (std::size_t i = 0; i < t.modes.size(); ++i) os << (i ? "," : "") << t.modes[i];
          }
          os << "\n  maximal:";
          for (const auto& t : r.guaranteed_types) os << " (" << t.name << ")";
          os << "\n";
        }
        out << os.str();
      }
      return 0;
    }

    if (solve->parsed()) {
      const ReductionChoice red = ReductionChoice::parse(sv_red);
      check_positive(sv_lambda, "lambda");
      check_positive(sv_tol, "tol");
      if (sv_trunc < 1) throw ValidationError("truncation: must be at least 1");
      if (sv_iter < 1) throw ValidationError("max-iter: must be at least 1");
      int j = 0, k = 0;
      {
        char comma = 0;
        std::istringstream is(sv_mode);
        if (!(is >> j >> comma >> k) || comma != ',' || !is.eof())
          throw ValidationError("seed-mode: expected j,k");
      }
      const NetworkModel m = analyze_network(load_network(sv_graph), c.repr());
      const FrequencyLattice freq = critical_values(m.spectrum, red, sv_lambda * 1.01 + 1.0);
      for (const auto& p : freq.points)
        if (std::abs(p.value - sv_lambda) < 1e-9 * p.value)
          throw ValidationError("lambda: critical value " + format_number(p.value) + ", solve is undefined there");
      const FourierState seed = seed_state(m.spectrum, j, k, sv_lambda, red, sv_trunc, m.spec.nonlinearity,
                                           sv_column, sv_amp);
      NewtonOptions opts;
      opts.tol = sv_tol;
      opts.max_iter = sv_iter;
      opts.analytic_jacobian = !sv_fd;
      NewtonResult res;
      try {
        res = newton_solve(seed, m.laplacian, m.spec.nonlinearity, opts);
      } catch (const ValidationError& e) {
        throw ValidationError("not found at truncation " + std::to_string(sv_trunc) + " / seed set {mode " + sv_mode +
                              ", column " + std::to_string(sv_column) + "}: " + e.what());
      }
      auto rel = reduction_relations(red, m.spec.n, red.kind != ReductionKind::Z2m_d);
      const auto iso = spatial_relations(isotropy_generators(*m.group, m.spectrum.spaces[j].basis.col(sv_column)));
      rel.insert(rel.end(), iso.begin(), iso.end());
      const SymmetryReport sym = verify_symmetry(res.state, rel);
      const AprioriReport ap = apriori_check(res.state, m.spec.nonlinearity, m.laplacian);
      json config{{"graph", sv_graph}, {"lambda", sv_lambda}, {"reduction", red.to_string()},
                  {"seed_mode", sv_mode},  {"column", sv_column},  {"truncation", sv_trunc},
                  {"tol", sv_tol},         {"max_iter", sv_iter},  {"fd_jacobian", sv_fd}};
      if (sv_amp) config["amplitude"] = *sv_amp;
      json env = envelope("solve", config, c);
      env["orbit"] = orbit_json(res.state, res, sym, ap);
      if (!sv_out.empty()) write_atomic(sv_out, env.dump(2) + "\n");
      if (!sv_ts.empty()) write_atomic(sv_ts, csv_preamble(env) + timeseries_csv(res.state));
      out << "converged in " << res.iterations << " iterations, residual " << res.residual_norm << "\n";
      out << "sup norm " << ap.sup_abs << " (Nagumo radius " << ap.nagumo_M << ")\n";
      for (const auto& r : sym.relations)
        out << (r.pass ? "PASS " : "FAIL ") << r.description << "  max violation " << r.max_violation << "\n";
      if (ap.warning) err << "warning: " << ap.message << "\n";
      return 0;
    }

    if (verify->parsed()) {
      const auto checks = verify_reference(vp_case);
      out << format_checks(checks);
      int failed = 0;
      for (const auto& ch : checks) failed += ch.pass ? 0 : 1;
      out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
      return failed == 0 ? 0 : 3;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace equinet::cli
