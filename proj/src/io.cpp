#include "equinet/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "equinet/error.hpp"

namespace equinet {

namespace fs = std::filesystem;

std::string config_hash(const json& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("out: cannot open " + path + " for writing");
    out << content;
    if (!out) throw ValidationError("out: write failed for " + path);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw ValidationError("out: cannot rename into " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("file not found: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": invalid JSON: " + e.what());
  }
}

GroupPreset parse_group(const json& j) {
  if (!j.is_object()) throw ValidationError("group: expected an object");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw ValidationError("degree: missing or not an integer");
  GroupPreset g;
  g.degree = j["degree"].get<int>();
  if (g.degree < 1) throw ValidationError("degree: must be positive");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ValidationError("generators: missing or not an array");
  for (const auto& e : j["generators"]) {
    GroupElement el;
    if (!e.contains("perm") || !e["perm"].is_array()) throw ValidationError("generators: entry without perm");
    for (const auto& p : e["perm"]) {
      if (!p.is_number_integer()) throw ValidationError("generators: perm entries must be integers");
      el.perm.push_back(p.get<int>());
    }
    el.sign = e.value("sign", 1);
    if (static_cast<int>(el.perm.size()) != g.degree)
      throw ValidationError("invalid generator: perm length differs from degree");
    validate_element(el, g.degree);
    g.generators.push_back(el);
  }
  return g;
}

GroupPreset load_group(const std::string& source) {
  if (is_group_preset(source)) return group_preset(source);
  if (source.rfind("preset:", 0) == 0) throw ValidationError("group: unknown preset " + source);
  return parse_group(parse_json_file(source));
}

json group_to_json(int degree, const std::vector<GroupElement>& generators) {
  json gens = json::array();
  for (const auto& g : generators) gens.push_back({{"perm", g.perm}, {"sign", g.sign}});
  return {{"degree", degree}, {"generators", gens}};
}

Nonlinearity parse_nonlinearity(const json& spec) {
  const json j = spec.is_string() ? json{{"tag", spec}} : spec;
  if (!j.is_object()) throw ValidationError("nonlinearity: expected an object");
  const std::string tag = j.value("tag", std::string("cubic"));
  Nonlinearity nl;
  if (tag == "cubic") {
    nl = Nonlinearity::cubic();
  } else if (tag == "cubic_quintic") {
    nl = Nonlinearity::cubic_quintic();
  } else if (tag == "polynomial") {
    if (!j.contains("coeffs") || !j["coeffs"].is_object()) throw ValidationError("nonlinearity.coeffs: missing");
    std::map<int, double> c;
    for (const auto& [k, v] : j["coeffs"].items()) {
      int p = 0;
      auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), p);
      if (ec != std::errc() || ptr != k.data() + k.size() || !v.is_number())
        throw ValidationError("nonlinearity.coeffs: keys must be integer powers with numeric values");
      c[p] = v.get<double>();
    }
    nl = Nonlinearity::polynomial(c);
  } else {
    throw ValidationError("nonlinearity.tag: unknown '" + tag + "'");
  }
  if (j.contains("nagumo_M")) {
    if (!j["nagumo_M"].is_number() || !(j["nagumo_M"].get<double>() > 0))
      throw ValidationError("nonlinearity.nagumo_M: must be a positive number");
    nl.declared_nagumo_M = j["nagumo_M"].get<double>();
  }
  return nl;
}

json nonlinearity_to_json(const Nonlinearity& nl) {
  json c = json::object();
  for (const auto& [p, v] : nl.coeffs()) c[std::to_string(p)] = v;
  json j{{"tag", nl.tag()}, {"coeffs", c}};
  if (nl.declared_nagumo_M) j["nagumo_M"] = *nl.declared_nagumo_M;
  return j;
}

NetworkSpec parse_network(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw ValidationError("graph: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ValidationError("n: missing or not an integer");
  NetworkSpec spec;
  spec.name = j.value("name", std::string("graph"));
  spec.n = j["n"].get<int>();
  if (!j.contains("edges") || !j["edges"].is_array()) throw ValidationError("edges: missing or not an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ValidationError("edges: each edge must be a pair of integers");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a > b) std::swap(a, b);
    spec.edges.emplace_back(a, b);
  }
  if (!j.contains("symmetry")) throw ValidationError("symmetry: missing");
  GroupPreset g;
  const auto& s = j["symmetry"];
  if (s.is_string()) {
    const std::string name = s.get<std::string>();
    if (is_group_preset(name)) {
      g = group_preset(name);
    } else {
      fs::path p(name);
      if (p.is_relative()) p = fs::path(base_dir) / p;
      g = load_group(p.string());
    }
  } else {
    g = parse_group(s);
  }
  if (g.degree != spec.n) throw ValidationError("symmetry: group degree differs from n");
  spec.symmetry = g.generators;
  if (j.contains("nonlinearity")) spec.nonlinearity = parse_nonlinearity(j["nonlinearity"]);
  spec.validate();
  return spec;
}

NetworkSpec load_network(const std::string& source) {
  if (is_network_preset(source)) return network_preset(source);
  if (source.rfind("preset:", 0) == 0) throw ValidationError("graph: unknown preset " + source);
  const fs::path p(source);
  return parse_network(parse_json_file(source), p.has_parent_path() ? p.parent_path().string() : ".");
}

json element_to_json(const BurnsideElement& a) {
  json terms = json::array();
  for (const auto& [id, c] : a.coeffs()) {
    const auto& cls = a.lattice()->cls(id);
    terms.push_back({{"class_id", id}, {"name", cls.name}, {"coefficient", c}});
  }
  return {{"text", a.to_string()}, {"terms", terms}};
}

json lattice_to_json(const SubgroupLattice& lattice) {
  json classes = json::array();
  for (const auto& c : lattice.classes()) {
    classes.push_back({{"class_id", c.class_id},
                       {"name", c.name},
                       {"structural", c.label},
                       {"order", c.order},
                       {"weyl_order", c.weyl_order},
                       {"conjugates", c.conjugate_count},
                       {"twisted", c.twisted},
                       {"immediate_covers", c.immediate_covers}});
  }
  return classes;
}

json burnside_table_json(const BurnsideRing& ring) {
  const auto& lat = ring.lattice();
  json table = json::array();
  for (int h = 0; h < lat.size(); ++h)
    for (int k = h; k < lat.size(); ++k) {
      json prod = json::object();
      const BurnsideElement p = ring.generator_product(h, k);
      for (const auto& [id, c] : p.coeffs()) prod[std::to_string(id)] = c;
      table.push_back({{"H", h}, {"K", k}, {"product", prod}});
    }
  return {{"classes", lattice_to_json(lat)}, {"products", table}};
}

json basic_degrees_json(const NetworkModel& model) {
  json out = json::array();
  for (const auto& [id, d] : model.degrees) {
    json e = element_to_json(d.value);
    e["irrep_id"] = id;
    e["irrep"] = model.decomposition.component(id).label;
    out.push_back(e);
  }
  return out;
}

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

static std::string format_short(double x) {
  if (std::abs(x) < 1e-12) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

static std::string format_character(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return std::to_string(static_cast<long long>(r));
  return format_number(x);
}

std::string character_table_csv(const IsotypicalDecomposition& decomp) {
  const auto cols = character_columns(*decomp.group);
  std::ostringstream os;
  os << "irrep";
  for (const auto& c : cols) os << ",\"" << c.label << "\"";
  os << "\n";
  for (const auto& comp : decomp.components) {
    os << comp.label;
    for (const auto& c : cols) os << "," << format_character(comp.character[c.element_class]);
    os << "\n";
  }
  return os.str();
}

static std::string irrep_list(const NetworkModel& model, const Eigenspace& sp) {
  std::string s;
  for (const auto& l : sp.labels) {
    if (!s.empty()) s += "+";
    if (l.multiplicity > 1) s += std::to_string(l.multiplicity);
    s += model.decomposition.component(l.irrep_id).label;
  }
  return s;
}

std::string spectrum_csv(const NetworkModel& model) {
  std::ostringstream os;
  os << "mu,omega,irrep,dim\n";
  for (const auto& sp : model.spectrum.spaces)
    os << format_short(sp.mu) << "," << format_short(sp.omega) << "," << irrep_list(model, sp) << "," << sp.dim
       << "\n";
  return os.str();
}

json spectrum_json(const NetworkModel& model) {
  json rows = json::array();
  for (const auto& sp : model.spectrum.spaces)
    rows.push_back({{"mu", sp.mu},
                    {"omega", sp.omega},
                    {"irrep", irrep_list(model, sp)},
                    {"dim", sp.dim},
                    {"accidental", sp.accidental}});
  return rows;
}

static json type_json(const GuaranteedType& t) {
  json gens = json::array();
  for (const auto& g : t.generators) gens.push_back({{"perm", g.perm}, {"sign", g.sign}});
  return {{"class_id", t.class_id}, {"name", t.name},     {"structural", t.structural},
          {"twisted", t.twisted},   {"coefficient", t.coefficient}, {"irrep_ids", t.irrep_ids},
          {"modes", t.modes},       {"label", t.label},           {"generators", gens}};
}

static json bound(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json report_json(const InvariantReport& rep) {
  json factors = json::array();
  for (const auto& f : rep.factors) {
    json cr = json::array();
    for (const auto& [j, k] : f.crossings) cr.push_back({{"j", j}, {"k", k}});
    factors.push_back(
        {{"irrep_id", f.irrep_id}, {"irrep", f.irrep}, {"count", f.count}, {"survives", f.survives}, {"crossings", cr}});
  }
  auto list = [](const std::vector<GuaranteedType>& v) {
    json a = json::array();
    for (const auto& t : v) a.push_back(type_json(t));
    return a;
  };
  return {{"window", {bound(rep.lambda_lo), bound(rep.lambda_hi)}},
          {"period_window", {bound(rep.period_lo()), bound(rep.period_hi())}},
          {"lambda", rep.lambda},
          {"reduction", rep.reduction.to_string()},
          {"factors", factors},
          {"omega_H", element_to_json(rep.omega)},
          {"guaranteed_types", list(rep.guaranteed_types)},
          {"primary_types", list(rep.primary_types)},
          {"support", list(rep.support)}};
}

std::string reports_csv(const std::vector<InvariantReport>& reps) {
  std::ostringstream os;
  os << "lambda_lo,lambda_hi,period_lo,period_hi,reduction,omega_H,guaranteed_types,primary_types\n";
  auto names = [](const std::vector<GuaranteedType>& v) {
    std::string s;
    for (const auto& t : v) s += (s.empty() ? "" : ";") + t.name;
    return s;
  };
  auto num = [](double x) { return std::isfinite(x) ? format_number(x) : std::string("inf"); };
  for (const auto& r : reps)
    os << num(r.lambda_lo) << "," << num(r.lambda_hi) << "," << num(r.period_lo()) << "," << num(r.period_hi())
       << "," << r.reduction.to_string() << ",\"" << r.omega.to_string() << "\",\"" << names(r.guaranteed_types)
       << "\",\"" << names(r.primary_types) << "\"\n";
  return os.str();
}

json orbit_json(const FourierState& state, const NewtonResult& result, const SymmetryReport& sym,
                const AprioriReport& apriori) {
  json coeffs = json::array();
  for (std::size_t a = 0; a < state.modes.size(); ++a) {
    std::vector<double> s(state.sine.cols()), c(state.cosine.cols());
    for (int i = 0; i < state.vertices(); ++i) {
      s[i] = state.sine(a, i);
      c[i] = state.cosine(a, i);
    }
    json m{{"k", state.modes[a]}, {"sine", s}};
    if (state.reduction.has_cosine()) m["cosine"] = c;
    coeffs.push_back(m);
  }
  json rels = json::array();
  for (const auto& r : sym.relations)
    rels.push_back({{"relation", r.description}, {"max_violation", r.max_violation}, {"pass", r.pass}});
  json ap{{"sup_norm", apriori.sup_norm}, {"sup_abs", apriori.sup_abs}, {"nagumo_M", apriori.nagumo_M},
          {"warning", apriori.warning}};
  if (apriori.warning) ap["message"] = apriori.message;
  return {{"lambda", state.lambda},
          {"period", 2.0 * std::numbers::pi * state.lambda},
          {"reduction", state.reduction.to_string()},
          {"truncation", state.truncation},
          {"iterations", result.iterations},
          {"residual_norm", result.residual_norm},
          {"sup_norm", apriori.sup_abs},
          {"coefficients", coeffs},
          {"symmetry", {{"pass", sym.pass}, {"relations", rels}}},
          {"apriori", ap}};
}

std::string timeseries_csv(const FourierState& state, int samples) {
  std::ostringstream os;
  os << "t";
  for (int i = 0; i < state.vertices(); ++i) os << ",x" << i + 1;
  os << "\n";
  for (int m = 0; m <= samples; ++m) {
    const double t = 2.0 * std::numbers::pi * m / samples;
    const Eigen::VectorXd x = state.evaluate(t);
    os << format_number(t);
    for (int i = 0; i < x.size(); ++i) os << "," << format_number(x(i));
    os << "\n";
  }
  return os.str();
}

}  // namespace equinet
