#include "equinet/group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <regex>
#include <sstream>

#include "equinet/octahedron.hpp"

namespace equinet {

namespace {

// Point i < n stands for +e_i, point i + n for -e_i.
std::vector<std::uint32_t> to_points(const GroupElement& g) {
  const auto n = static_cast<std::uint32_t>(g.perm.size());
  std::vector<std::uint32_t> pts(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto p = static_cast<std::uint32_t>(g.perm[i]);
    pts[i] = g.sign > 0 ? p : p + n;
    pts[i + n] = g.sign > 0 ? p + n : p;
  }
  return pts;
}

GroupElement from_points(const std::vector<std::uint32_t>& pts) {
  const std::size_t n = pts.size() / 2;
  GroupElement g;
  g.perm.resize(n);
  g.sign = pts[0] < n ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) g.perm[i] = static_cast<int>(pts[i] % n);
  return g;
}

std::vector<std::uint32_t> compose_points(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::string key_of(const std::vector<std::uint32_t>& pts) {
  std::string k(pts.size() * sizeof(std::uint32_t), '\0');
  std::memcpy(k.data(), pts.data(), k.size());
  return k;
}

}  // namespace

GroupElement GroupElement::identity(int degree) {
  GroupElement g;
  g.perm.resize(degree);
  for (int i = 0; i < degree; ++i) g.perm[i] = i;
  return g;
}

bool GroupElement::is_identity() const {
  if (sign != 1) return false;
  for (int i = 0; i < degree(); ++i)
    if (perm[i] != i) return false;
  return true;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  g.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) g.perm[perm[i]] = static_cast<int>(i);
  g.sign = sign;
  return g;
}

int GroupElement::trace() const {
  int fixed = 0;
  for (int i = 0; i < degree(); ++i) fixed += perm[i] == i;
  return sign * fixed;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement c;
  c.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i]];
  c.sign = a.sign * b.sign;
  return c;
}

std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << "([";
  for (std::size_t i = 0; i < g.perm.size(); ++i) os << (i ? "," : "") << g.perm[i];
  os << "]," << (g.sign > 0 ? "+1" : "-1") << ")";
  return os.str();
}

void validate_element(const GroupElement& g, int degree) {
  if (g.degree() != degree)
    throw ValidationError("invalid generator: expected " + std::to_string(degree) +
                          " images, got " + std::to_string(g.degree()));
  if (g.sign != 1 && g.sign != -1) throw ValidationError("invalid generator: sign must be +1 or -1");
  std::vector<char> seen(degree, 0);
  for (int p : g.perm) {
    if (p < 0 || p >= degree || seen[p])
      throw ValidationError("invalid generator: " + to_string(g) + " is not a bijection");
    seen[p] = 1;
  }
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  if (g.degree() != degree_) return order();
  auto it = lookup_.find(key_of(to_points(g)));
  return it == lookup_.end() ? order() : it->second;
}

std::size_t FiniteGroup::multiply(std::size_t i, std::size_t j) const {
  return index_of(elements_[i] * elements_[j]);
}

std::size_t FiniteGroup::antipode_index() const {
  GroupElement a = GroupElement::identity(degree_);
  a.sign = -1;
  return index_of(a);
}

void FiniteGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  lookup_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_[key_of(to_points(elements_[i]))] = i;
  identity_ = index_of(GroupElement::identity(degree_));
  inverses_.resize(order());
  for (std::size_t i = 0; i < order(); ++i) inverses_[i] = index_of(elements_[i].inverse());

  cache_ = std::make_shared<ClassCache>();
}

const FiniteGroup::ClassCache& FiniteGroup::class_cache() const {
  std::call_once(cache_->once, [this] {
    auto& classes = cache_->classes;
    auto& class_of = cache_->class_of;
    const std::size_t none = order();
    class_of.assign(order(), none);
    for (std::size_t i = 0; i < order(); ++i) {
      if (class_of[i] != none) continue;
      std::vector<std::size_t> cls;
      for (std::size_t g = 0; g < order(); ++g) {
        std::size_t c = index_of(elements_[g] * elements_[i] * elements_[inverses_[g]]);
        if (class_of[c] == none) {
          class_of[c] = classes.size();
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
  });
  return *cache_;
}

const std::vector<std::vector<std::size_t>>& FiniteGroup::element_classes() const {
  return class_cache().classes;
}

std::size_t FiniteGroup::element_class_of(std::size_t i) const {
  return class_cache().class_of[i];
}

FiniteGroup close_generators(int degree, const std::vector<GroupElement>& gens, std::size_t cap) {
  if (degree <= 0) throw ValidationError("invalid generator: degree must be positive");
  for (const auto& g : gens) validate_element(g, degree);

  FiniteGroup G;
  G.degree_ = degree;
  G.generators_ = gens;

  std::vector<std::vector<std::uint32_t>> gpts;
  for (const auto& g : gens) gpts.push_back(to_points(g));

  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::vector<std::uint32_t>> elems;
  auto id = to_points(GroupElement::identity(degree));
  seen.emplace(key_of(id), 0);
  elems.push_back(id);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : gpts) {
      auto next = compose_points(elems[cur], s);
      auto key = key_of(next);
      if (seen.count(key)) continue;
      if (elems.size() >= cap)
        throw ValidationError("group too large: order exceeds cap " + std::to_string(cap));
      seen.emplace(std::move(key), elems.size());
      queue.push_back(elems.size());
      elems.push_back(std::move(next));
    }
  }
  G.elements_.reserve(elems.size());
  for (const auto& p : elems) G.elements_.push_back(from_points(p));
  G.finish();
  return G;
}

std::vector<GroupElement> with_antipode(int degree, std::vector<GroupElement> gens) {
  GroupElement a = GroupElement::identity(degree);
  a.sign = -1;
  if (std::find(gens.begin(), gens.end(), a) == gens.end()) gens.push_back(a);
  return gens;
}

namespace {

struct ParsedPreset {
  std::string family;
  int n = 0;
};

bool parse_preset(const std::string& raw, ParsedPreset& out) {
  std::string name = raw;
  if (name.rfind("preset:", 0) == 0) name = name.substr(7);
  std::smatch m;
  static const std::regex chain(R"((?:Z2-chain\((\d+)\))|(?:chain\(?(\d+)\)?))");
  static const std::regex cycle(R"((?:Dn-cycle\((\d+)\))|(?:cycle\(?(\d+)\)?))");
  if (std::regex_match(name, m, chain)) {
    out.family = "chain";
    out.n = std::stoi(m[1].matched ? m[1].str() : m[2].str());
    return true;
  }
  if (std::regex_match(name, m, cycle)) {
    out.family = "cycle";
    out.n = std::stoi(m[1].matched ? m[1].str() : m[2].str());
    return true;
  }
  if (name == "S4-truncated-octahedron" || name == "octahedron" ||
      name == "truncated-octahedron") {
    out.family = "octahedron";
    out.n = 24;
    return true;
  }
  return false;
}

}  // namespace

bool is_group_preset(const std::string& name) {
  ParsedPreset p;
  return parse_preset(name, p);
}

GroupPreset group_preset(const std::string& name) {
  ParsedPreset p;
  if (!parse_preset(name, p)) throw ValidationError("unknown preset '" + name + "'");
  GroupPreset out;
  out.degree = p.n;
  if (p.family == "chain") {
    if (p.n < 2) throw ValidationError("preset chain needs n >= 2");
    GroupElement xi = GroupElement::identity(p.n);
    for (int j = 0; j < p.n; ++j) xi.perm[j] = p.n - 1 - j;
    out.generators.push_back(xi);
  } else if (p.family == "cycle") {
    if (p.n < 3) throw ValidationError("preset cycle needs n >= 3");
    GroupElement zeta = GroupElement::identity(p.n), xi = GroupElement::identity(p.n);
    for (int j = 0; j < p.n; ++j) {
      zeta.perm[j] = (j + 1) % p.n;
      xi.perm[j] = (p.n - j) % p.n;
    }
    out.generators = {zeta, xi};
  } else {
    out.generators = octahedron_generators();
  }
  out.generators = with_antipode(p.n, out.generators);
  return out;
}

}  // namespace equinet
