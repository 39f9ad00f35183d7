#include "equinet/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "equinet/naming.hpp"

namespace equinet {

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::size_t ElementSet::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

ElementSet SubgroupLattice::closure(const std::vector<std::size_t>& gens) const {
  ElementSet out(order_);
  const std::size_t id = group_->identity_index();
  out.insert(id);
  std::vector<std::size_t> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto g : gens) {
      std::size_t x = mul(queue[q], g);
      if (!out.contains(x)) {
        out.insert(x);
        queue.push_back(x);
      }
    }
  }
  return out;
}

namespace {

struct Found {
  ElementSet set;
  std::vector<std::size_t> gens;
  std::vector<ElementSet> conjugates;
  std::vector<std::size_t> canonical;  // smallest sorted member list over conjugates
};

}  // namespace

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::size_t cap)
    : group_(std::move(group)) {
  order_ = group_->order();
  if (order_ > cap)
    throw ValidationError("group too large: order " + std::to_string(order_) +
                          " exceeds lattice cap " + std::to_string(cap));
  cayley_.resize(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      cayley_[a * order_ + b] = static_cast<std::uint32_t>(group_->multiply(a, b));

  std::vector<Found> found;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;

  auto conjugate = [&](const ElementSet& H, std::size_t g) {
    ElementSet out(order_);
    const std::size_t gi = group_->inverse(g);
    for (auto h : H.members()) out.insert(mul(mul(g, h), gi));
    return out;
  };

  auto add = [&](ElementSet H, std::vector<std::size_t> gens) {
    if (seen.count(H)) return;
    Found f;
    f.gens = std::move(gens);
    for (std::size_t g = 0; g < order_; ++g) {
      ElementSet c = conjugate(H, g);
      if (seen.emplace(c, static_cast<int>(found.size())).second) f.conjugates.push_back(std::move(c));
    }
    f.canonical = f.conjugates.front().members();
    for (const auto& c : f.conjugates) f.canonical = std::min(f.canonical, c.members());
    f.set = std::move(H);
    found.push_back(std::move(f));
  };

  add(closure({}), {});
  for (std::size_t g = 0; g < order_; ++g) add(closure({g}), {g});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < order_; ++g) {
      if (found[i].set.contains(g)) continue;
      auto gens = found[i].gens;
      gens.push_back(g);
      ElementSet K = closure(gens);
      if (!seen.count(K)) add(std::move(K), std::move(gens));
    }
  }

  std::vector<int> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto sa = found[a].canonical.size(), sb = found[b].canonical.size();
    if (sa != sb) return sa > sb;
    return found[a].canonical < found[b].canonical;
  });

  const int N = static_cast<int>(found.size());
  classes_.resize(N);
  conjugates_.resize(N);
  for (int id = 0; id < N; ++id) {
    Found& f = found[perm[id]];
    SubgroupClass& c = classes_[id];
    c.class_id = id;
    c.representative = f.canonical;
    c.order = static_cast<int>(f.canonical.size());
    c.conjugate_count = static_cast<int>(f.conjugates.size());
    if (order_ % f.conjugates.size() != 0) throw InternalError("conjugacy class size does not divide |G|");
    c.normalizer_order = static_cast<int>(order_ / f.conjugates.size());
    if (c.normalizer_order % c.order != 0) throw InternalError("normalizer order not divisible by |H|");
    c.weyl_order = c.normalizer_order / c.order;
    conjugates_[id] = std::move(f.conjugates);
    std::sort(conjugates_[id].begin(), conjugates_[id].end(),
              [](const ElementSet& a, const ElementSet& b) { return a.members() < b.members(); });
    for (const auto& s : conjugates_[id]) class_lookup_[s] = id;
  }

  n_table_.assign(static_cast<std::size_t>(N) * N, 0);
  for (int L = 0; L < N; ++L) {
    ElementSet rep(order_);
    for (auto e : classes_[L].representative) rep.insert(e);
    for (int H = 0; H < N; ++H) {
      if (classes_[H].order % classes_[L].order != 0) continue;
      int count = 0;
      for (const auto& c : conjugates_[H]) count += rep.subset_of(c);
      n_table_[static_cast<std::size_t>(L) * N + H] = count;
    }
  }
  for (int L = 0; L < N; ++L) {
    for (int H = 0; H < N; ++H)
      if (H != L && n(L, H) > 0) classes_[L].covers.push_back(H);
    for (int H : classes_[L].covers) {
      bool immediate = true;
      for (int M : classes_[L].covers)
        if (M != H && n(M, H) > 0) immediate = false;
      if (immediate) classes_[L].immediate_covers.push_back(H);
    }
  }
  assign_names();
}

void SubgroupLattice::assign_names() {
  GammaStructure gs(*group_);
  family_ = gs.family_name();
  family_names_ = gs.family() != GammaFamily::Other;
  std::map<std::string, int> used;
  for (auto& c : classes_) {
    std::set<Perm> K, L;
    for (auto e : c.representative) {
      const auto& g = group_->element(e);
      K.insert(g.perm);
      if (g.sign > 0) L.insert(g.perm);
      if (g.sign < 0 && (g * g).is_identity() && g.trace() == -g.degree()) c.contains_antipode = true;
    }
    c.projection_order = static_cast<int>(K.size());
    c.kernel_order = static_cast<int>(L.size());
    c.twisted = c.kernel_order != c.projection_order && !c.contains_antipode;
    c.label = "H" + std::to_string(c.order) + "[K" + std::to_string(c.projection_order) + ",L" +
              std::to_string(c.kernel_order) + (c.contains_antipode ? ",-1" : "") + "]";
    c.name = gs.signed_name(K, L, c.contains_antipode);
    if (c.name.empty()) c.name = c.label;
    ++used[c.name];
  }
  std::map<std::string, int> counter;
  for (auto& c : classes_)
    if (used[c.name] > 1) c.name += "#" + std::to_string(++counter[c.name]);
}

void SubgroupLattice::check_id(int id) const {
  if (id < 0 || id >= size()) throw ValidationError("no such class: " + std::to_string(id));
}

const SubgroupClass& SubgroupLattice::cls(int id) const {
  check_id(id);
  return classes_[id];
}

int SubgroupLattice::n(int L, int H) const {
  check_id(L);
  check_id(H);
  return n_table_[static_cast<std::size_t>(L) * size() + H];
}

bool SubgroupLattice::is_subconjugate(int L, int H) const { return n(L, H) > 0; }

const std::vector<ElementSet>& SubgroupLattice::conjugates(int id) const {
  check_id(id);
  return conjugates_[id];
}

int SubgroupLattice::class_of(const ElementSet& subgroup) const {
  auto it = class_lookup_.find(subgroup);
  return it == class_lookup_.end() ? -1 : it->second;
}

int SubgroupLattice::find(const std::string& name) const {
  for (const auto& c : classes_)
    if (c.name == name) return c.class_id;
  return -1;
}

std::shared_ptr<const SubgroupLattice> subgroup_lattice(std::shared_ptr<const FiniteGroup> G,
                                                        std::size_t cap) {
  return std::make_shared<const SubgroupLattice>(std::move(G), cap);
}

bool is_subconjugate(const SubgroupLattice& lattice, int L, int H) {
  return lattice.is_subconjugate(L, H);
}

}  // namespace equinet
