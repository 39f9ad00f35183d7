#include "equinet/naming.hpp"

#include <algorithm>
#include <deque>

namespace equinet {

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm invert(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

namespace {

std::set<Perm> close(const std::vector<Perm>& gens, int degree) {
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> out{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm nxt = compose(cur, g);
      if (out.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return out;
}

bool is_klein(const std::set<Perm>& K, const GammaStructure& gs) {
  if (K.size() != 4) return false;
  for (const auto& p : K)
    if (gs.perm_order(p) > 2) return false;
  return true;
}

std::string dihedral_name(const std::set<Perm>& K, const GammaStructure& gs) {
  bool rot_only = true, vertex = false, edge = false;
  for (const auto& p : K) {
    if (gs.is_rotation(p)) continue;
    rot_only = false;
    (gs.has_fixed_point(p) || gs.dihedral_n() % 2 == 1 ? vertex : edge) = true;
  }
  if (rot_only) return "Z" + std::to_string(K.size());
  std::string name = "D" + std::to_string(K.size() / 2);
  if (edge && !vertex) name += "~";
  return name;
}

}  // namespace

GammaStructure::GammaStructure(const FiniteGroup& G) {
  for (const auto& g : G.elements()) gamma_.insert(g.perm);
  const int degree = G.degree();
  std::vector<Perm> all(gamma_.begin(), gamma_.end());
  const std::size_t order = gamma_.size();

  std::vector<Perm> commutators;
  for (const auto& a : all)
    for (const auto& b : all) commutators.push_back(compose(compose(a, b), compose(invert(a), invert(b))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  derived_ = close(commutators, degree);

  if (order == 1) {
    family_ = GammaFamily::Trivial;
    return;
  }
  if (order == 2) {
    family_ = GammaFamily::Z2;
    transposition_ = *std::find_if(all.begin(), all.end(), [&](const Perm& p) { return perm_order(p) == 2; });
    return;
  }

  bool central_trivial = true;
  for (const auto& z : all) {
    if (perm_order(z) == 1) continue;
    bool central = std::all_of(all.begin(), all.end(),
                               [&](const Perm& a) { return compose(a, z) == compose(z, a); });
    if (central) central_trivial = false;
  }
  if (order == 24 && central_trivial && derived_.size() == 12) {
    family_ = GammaFamily::S4;
    for (const auto& p : all) {
      if (perm_order(p) == 2 && !in_derived(p) && transposition_.empty()) transposition_ = p;
      if (perm_order(p) == 4 && rotation_.empty()) rotation_ = p;
    }
    return;
  }

  if (order % 2 == 0 && order >= 6) {
    const int m = static_cast<int>(order / 2);
    for (const auto& z : all) {
      if (perm_order(z) != m) continue;
      std::set<Perm> R = close({z}, degree);
      bool ok = true;
      for (const auto& p : all) {
        if (R.count(p)) continue;
        if (perm_order(p) != 2 || compose(compose(p, z), p) != invert(z)) ok = false;
      }
      if (!ok) continue;
      family_ = GammaFamily::Dihedral;
      dihedral_n_ = m;
      rotations_ = R;
      rotation_ = z;
      for (const auto& p : all) {
        if (R.count(p)) continue;
        if (has_fixed_point(p) && vertex_reflection_.empty()) vertex_reflection_ = p;
        if (!has_fixed_point(p) && edge_reflection_.empty()) edge_reflection_ = p;
      }
      return;
    }
  }
  family_ = GammaFamily::Other;
}

std::string GammaStructure::family_name() const {
  switch (family_) {
    case GammaFamily::Trivial: return "trivial";
    case GammaFamily::Z2: return "Z2";
    case GammaFamily::Dihedral: return "D" + std::to_string(dihedral_n_);
    case GammaFamily::S4: return "S4";
    case GammaFamily::Other: return "other";
  }
  return "other";
}

int GammaStructure::perm_order(const Perm& p) const {
  Perm q = p;
  int k = 1;
  auto is_id = [](const Perm& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != static_cast<int>(i)) return false;
    return true;
  };
  while (!is_id(q)) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

bool GammaStructure::has_fixed_point(const Perm& p) const {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i)) return true;
  return false;
}

std::string GammaStructure::subgroup_name(const std::set<Perm>& K) const {
  const std::size_t k = K.size();
  switch (family_) {
    case GammaFamily::Trivial: return "Z1";
    case GammaFamily::Z2: return k == 1 ? "Z1" : "Z2";
    case GammaFamily::Dihedral: return k == 1 ? "Z1" : dihedral_name(K, *this);
    case GammaFamily::S4: {
      if (k == 1) return "Z1";
      if (k == 24) return "S4";
      if (k == 12) return "A4";
      if (k == 8) return "D4";
      if (k == 6) return "D3";
      if (k == 3) return "Z3";
      if (k == 4) {
        if (!is_klein(K, *this)) return "Z4";
        return std::all_of(K.begin(), K.end(), [&](const Perm& p) { return in_derived(p); }) ? "V4" : "D2";
      }
      if (k == 2) {
        for (const auto& p : K)
          if (perm_order(p) == 2) return in_derived(p) ? "Z2" : "D1";
      }
      return "";
    }
    case GammaFamily::Other: return "";
  }
  return "";
}

std::string GammaStructure::signed_name(const std::set<Perm>& K, const std::set<Perm>& L,
                                        bool antipode) const {
  const std::string kname = subgroup_name(K);
  if (kname.empty()) return "";
  if (antipode) return kname + "xZ2";
  if (K.size() == L.size()) return kname;
  const std::string lname = subgroup_name(L);
  if (family_ == GammaFamily::S4) {
    if (kname == "S4") return "S4^-";
    if (kname == "D4") {
      if (lname == "Z4") return "D4^z";
      if (lname == "D2") return "D4^d";
      if (lname == "V4") return "D4^dhat";
    }
    if (kname == "D3") return "D3^z";
    if (kname == "D2") return lname == "D1" ? "D2^d" : "D2^z";
    if (kname == "D1") return "D1^z";
    return kname + "^-";
  }
  if (family_ == GammaFamily::Dihedral) {
    if (kname[0] == 'Z') return kname + "^-";
    if (lname[0] == 'Z') return kname + "^z";
    return kname + (lname.back() == '~' ? "^dhat" : "^d");
  }
  return kname + "^-";
}

}  // namespace equinet
