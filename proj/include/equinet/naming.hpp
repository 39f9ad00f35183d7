#pragma once

#include <set>
#include <string>
#include <vector>

#include "equinet/group.hpp"

namespace equinet {

using Perm = std::vector<int>;

enum class GammaFamily { Trivial, Z2, Dihedral, S4, Other };

// Recognises Gamma = projection of a signed group onto permutations and
// names its subgroups and irreducibles by family conventions.
class GammaStructure {
 public:
  explicit GammaStructure(const FiniteGroup& G);

  GammaFamily family() const { return family_; }
  std::string family_name() const;
  int dihedral_n() const { return dihedral_n_; }
  const std::set<Perm>& elements() const { return gamma_; }

  int perm_order(const Perm& p) const;
  bool in_derived(const Perm& p) const { return derived_.count(p) > 0; }
  bool is_rotation(const Perm& p) const { return rotations_.count(p) > 0; }
  bool has_fixed_point(const Perm& p) const;

  // Name of a subgroup of Gamma, "" when the family is Other.
  std::string subgroup_name(const std::set<Perm>& K) const;
  // Name of a subgroup H of Gamma x Z2 from its projection K, kernel L and
  // whether it contains the antipode.
  std::string signed_name(const std::set<Perm>& K, const std::set<Perm>& L,
                          bool antipode) const;

  // Representative elements used to label characters: for S4 a
  // transposition, for dihedral groups the rotation zeta and a vertex
  // reflection, for Z2 the generator. Empty where not applicable.
  Perm transposition() const { return transposition_; }
  Perm rotation() const { return rotation_; }
  Perm vertex_reflection() const { return vertex_reflection_; }
  Perm edge_reflection() const { return edge_reflection_; }

 private:
  GammaFamily family_ = GammaFamily::Other;
  int dihedral_n_ = 0;
  std::set<Perm> gamma_;
  std::set<Perm> derived_;
  std::set<Perm> rotations_;
  Perm transposition_, rotation_, vertex_reflection_, edge_reflection_;
};

Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& a);

}  // namespace equinet
