#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "equinet/group.hpp"

namespace equinet {

// Set of element indices of a FiniteGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool subset_of(const ElementSet& o) const;
  std::size_t size() const;
  std::vector<std::size_t> members() const;

  bool operator==(const ElementSet& o) const { return words_ == o.words_; }
  std::size_t hash() const;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

struct SubgroupClass {
  int class_id = 0;
  std::vector<std::size_t> representative;  // sorted element indices
  int order = 0;
  int normalizer_order = 0;
  int weyl_order = 0;
  int conjugate_count = 0;
  std::vector<int> covers;            // all classes strictly above
  std::vector<int> immediate_covers;  // minimal elements of covers

  // Structure with respect to the sign character of Gamma x Z2.
  int projection_order = 0;  // |K|, K = image in Gamma
  int kernel_order = 0;      // |L|, L = {g : (g,+1) in H}
  bool contains_antipode = false;
  bool twisted = false;  // L != K and (id,-1) not in H

  std::string label;  // structural: "H<order>[K=..,L=..,±]"
  std::string name;   // family name, e.g. "D4^d", "S4xZ2"
};

class SubgroupLattice {
 public:
  static constexpr std::size_t kDefaultCap = 2048;

  explicit SubgroupLattice(std::shared_ptr<const FiniteGroup> group,
                           std::size_t cap = kDefaultCap);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }

  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const SubgroupClass& cls(int id) const;

  // Class 0 is the whole group; the last class is the trivial subgroup.
  int top() const { return 0; }
  int bottom() const { return size() - 1; }

  // Number of conjugates of H containing the representative of L.
  int n(int L, int H) const;
  bool is_subconjugate(int L, int H) const;

  const std::vector<ElementSet>& conjugates(int id) const;
  // Class of an arbitrary subgroup, -1 if the set is not a subgroup.
  int class_of(const ElementSet& subgroup) const;
  int find(const std::string& name) const;  // -1 if absent

  std::size_t mul(std::size_t a, std::size_t b) const { return cayley_[a * order_ + b]; }
  ElementSet closure(const std::vector<std::size_t>& gens) const;

  // True when the Gamma family was recognised and names follow it.
  bool family_names() const { return family_names_; }
  const std::string& family() const { return family_; }

 private:
  void check_id(int id) const;
  void assign_names();

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t order_ = 0;
  std::vector<std::uint32_t> cayley_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<ElementSet>> conjugates_;
  std::unordered_map<ElementSet, int, ElementSetHash> class_lookup_;
  std::vector<int> n_table_;
  bool family_names_ = false;
  std::string family_;
};

std::shared_ptr<const SubgroupLattice> subgroup_lattice(std::shared_ptr<const FiniteGroup> G,
                                                        std::size_t cap = SubgroupLattice::kDefaultCap);

bool is_subconjugate(const SubgroupLattice& lattice, int L, int H);

}  // namespace equinet
