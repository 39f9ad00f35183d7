#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "equinet/error.hpp"

namespace equinet {

// Signed permutation (perm, sign) acting on R^n by e_i -> sign * e_{perm(i)}.
struct GroupElement {
  std::vector<int> perm;
  int sign = 1;

  static GroupElement identity(int degree);
  int degree() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  GroupElement inverse() const;
  // Number of fixed coordinates times sign: trace of the action matrix.
  int trace() const;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

// (perm, sign) * (perm', sign') = (perm o perm', sign * sign')
GroupElement operator*(const GroupElement& a, const GroupElement& b);

std::string to_string(const GroupElement& g);

// Throws ValidationError("invalid generator ...") unless g is a signed
// permutation of the given degree.
void validate_element(const GroupElement& g, int degree);

class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1000000;

  FiniteGroup() = default;

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  // Index of g, or order() if g is not in the group.
  std::size_t index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g) < order(); }
  std::size_t identity_index() const { return identity_; }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }

  // Index of (id, -1) if present, else order().
  std::size_t antipode_index() const;

  // Conjugacy classes of elements, each sorted, ordered by smallest member.
  // Computed on first use.
  const std::vector<std::vector<std::size_t>>& element_classes() const;
  std::size_t element_class_of(std::size_t i) const;

  friend FiniteGroup close_generators(int degree, const std::vector<GroupElement>& gens,
                                      std::size_t cap);

 private:
  void finish();

  int degree_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> generators_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
  struct ClassCache {
    std::once_flag once;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;
  };
  const ClassCache& class_cache() const;
  std::shared_ptr<ClassCache> cache_ = std::make_shared<ClassCache>();
};

FiniteGroup close_generators(int degree, const std::vector<GroupElement>& gens,
                             std::size_t cap = FiniteGroup::kDefaultCap);

// Adds the antipodal generator (id, -1) to a list of generators.
std::vector<GroupElement> with_antipode(int degree, std::vector<GroupElement> gens);

// Generators of Gamma x Z2 for the named presets "Z2-chain(n)", "Dn-cycle(n)"
// and "S4-truncated-octahedron" (also accepts "chain4", "cycle4", "octahedron").
struct GroupPreset {
  int degree = 0;
  std::vector<GroupElement> generators;
};
bool is_group_preset(const std::string& name);
GroupPreset group_preset(const std::string& name);

}  // namespace equinet
