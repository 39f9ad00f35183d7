#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "equinet/lattice.hpp"

namespace equinet {

// Integer combination of subgroup classes of one lattice.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  explicit BurnsideElement(const SubgroupLattice* lattice) : lattice_(lattice) {}

  const SubgroupLattice* lattice() const { return lattice_; }
  std::int64_t coeff(int class_id) const;
  void add(int class_id, std::int64_t value);
  const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }
  std::vector<int> support() const;
  bool is_zero() const { return coeffs_.empty(); }

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(std::int64_t s, BurnsideElement a);
  bool operator==(const BurnsideElement& o) const {
    return lattice_ == o.lattice_ && coeffs_ == o.coeffs_;
  }

  // "(S4xZ2) - (S4) + 2(D1^z)", classes in lattice order.
  std::string to_string() const;

 private:
  const SubgroupLattice* lattice_ = nullptr;
  std::map<int, std::int64_t> coeffs_;
};

struct BasicDegree {
  int irrep_id = 0;
  BurnsideElement value;
};

// A(G) over a fixed lattice. Generator products are memoized; the cache is
// safe for concurrent use.
class BurnsideRing {
 public:
  explicit BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice);

  const SubgroupLattice& lattice() const { return *lattice_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lattice_; }

  BurnsideElement zero() const { return BurnsideElement(lattice_.get()); }
  BurnsideElement unit() const { return generator(lattice_->top()); }
  BurnsideElement generator(int class_id, std::int64_t coeff = 1) const;

  BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement generator_product(int H, int K) const;

  // Orbit enumeration on G/H x G/K; independent of the recurrence.
  BurnsideElement multiply_oracle(const BurnsideElement& a, const BurnsideElement& b) const;
  BurnsideElement generator_product_oracle(int H, int K) const;

  // fixed_dims[class_id] = dim V^H for the representative H.
  BasicDegree basic_degree(int irrep_id, const std::vector<int>& fixed_dims) const;

  // Multiplies factors after cancelling pairs of equal factors.
  BurnsideElement parity_product(const std::vector<BurnsideElement>& factors) const;

 private:
  void check(const BurnsideElement& a) const;

  std::shared_ptr<const SubgroupLattice> lattice_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<BurnsideElement>> table_;
};

BurnsideElement multiply(const BurnsideRing& ring, const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement multiply_oracle(const BurnsideRing& ring, const BurnsideElement& a,
                                const BurnsideElement& b);
BasicDegree basic_degree(const BurnsideRing& ring, int irrep_id, const std::vector<int>& fixed_dims);

// Maximal classes of the union of supports (minus the top class) that occur
// in exactly one factor.
std::vector<int> maximal_orbit_types(const std::vector<BasicDegree>& factors);
std::vector<int> maximal_orbit_types(const SubgroupLattice& lattice,
                                     const std::vector<BurnsideElement>& factors);

}  // namespace equinet
