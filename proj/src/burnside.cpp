#include "equinet/burnside.hpp"

#include <algorithm>
#include <sstream>

namespace equinet {

std::int64_t BurnsideElement::coeff(int class_id) const {
  auto it = coeffs_.find(class_id);
  return it == coeffs_.end() ? 0 : it->second;
}

void BurnsideElement::add(int class_id, std::int64_t value) {
  if (value == 0) return;
  auto& c = coeffs_[class_id];
  c += value;
  if (c == 0) coeffs_.erase(class_id);
}

std::vector<int> BurnsideElement::support() const {
  std::vector<int> s;
  for (const auto& [k, v] : coeffs_) s.push_back(k);
  return s;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [k, v] : o.coeffs_) add(k, v);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [k, v] : o.coeffs_) add(k, -v);
  return *this;
}

BurnsideElement operator*(std::int64_t s, BurnsideElement a) {
  BurnsideElement out(a.lattice_);
  for (const auto& [k, v] : a.coeffs_) out.add(k, s * v);
  return out;
}

std::string BurnsideElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : coeffs_) {
    const std::string name = lattice_ ? lattice_->cls(k).name : std::to_string(k);
    std::int64_t mag = v < 0 ? -v : v;
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    if (mag != 1) os << mag;
    os << "(" << name << ")";
    first = false;
  }
  return os.str();
}

BurnsideRing::BurnsideRing(std::shared_ptr<const SubgroupLattice> lattice)
    : lattice_(std::move(lattice)) {
  const std::size_t N = static_cast<std::size_t>(lattice_->size());
  table_.resize(N * N);
}

BurnsideElement BurnsideRing::generator(int class_id, std::int64_t coeff) const {
  lattice_->cls(class_id);
  BurnsideElement e(lattice_.get());
  e.add(class_id, coeff);
  return e;
}

void BurnsideRing::check(const BurnsideElement& a) const {
  if (a.lattice() != nullptr && a.lattice() != lattice_.get())
    throw ValidationError("Burnside elements belong to different lattices");
}

BurnsideElement BurnsideRing::generator_product(int H, int K) const {
  const SubgroupLattice& lat = *lattice_;
  lat.cls(H);
  lat.cls(K);
  if (H > K) std::swap(H, K);
  const std::size_t slot = static_cast<std::size_t>(H) * lat.size() + K;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_[slot]) return *table_[slot];
  }
  const int N = lat.size();
  const std::int64_t wH = lat.cls(H).weyl_order, wK = lat.cls(K).weyl_order;
  std::vector<std::int64_t> nL(N, 0);
  BurnsideElement out(lattice_.get());
  for (int L = 0; L < N; ++L) {
    const std::int64_t a = lat.n(L, H), b = lat.n(L, K);
    if (a == 0 || b == 0) continue;
    std::int64_t num = a * wH * b * wK;
    for (int Lt : lat.cls(L).covers) num -= static_cast<std::int64_t>(lat.n(L, Lt)) * nL[Lt] * lat.cls(Lt).weyl_order;
    const std::int64_t w = lat.cls(L).weyl_order;
    if (num % w != 0) throw InternalError("lattice/recurrence inconsistency");
    nL[L] = num / w;
    out.add(L, nL[L]);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  table_[slot] = out;
  return out;
}

BurnsideElement BurnsideRing::multiply(const BurnsideElement& a, const BurnsideElement& b) const {
  check(a);
  check(b);
  BurnsideElement out(lattice_.get());
  for (const auto& [h, x] : a.coeffs())
    for (const auto& [k, y] : b.coeffs()) out += (x * y) * generator_product(h, k);
  return out;
}

namespace {

// Left coset index of every element: coset[g] = index of gH.
std::vector<std::size_t> coset_map(const SubgroupLattice& lat, int H, std::size_t& count) {
  const std::size_t order = lat.group().order();
  const std::size_t none = order;
  std::vector<std::size_t> coset(order, none);
  count = 0;
  for (std::size_t g = 0; g < order; ++g) {
    if (coset[g] != none) continue;
    for (auto h : lat.cls(H).representative) coset[lat.mul(g, h)] = count;
    ++count;
  }
  return coset;
}

}  // namespace

BurnsideElement BurnsideRing::generator_product_oracle(int H, int K) const {
  const SubgroupLattice& lat = *lattice_;
  const FiniteGroup& G = lat.group();
  const std::size_t order = G.order();
  std::size_t nH = 0, nK = 0;
  auto cH = coset_map(lat, H, nH);
  auto cK = coset_map(lat, K, nK);
  if (nH * nK > 1000000) throw ValidationError("orbit oracle size overflow");

  // A representative element for each coset.
  std::vector<std::size_t> repH(nH), repK(nK);
  for (std::size_t g = order; g-- > 0;) {
    repH[cH[g]] = g;
    repK[cK[g]] = g;
  }
  std::vector<std::size_t> gens;
  for (const auto& g : G.generators()) gens.push_back(G.index_of(g));

  std::vector<char> visited(nH * nK, 0);
  BurnsideElement out(lattice_.get());
  for (std::size_t start = 0; start < nH * nK; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    std::vector<std::size_t> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t x = queue[q] / nK, y = queue[q] % nK;
      for (auto s : gens) {
        const std::size_t nx = cH[lat.mul(s, repH[x])], ny = cK[lat.mul(s, repK[y])];
        const std::size_t p = nx * nK + ny;
        if (!visited[p]) {
          visited[p] = 1;
          queue.push_back(p);
        }
      }
    }
    const std::size_t x = start / nK, y = start % nK;
    ElementSet iso(order);
    for (std::size_t a = 0; a < order; ++a)
      if (cH[lat.mul(a, repH[x])] == x && cK[lat.mul(a, repK[y])] == y) iso.insert(a);
    const int cls = lat.class_of(iso);
    if (cls < 0) throw InternalError("isotropy subgroup missing from lattice");
    out.add(cls, 1);
  }
  return out;
}

BurnsideElement BurnsideRing::multiply_oracle(const BurnsideElement& a, const BurnsideElement& b) const {
  check(a);
  check(b);
  BurnsideElement out(lattice_.get());
  for (const auto& [h, x] : a.coeffs())
    for (const auto& [k, y] : b.coeffs()) out += (x * y) * generator_product_oracle(h, k);
  return out;
}

BasicDegree BurnsideRing::basic_degree(int irrep_id, const std::vector<int>& fixed_dims) const {
  const SubgroupLattice& lat = *lattice_;
  const int N = lat.size();
  if (static_cast<int>(fixed_dims.size()) != N)
    throw ValidationError("basic_degree: need one fixed dimension per subgroup class");
  std::vector<std::int64_t> nH(N, 0);
  BasicDegree out{irrep_id, BurnsideElement(lattice_.get())};
  for (int H = 0; H < N; ++H) {
    std::int64_t num = fixed_dims[H] % 2 == 0 ? 1 : -1;
    for (int K : lat.cls(H).covers) num -= nH[K] * lat.n(H, K) * lat.cls(K).weyl_order;
    const std::int64_t w = lat.cls(H).weyl_order;
    if (num % w != 0) throw InternalError("lattice/recurrence inconsistency");
    nH[H] = num / w;
    out.value.add(H, nH[H]);
  }
  return out;
}

BurnsideElement BurnsideRing::parity_product(const std::vector<BurnsideElement>& factors) const {
  std::vector<std::pair<BurnsideElement, int>> counts;
  for (const auto& f : factors) {
    check(f);
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == f; });
    if (it == counts.end())
      counts.emplace_back(f, 1);
    else
      ++it->second;
  }
  BurnsideElement out = unit();
  for (const auto& [f, c] : counts)
    if (c % 2 == 1) out = multiply(out, f);
  return out;
}

BurnsideElement multiply(const BurnsideRing& ring, const BurnsideElement& a, const BurnsideElement& b) {
  return ring.multiply(a, b);
}

BurnsideElement multiply_oracle(const BurnsideRing& ring, const BurnsideElement& a,
                                const BurnsideElement& b) {
  return ring.multiply_oracle(a, b);
}

BasicDegree basic_degree(const BurnsideRing& ring, int irrep_id, const std::vector<int>& fixed_dims) {
  return ring.basic_degree(irrep_id, fixed_dims);
}

std::vector<int> maximal_orbit_types(const SubgroupLattice& lattice,
                                     const std::vector<BurnsideElement>& factors) {
  std::map<int, int> occurrences;
  for (const auto& f : factors)
    for (int h : f.support())
      if (h != lattice.top()) ++occurrences[h];
  std::vector<int> out;
  for (const auto& [h, count] : occurrences) {
    bool maximal = true;
    for (const auto& [k, c2] : occurrences)
      if (k != h && lattice.is_subconjugate(h, k)) maximal = false;
    if (maximal && count == 1) out.push_back(h);
  }
  return out;
}

std::vector<int> maximal_orbit_types(const std::vector<BasicDegree>& factors) {
  if (factors.empty()) return {};
  const SubgroupLattice* lat = factors.front().value.lattice();
  std::vector<BurnsideElement> values;
  for (const auto& f : factors) values.push_back(f.value);
  return maximal_orbit_types(*lat, values);
}

}  // namespace equinet
