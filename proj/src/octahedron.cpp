#include "equinet/octahedron.hpp"

#include <algorithm>

namespace equinet {

namespace {

using Perm4 = std::array<int, 4>;  // images of 0..3

Perm4 cycle_perm(const int* pts, int len) {
  Perm4 p{0, 1, 2, 3};
  for (int i = 0; i < len; ++i) p[pts[i] - 1] = pts[(i + 1) % len] - 1;
  return p;
}

Perm4 compose(const Perm4& a, const Perm4& b) {
  Perm4 c{};
  for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
  return c;
}

Perm4 invert(const Perm4& a) {
  Perm4 c{};
  for (int i = 0; i < 4; ++i) c[a[i]] = i;
  return c;
}

struct VertexPerms {
  Perm4 sigma;
  Perm4 tau;
};

std::array<VertexPerms, 24> vertex_perms() {
  std::array<VertexPerms, 24> out{};
  const auto& vs = octahedron_vertices();
  for (int k = 0; k < 24; ++k)
    out[k] = {cycle_perm(vs[k].sigma.data(), 2), cycle_perm(vs[k].tau.data(), 4)};
  return out;
}

int find_vertex(const std::array<VertexPerms, 24>& vp, const Perm4& s, const Perm4& t) {
  for (int k = 0; k < 24; ++k)
    if (vp[k].sigma == s && vp[k].tau == t) return k;
  throw InternalError("octahedron conversion table is not closed under S4");
}

GroupElement conjugation(const Perm4& eta) {
  const auto vp = vertex_perms();
  const Perm4 inv = invert(eta);
  GroupElement g = GroupElement::identity(24);
  for (int k = 0; k < 24; ++k)
    g.perm[k] = find_vertex(vp, compose(compose(eta, vp[k].sigma), inv),
                            compose(compose(eta, vp[k].tau), inv));
  return g;
}

}  // namespace

const std::array<OctahedronVertex, 24>& octahedron_vertices() {
  static const std::array<OctahedronVertex, 24> table{{
      {{1, 2}, {1, 2, 3, 4}}, {{2, 3}, {1, 2, 3, 4}}, {{3, 4}, {1, 2, 3, 4}},
      {{1, 4}, {1, 2, 3, 4}}, {{1, 2}, {1, 4, 3, 2}}, {{2, 3}, {1, 4, 3, 2}},
      {{3, 4}, {1, 4, 3, 2}}, {{1, 4}, {1, 4, 3, 2}}, {{1, 3}, {1, 3, 2, 4}},
      {{2, 3}, {1, 3, 2, 4}}, {{2, 4}, {1, 3, 2, 4}}, {{1, 4}, {1, 3, 2, 4}},
      {{1, 3}, {1, 4, 2, 3}}, {{2, 3}, {1, 4, 2, 3}}, {{2, 4}, {1, 4, 2, 3}},
      {{1, 4}, {1, 4, 2, 3}}, {{1, 3}, {1, 3, 4, 2}}, {{3, 4}, {1, 3, 4, 2}},
      {{2, 4}, {1, 3, 4, 2}}, {{1, 2}, {1, 3, 4, 2}}, {{1, 3}, {1, 2, 4, 3}},
      {{3, 4}, {1, 2, 4, 3}}, {{2, 4}, {1, 2, 4, 3}}, {{1, 2}, {1, 2, 4, 3}},
  }};
  return table;
}

std::vector<std::pair<int, int>> octahedron_edges() {
  const auto vp = vertex_perms();
  const auto& vs = octahedron_vertices();
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 24; ++a) {
    for (int b = a + 1; b < 24; ++b) {
      bool adjacent = false;
      if (vp[a].tau == vp[b].tau) {
        int shared = 0;
        for (int x : vs[a].sigma)
          shared += std::count(vs[b].sigma.begin(), vs[b].sigma.end(), x);
        adjacent = shared == 1;
      } else if (vp[a].sigma == vp[b].sigma) {
        adjacent = compose(compose(vp[a].sigma, vp[a].tau), vp[a].sigma) == vp[b].tau;
      }
      if (adjacent) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::vector<GroupElement> octahedron_generators() {
  const int rot[4] = {1, 2, 3, 4};
  const int swap[2] = {1, 2};
  return {conjugation(cycle_perm(rot, 4)), conjugation(cycle_perm(swap, 2))};
}

}  // namespace equinet
