#pragma once

#include <array>
#include <utility>
#include <vector>

#include "equinet/group.hpp"

namespace equinet {

// Vertex k (0-based) of the truncated octahedron is labelled by a
// transposition sigma and a 4-cycle tau of {1,2,3,4}.
struct OctahedronVertex {
  std::array<int, 2> sigma;
  std::array<int, 4> tau;
};

const std::array<OctahedronVertex, 24>& octahedron_vertices();

// Square faces: same tau, sigmas sharing one point. Hexagon edges: same
// sigma, tau' = sigma tau sigma.
std::vector<std::pair<int, int>> octahedron_edges();

// S4 acting by (sigma, tau) -> (eta sigma eta^-1, eta tau eta^-1), for
// eta = (1 2 3 4) and eta = (1 2). Signs are +1.
std::vector<GroupElement> octahedron_generators();

}  // namespace equinet
