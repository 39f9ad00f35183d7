#pragma once

// Independent reference computations used by the tests. None of these call
// into the lattice or Burnside code they are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <vector>

#include "equinet/group.hpp"

namespace oracle {

using Subgroup = std::vector<std::size_t>;  // sorted element indices

inline Subgroup closure(const equinet::FiniteGroup& G, const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s{G.identity_index()};
  std::vector<std::size_t> frontier{G.identity_index()};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t a : frontier)
      for (std::size_t g : gens) {
        const std::size_t b = G.multiply(a, g);
        if (s.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

// Every subgroup generated by at most three elements. Enough for all groups
// used here (order <= 48, no subgroup needs four generators).
inline std::vector<Subgroup> all_subgroups(const equinet::FiniteGroup& G) {
  std::set<Subgroup> found;
  const std::size_t n = G.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Subgroup ab = closure(G, {a, b});
      found.insert(ab);
      for (std::size_t c = b; c < n; ++c)
        if (!std::binary_search(ab.begin(), ab.end(), c)) found.insert(closure(G, {a, b, c}));
    }
  return {found.begin(), found.end()};
}

inline Subgroup conjugate(const equinet::FiniteGroup& G, const Subgroup& H, std::size_t g) {
  Subgroup out;
  for (std::size_t h : H) out.push_back(G.multiply(G.multiply(g, h), G.inverse(g)));
  std::sort(out.begin(), out.end());
  return out;
}

// Conjugacy classes of subgroups, each as the list of its members.
inline std::vector<std::vector<Subgroup>> subgroup_classes(const equinet::FiniteGroup& G) {
  std::vector<std::vector<Subgroup>> classes;
  std::set<Subgroup> seen;
  for (const auto& H : all_subgroups(G)) {
    if (seen.count(H)) continue;
    std::set<Subgroup> cls;
    for (std::size_t g = 0; g < G.order(); ++g) cls.insert(conjugate(G, H, g));
    seen.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

inline std::size_t normalizer_order(const equinet::FiniteGroup& G, const Subgroup& H) {
  std::size_t count = 0;
  for (std::size_t g = 0; g < G.order(); ++g) count += conjugate(G, H, g) == H ? 1 : 0;
  return count;
}

// Mark of L on G/H: number of cosets gH fixed by L.
inline long mark(const equinet::FiniteGroup& G, const Subgroup& L, const Subgroup& H) {
  long count = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Subgroup c = conjugate(G, L, G.inverse(g));
    if (std::includes(H.begin(), H.end(), c.begin(), c.end())) ++count;
  }
  return count / static_cast<long>(H.size());
}

// Scalar Duffing equation x'' = lambda^2 (-2x + x^3), odd and antiperiodic
// with period 2pi: shoot from x(0) = 0, x'(0) = v so that x'(pi/2) = 0.
struct Duffing {
  double lambda;

  std::pair<double, double> flow(double v, double t_end, int steps = 4000) const {
    double x = 0.0, y = v;
    const double h = t_end / steps, l2 = lambda * lambda;
    auto f = [&](double xx) { return l2 * (-2.0 * xx + xx * xx * xx); };
    for (int i = 0; i < steps; ++i) {
      const double k1x = y, k1y = f(x);
      const double k2x = y + 0.5 * h * k1y, k2y = f(x + 0.5 * h * k1x);
      const double k3x = y + 0.5 * h * k2y, k3y = f(x + 0.5 * h * k2x);
      const double k4x = y + h * k3y, k4y = f(x + h * k3x);
      x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
      y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    }
    return {x, y};
  }

  // Initial slope of the nonzero orbit, by bisection on x'(pi/2).
  double shoot(double v_lo, double v_hi) const {
    const double q = std::numbers::pi / 2;
    double flo = flow(v_lo, q).second;
    for (int i = 0; i < 200 && v_hi - v_lo > 1e-15; ++i) {
      const double mid = 0.5 * (v_lo + v_hi);
      const double fm = flow(mid, q).second;
      if ((fm > 0) == (flo > 0)) {
        v_lo = mid;
        flo = fm;
      } else {
        v_hi = mid;
      }
    }
    return 0.5 * (v_lo + v_hi);
  }

  // First sine coefficient b1 = (4/pi) int_0^{pi/2} x(t) sin t dt (quarter-wave
  // symmetry), by composite Simpson on the RK4 trajectory.
  double first_harmonic(double v, int panels = 4000) const {
    const double q = std::numbers::pi / 2, h = q / panels;
    double x = 0.0, y = v, sum = 0.0;
    const double l2 = lambda * lambda;
    auto f = [&](double xx) { return l2 * (-2.0 * xx + xx * xx * xx); };
    std::vector<double> xs{0.0};
    for (int i = 0; i < panels; ++i) {
      const double k1x = y, k1y = f(x);
      const double k2x = y + 0.5 * h * k1y, k2y = f(x + 0.5 * h * k1x);
      const double k3x = y + 0.5 * h * k2y, k3y = f(x + 0.5 * h * k2x);
      const double k4x = y + h * k3y, k4y = f(x + h * k3x);
      x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
      y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
      xs.push_back(x);
    }
    for (int i = 0; i <= panels; ++i) {
      const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * xs[i] * std::sin(i * h);
    }
    return 4.0 / std::numbers::pi * sum * h / 3.0;
  }
};

}  // namespace oracle
