#include "equinet/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "equinet/error.hpp"

namespace equinet {

Nonlinearity Nonlinearity::cubic() {
  Nonlinearity g;
  g.tag_ = "cubic";
  g.coeffs_ = {{3, 1.0}};
  return g;
}

Nonlinearity Nonlinearity::cubic_quintic() {
  Nonlinearity g;
  g.tag_ = "cubic_quintic";
  g.coeffs_ = {{3, -1.0}, {5, 1.0}};
  return g;
}

Nonlinearity Nonlinearity::none() {
  Nonlinearity g;
  g.tag_ = "none";
  return g;
}

Nonlinearity Nonlinearity::polynomial(const std::map<int, double>& coeffs) {
  Nonlinearity g;
  g.tag_ = "polynomial";
  for (const auto& [p, c] : coeffs) {
    if (c == 0.0) continue;
    if (p < 3 || p % 2 == 0)
      throw ValidationError("nonlinearity.coeffs: powers must be odd and >= 3 (got " + std::to_string(p) + ")");
    if (!std::isfinite(c)) throw ValidationError("nonlinearity.coeffs: non-finite coefficient");
    g.coeffs_[p] = c;
  }
  if (g.coeffs_.empty()) throw ValidationError("nonlinearity.coeffs: empty polynomial");
  if (g.coeffs_.rbegin()->second <= 0.0)
    throw ValidationError("nonlinearity.coeffs: leading coefficient must be positive (Nagumo condition)");
  return g;
}

int Nonlinearity::degree() const { return coeffs_.empty() ? 1 : coeffs_.rbegin()->first; }

double Nonlinearity::value(double u) const {
  double s = 0.0;
  for (const auto& [p, c] : coeffs_) s += c * std::pow(u, p);
  return s;
}

double Nonlinearity::derivative(double u) const {
  double s = 0.0;
  for (const auto& [p, c] : coeffs_) s += c * p * std::pow(u, p - 1);
  return s;
}

double Nonlinearity::nagumo_M(const Eigen::MatrixXd& laplacian) const {
  if (declared_nagumo_M) return *declared_nagumo_M;
  if (coeffs_.empty()) return std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(laplacian.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian, Eigen::EigenvaluesOnly);
  const double w2 = std::max(0.0, -es.eigenvalues().minCoeff());
  const double lead = coeffs_.rbegin()->second;
  double C = w2;
  for (const auto& [p, c] : coeffs_) C += std::abs(c);
  // Per coordinate q(s) = s g(s) - w2 s^2; sum_i q(u_i) > 0 once the
  // largest coordinate beats (n-1) times the worst negative value of q.
  auto q = [&](double s) { return s * value(s) - w2 * s * s; };
  const double top = std::max(1.0, 2.0 * C / lead) + 2.0;
  const int steps = 20000;
  double B = 0.0;
  for (int i = 0; i <= steps; ++i) B = std::max(B, -q(top * i / steps));
  const double need = (n - 1) * B;
  double hi = top;
  while (q(hi) <= need) hi *= 2.0;
  double s_star = hi;
  for (int i = steps; i >= 0; --i) {
    const double s = hi * i / steps;
    if (q(s) <= need) break;
    s_star = s;
  }
  return s_star * std::sqrt(static_cast<double>(n)) * 1.01;
}

bool Nonlinearity::verify_nagumo(const Eigen::MatrixXd& laplacian, double M, int samples,
                                 std::uint64_t seed) const {
  if (!std::isfinite(M)) return false;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int n = static_cast<int>(laplacian.rows());
  const double r = M * (1.0 + 1e-3);
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) u(i) = normal(rng);
    u *= r / u.norm();
    double dot = u.dot(laplacian * u);
    for (int i = 0; i < n; ++i) dot += u(i) * value(u(i));
    if (!(dot > 0.0)) return false;
  }
  return true;
}

}  // namespace equinet
