#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace equinet {

// Odd polynomial g(u) = sum_p c_p u^p with odd p >= 3.
class Nonlinearity {
 public:
  static Nonlinearity cubic();          // u^3
  static Nonlinearity cubic_quintic();  // -u^3 + u^5
  static Nonlinearity polynomial(const std::map<int, double>& coeffs);
  static Nonlinearity none();  // g = 0, for linear checks

  const std::string& tag() const { return tag_; }
  const std::map<int, double>& coeffs() const { return coeffs_; }
  int degree() const;  // 1 when g = 0

  double value(double u) const;
  double derivative(double u) const;

  // Radius M with u.(Delta u + g(u)) > 0 for |u| > M; a declared value
  // overrides the computed one but is still checked by sampling.
  std::optional<double> declared_nagumo_M;
  double nagumo_M(const Eigen::MatrixXd& laplacian) const;
  // Samples the sphere of radius M(1+1e-3).
  bool verify_nagumo(const Eigen::MatrixXd& laplacian, double M, int samples = 2000,
                     std::uint64_t seed = 7) const;

 private:
  std::string tag_;
  std::map<int, double> coeffs_;
};

}  // namespace equinet
