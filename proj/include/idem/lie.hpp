#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace idem {

/// A 3x3 rotation. Construction checks orthonormality and det = 1.
class Rotation {
 public:
  explicit Rotation(const Eigen::Matrix3d& m);
  static Rotation identity() { return Rotation(Eigen::Matrix3d::Identity()); }

  const Eigen::Matrix3d& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_, Unchecked{}); }

 private:
  struct Unchecked {};
  Rotation(const Eigen::Matrix3d& m, Unchecked) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// Rotation by t about the first axis.
Rotation euler_k1(double t);
/// Rotation by t about the third axis.
Rotation euler_k2(double t);

using RotationFunction = std::function<double(const Rotation&)>;

/// Mean of u(k1(t1) k2(t2) k1(t3)) over the 3-torus, periodic trapezoid with
/// `grid` points per axis.
double integrate_product(const RotationFunction& u, unsigned grid = 64);

/// Haar integral through Euler angles: trapezoid in t1, t3 and Gauss-Legendre
/// in t2 on [0, pi] against sin(t2)/2.
double integrate_haar(const RotationFunction& u, unsigned grid = 64);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights);

struct PanelEntry {
  std::string name;
  double product = 0.0;
  double haar = 0.0;
  double delta = 0.0;
};

struct TorusProductReport {
  unsigned grid = 0;
  std::vector<PanelEntry> panel;
  bool separated = false;
  double threshold = 0.1;
};

/// Compares the torus product measure with Haar measure on the panel
/// 1, g11, g11^2, g11^3.
TorusProductReport torus_product_report(unsigned grid = 64);

}  // namespace idem
