#include "idem/lie.hpp"

#include <cmath>
#include <numbers>

#include "idem/error.hpp"

namespace idem {

Rotation::Rotation(const Eigen::Matrix3d& m) : m_(m) {
  const double orth = (m * m.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (!(orth < 1e-12)) throw PreconditionError("matrix is not orthonormal");
  if (!(std::abs(m.determinant() - 1.0) < 1e-12)) throw PreconditionError("matrix determinant is not 1");
}

Rotation euler_k1(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Eigen::Matrix3d m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return Rotation(m);
}

Rotation euler_k2(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Eigen::Matrix3d m;
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return Rotation(m);
}

void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n == 0) throw PreconditionError("Gauss-Legendre needs at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

void check_grid(unsigned grid) {
  if (grid < 2) throw PreconditionError("quadrature grid must be at least 2");
}

}  // namespace

double integrate_product(const RotationFunction& u, unsigned grid) {
  check_grid(grid);
  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<Rotation> a, b;
  for (unsigned i = 0; i < grid; ++i) {
    a.push_back(euler_k1(i * h));
    b.push_back(euler_k2(i * h));
  }
  double sum = 0.0;
  for (unsigned i = 0; i < grid; ++i) {
    for (unsigned j = 0; j < grid; ++j) {
      const Rotation ab = a[i] * b[j];
      for (unsigned k = 0; k < grid; ++k) sum += u(ab * a[k]);
    }
  }
  return sum / (static_cast<double>(grid) * grid * grid);
}

double integrate_haar(const RotationFunction& u, unsigned grid) {
  check_grid(grid);
  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<double> x, w;
  gauss_legendre(grid, x, w);
  std::vector<Rotation> a;
  for (unsigned i = 0; i < grid; ++i) a.push_back(euler_k1(i * h));
  double sum = 0.0;
  for (unsigned j = 0; j < grid; ++j) {
    // t2 = pi (x + 1) / 2; dt2 = pi/2 dx; measure sin(t2) dt2 / 2.
    const double t2 = std::numbers::pi * (x[j] + 1.0) / 2.0;
    const double weight = w[j] * std::numbers::pi / 4.0 * std::sin(t2);
    const Rotation b = euler_k2(t2);
    double inner = 0.0;
    for (unsigned i = 0; i < grid; ++i) {
      const Rotation ab = a[i] * b;
      for (unsigned k = 0; k < grid; ++k) inner += u(ab * a[k]);
    }
    sum += weight * inner;
  }
  return sum / (static_cast<double>(grid) * grid);
}

TorusProductReport torus_product_report(unsigned grid) {
  TorusProductReport r;
  r.grid = grid;
  const std::vector<std::pair<std::string, RotationFunction>> panel = {
      {"1", [](const Rotation&) { return 1.0; }},
      {"g11", [](const Rotation& g) { return g(0, 0); }},
      {"g11^2", [](const Rotation& g) { return g(0, 0) * g(0, 0); }},
      {"g11^3", [](const Rotation& g) { return g(0, 0) * g(0, 0) * g(0, 0); }},
  };
  for (const auto& [name, u] : panel) {
    PanelEntry e{name, integrate_product(u, grid), integrate_haar(u, grid), 0.0};
    e.delta = e.product - e.haar;
    if (std::abs(e.delta) > r.threshold) r.separated = true;
    r.panel.push_back(e);
  }
  return r;
}

}  // namespace idem
