#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "idem/error.hpp"
#include "idem/lie.hpp"

using namespace idem;

namespace {

constexpr double kPi = std::numbers::pi;

Rotation random_rotation(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  return euler_k1(u(rng)) * euler_k2(u(rng)) * euler_k1(u(rng));
}

}  // namespace

TEST_CASE("Euler rotations") {
  const Rotation a = euler_k1(kPi / 2);
  CHECK(a(0, 0) == doctest::Approx(1.0));
  CHECK(a(1, 2) == doctest::Approx(-1.0));
  CHECK(a(2, 1) == doctest::Approx(1.0));
  const Rotation b = euler_k2(kPi / 2);
  CHECK(b(2, 2) == doctest::Approx(1.0));
  CHECK(b(0, 1) == doctest::Approx(-1.0));
  CHECK(b(1, 0) == doctest::Approx(1.0));
  CHECK(((euler_k1(0.3) * euler_k1(0.4)).matrix() - euler_k1(0.7).matrix()).norm() < 1e-14);
  CHECK(((euler_k2(1.0) * euler_k2(-1.0)).matrix() - Eigen::Matrix3d::Identity()).norm() < 1e-14);
}

TEST_CASE("Rotation validation") {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 0) = -1;
  CHECK_THROWS_AS(Rotation{m}, PreconditionError);
  CHECK_THROWS_AS(Rotation{Eigen::Matrix3d::Identity() * 2}, PreconditionError);
  CHECK_NOTHROW(Rotation{euler_k1(1.0).matrix()});
}

TEST_CASE("Gauss-Legendre exactness") {
  for (unsigned n : {2u, 5u, 16u, 64u}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(x.size() == n);
    for (unsigned d = 0; d < 2 * n; ++d) {
      double s = 0;
      for (unsigned i = 0; i < n; ++i) s += w[i] * std::pow(x[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("integral oracles") {
  auto one = [](const Rotation&) { return 1.0; };
  auto g11 = [](const Rotation& r) { return r(0, 0); };
  auto g11sq = [](const Rotation& r) { return r(0, 0) * r(0, 0); };
  CHECK(std::abs(integrate_product(one) - 1.0) < 1e-12);
  CHECK(std::abs(integrate_haar(one) - 1.0) < 1e-12);
  CHECK(std::abs(integrate_product(g11)) < 1e-12);
  CHECK(std::abs(integrate_haar(g11)) < 1e-12);
  CHECK(std::abs(integrate_product(g11sq) - 0.5) < 1e-12);
  CHECK(std::abs(integrate_haar(g11sq) - 1.0 / 3) < 1e-12);
  // every matrix entry has second moment 1/3 under Haar
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(integrate_haar([&](const Rotation& r) { return r(i, j) * r(i, j); }) - 1.0 / 3) < 1e-12);
    }
}

TEST_CASE("Haar integral is bi-invariant (property)") {
  std::mt19937 rng(5);
  auto u = [](const Rotation& r) { return std::exp(r(0, 1) + 0.5 * r(2, 2)) + r(1, 0) * r(0, 2) * r(2, 1); };
  const double base = integrate_haar(u);
  for (int trial = 0; trial < 10; ++trial) {
    const Rotation a = random_rotation(rng), b = random_rotation(rng);
    CHECK(std::abs(integrate_haar([&](const Rotation& r) { return u(a * r); }) - base) < 1e-8);
    CHECK(std::abs(integrate_haar([&](const Rotation& r) { return u(r * b); }) - base) < 1e-8);
  }
}

TEST_CASE("grid refinement") {
  auto u = [](const Rotation& r) { return std::exp(r(0, 0) + r(1, 2)); };
  CHECK(std::abs(integrate_haar(u, 32) - integrate_haar(u, 64)) < 1e-8);
  CHECK(std::abs(integrate_product(u, 32) - integrate_product(u, 64)) < 1e-8);
}

TEST_CASE("torus product panel") {
  const TorusProductReport r = torus_product_report();
  REQUIRE(r.panel.size() == 4);
  CHECK(r.panel[0].name == "1");
  CHECK(r.panel[2].name == "g11^2");
  CHECK(r.panel[2].product == doctest::Approx(0.5));
  CHECK(r.panel[2].haar == doctest::Approx(1.0 / 3));
  CHECK(r.panel[2].delta == doctest::Approx(1.0 / 6));
  CHECK(std::abs(r.panel[1].delta) < 1e-12);
  CHECK(std::abs(r.panel[3].delta) < 1e-12);
  CHECK(r.separated);
}
