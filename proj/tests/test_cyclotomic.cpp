#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "idem/cyclotomic.hpp"

using idem::CycloScalar;

namespace {

std::complex<double> zeta(long k, unsigned n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
}

CycloScalar random_scalar(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::uniform_int_distribution<long> pw(0, n - 1);
  CycloScalar z = CycloScalar::zero(n);
  for (int t = 0; t < 3; ++t) {
    z += CycloScalar::root_of_unity(pw(rng), n) * mpq_class(num(rng), den(rng));
  }
  return z;
}

}  // namespace

TEST_CASE("totient and cyclotomic polynomials") {
  CHECK(idem::euler_phi(1) == 1);
  CHECK(idem::euler_phi(12) == 4);
  CHECK(idem::euler_phi(7) == 6);
  CHECK(idem::euler_phi(60) == 16);
  CHECK(idem::cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(idem::cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(idem::cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(idem::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u, 15u}) {
    CAPTURE(n);
    const CycloScalar z = CycloScalar::root_of_unity(1, n);
    CycloScalar p = CycloScalar::one(n), sum = CycloScalar::zero(n);
    for (unsigned k = 0; k < n; ++k) {
      CHECK(p == CycloScalar::root_of_unity(k, n));
      CHECK(p.root_of_unity_index() == static_cast<long long>(k));
      sum += p;
      p *= z;
    }
    CHECK(p == CycloScalar::one(n));
    CHECK(sum == (n == 1 ? CycloScalar::one(1) : CycloScalar::zero(n)));
    CHECK(z.conj() * z == CycloScalar::one(1));
    CHECK(z.conj() == CycloScalar::root_of_unity(static_cast<long long>(n) - 1, n));
  }
  CHECK(CycloScalar::root_of_unity(-1, 5) == CycloScalar::root_of_unity(4, 5));
  CHECK(CycloScalar::rational(2).root_of_unity_index() == -1);
  CHECK((CycloScalar::root_of_unity(1, 4) * mpq_class(1, 2)).root_of_unity_index() == -1);
}

TEST_CASE("mixed conductors promote to the lcm") {
  CHECK(CycloScalar::root_of_unity(1, 3) == CycloScalar::root_of_unity(2, 6));
  CHECK(CycloScalar::root_of_unity(1, 2) == CycloScalar::rational(-1));
  CHECK(CycloScalar::root_of_unity(2, 4) == CycloScalar::rational(-1));
  const CycloScalar s = CycloScalar::root_of_unity(1, 4) + CycloScalar::root_of_unity(1, 3);
  CHECK(s.conductor() == 12);
  CHECK(std::abs(s.to_complex() - (zeta(1, 4) + zeta(1, 3))) < 1e-12);
  CHECK(CycloScalar::root_of_unity(1, 4).promoted(12) == CycloScalar::root_of_unity(3, 12));
}

TEST_CASE("rational detection") {
  const CycloScalar i = CycloScalar::root_of_unity(1, 4);
  CHECK((i * i).is_rational());
  CHECK((i * i).rational_part() == -1);
  CHECK_FALSE(i.is_rational());
  // zeta_3 + zeta_3^2 = -1
  CHECK((CycloScalar::root_of_unity(1, 3) + CycloScalar::root_of_unity(2, 3)) == CycloScalar::rational(-1));
  CHECK(CycloScalar::zero(7).is_zero());
}

TEST_CASE("field laws and complex embedding (property)") {
  std::mt19937 rng(11);
  for (unsigned n : {4u, 5u, 6u, 8u, 12u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycloScalar a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-10);
      CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-10);
    }
  }
}

TEST_CASE("string form") {
  CHECK(CycloScalar::rational(mpq_class(1, 2)).to_string() == "1/2");
  CHECK(CycloScalar::zero(4).to_string() == "0");
}
