#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace idem {

struct CycloField;

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// Stored as rational coefficients over the power basis 1, z, ..., z^(phi(N)-1),
/// reduced modulo the N-th cyclotomic polynomial, so the representation is
/// canonical and equality is coefficient equality. Arithmetic between scalars
/// of different conductors promotes both operands to the lcm.
class CycloScalar {
 public:
  /// Zero in Q (conductor 1).
  CycloScalar();

  static CycloScalar zero(unsigned conductor);
  static CycloScalar one(unsigned conductor);
  static CycloScalar rational(const mpq_class& q, unsigned conductor = 1);
  /// zeta_N^k, where zeta_N = exp(2 pi i / N).
  static CycloScalar root_of_unity(long long k, unsigned conductor);

  unsigned conductor() const;
  std::size_t degree() const { return coeff_.size(); }
  const std::vector<mpq_class>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; only meaningful when is_rational().
  const mpq_class& rational_part() const { return coeff_[0]; }

  /// Re-express in Q(zeta_M); M must be a multiple of the current conductor.
  CycloScalar promoted(unsigned multiple) const;

  /// Complex conjugation, zeta_N -> zeta_N^(N-1).
  CycloScalar conj() const;

  /// Returns k in [0, N) if this equals zeta_N^k for N = conductor(), else -1.
  /// Only roots of unity of order dividing N are detected.
  long long root_of_unity_index() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator*=(const mpq_class& q);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator*(CycloScalar a, const mpq_class& q) { return a *= q; }
  friend CycloScalar operator*(const mpq_class& q, CycloScalar a) { return a *= q; }
  CycloScalar operator-() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

 private:
  CycloScalar(const CycloField* field, std::vector<mpq_class> coeff);
  void match_conductor(CycloScalar& other);

  const CycloField* field_;
  std::vector<mpq_class> coeff_;
};

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(unsigned n);

}  // namespace idem
