#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "idem/characters.hpp"
#include "idem/cyclotomic.hpp"
#include "idem/group.hpp"

namespace idem {

/// A complex measure on a finite group with exact cyclotomic coefficients,
/// coeff[g] = mu({g}). For finite groups M(G) is the group algebra, so there
/// is no separate L^1 type.
class Measure {
 public:
  /// The zero measure, with scalars in Q(zeta_N) for N the group exponent.
  explicit Measure(GroupPtr group);

  static Measure dirac(const GroupPtr& group, Elem g);
  /// Normalised Haar measure of K: 1/|K| on K.
  static Measure haar(const Subgroup& k);
  /// rho m_K: rho(k)/|K| on K.
  static Measure char_idem(const Subgroup& k, const Character& rho);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return coeff_.size(); }
  const CycloScalar& operator[](Elem g) const { return coeff_[g]; }
  const std::vector<CycloScalar>& coefficients() const { return coeff_; }
  void set(Elem g, CycloScalar value) { coeff_[g] = std::move(value); }
  void add(Elem g, const CycloScalar& value) { coeff_[g] += value; }

  bool is_zero() const;
  std::vector<std::complex<double>> to_complex() const;

  Measure& operator+=(const Measure& o);
  Measure& operator-=(const Measure& o);
  Measure& operator*=(const CycloScalar& z);
  friend Measure operator+(Measure a, const Measure& b) { return a += b; }
  friend Measure operator-(Measure a, const Measure& b) { return a -= b; }
  friend Measure operator*(const CycloScalar& z, Measure a) { return a *= z; }
  friend Measure operator*(Measure a, const CycloScalar& z) { return a *= z; }

  friend bool operator==(const Measure& a, const Measure& b);

 private:
  GroupPtr group_;
  std::vector<CycloScalar> coeff_;
};

/// (mu * nu)(g) = sum_h mu(h) nu(h^-1 g).
Measure convolve(const Measure& mu, const Measure& nu);
/// mu*(g) = conj(mu(g^-1)).
Measure adjoint(const Measure& mu);
/// delta_g * mu and mu * delta_g.
Measure left_translate(Elem g, const Measure& mu);
Measure right_translate(const Measure& mu, Elem g);
std::vector<Elem> support(const Measure& mu);
/// Total variation norm sum_g |mu(g)|, evaluated in double precision.
double tv_norm(const Measure& mu);

struct IdempotentClass {
  enum class Kind { Zero, Contractive, IdempotentOther, NotIdempotent };
  Kind kind = Kind::NotIdempotent;
  std::optional<Subgroup> subgroup;
  std::optional<Character> character;
};

const char* to_string(IdempotentClass::Kind kind);

/// Exact classification: Contractive(K, rho) exactly when mu = rho m_K.
IdempotentClass classify_idempotent(const Measure& mu);

// --- floating-point measures -------------------------------------------------

using FloatMeasure = std::vector<std::complex<double>>;

FloatMeasure convolve(const GroupTable& g, const FloatMeasure& mu, const FloatMeasure& nu);
FloatMeasure adjoint(const GroupTable& g, const FloatMeasure& mu);
double max_abs_diff(const FloatMeasure& a, const FloatMeasure& b);
double max_abs(const FloatMeasure& a);

}  // namespace idem
