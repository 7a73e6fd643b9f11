#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/characters.hpp"
#include "idem/measure.hpp"

namespace idem {

/// N_G(K) intersected with N_G(ker rho).
Subgroup n_k_rho(const Subgroup& k, const Character& rho);

/// Elements g with delta_g * (rho m_K) == (rho m_K) * delta_g.
Subgroup g_k_rho_by_commutation(const Subgroup& k, const Character& rho);
/// Preimage of the centralizer of K/ker rho inside N_{K,rho}/ker rho.
Subgroup g_k_rho_by_quotient(const Subgroup& k, const Character& rho);
/// Both of the above; throws InternalCheckError if they disagree.
Subgroup g_k_rho(const Subgroup& k, const Character& rho);

/// An element delta_g * (rho m_K) of the unit group around rho m_K, with the
/// circle scalar dropped.
struct GammaElement {
  Elem g;
  Subgroup k;
  Character rho;

  Measure realize() const;
};

/// Throws PreconditionError unless g lies in G_{K,rho}.
GammaElement make_gamma(Elem g, const Subgroup& k, const Character& rho);

/// Recovers the g-part (smallest element of the coset gK) of a measure of the
/// form z delta_g * (rho m_K) with z a root of unity, if it has that form.
std::optional<Elem> gamma_part(const Measure& mu, const Subgroup& k, const Character& rho);

/// z with delta_g * (rho m_K) == z (rho m_K), when such a z exists.
std::optional<CycloScalar> unit_multiple(Elem g, const Subgroup& k, const Character& rho);

/// Cosets gK partitioning G_{K,rho}.
std::vector<std::vector<Elem>> omega_partition(const Subgroup& k, const Character& rho);

/// nu* nu == rho m_K == nu nu*. When true, also asserts nu absorbs rho m_K
/// on both sides.
bool is_local_unitary(const Measure& nu, const Subgroup& k, const Character& rho);

struct GammaProductReport {
  Subgroup product;  // K1 K2
  Character rho;     // k1 k2 -> rho1(k1) rho2(k2)
  Subgroup g1, g2, g12;
  Subgroup h1, h2;  // G_i intersected with G_{K1K2,rho}
  Subgroup generated;  // <H1 H2>
  std::size_t pairs_checked = 0;
  std::size_t pairs_in_gamma = 0;  // products that land in the unit group of rho m_{K1K2}
  std::vector<std::pair<Elem, Elem>> forward_violations;
  bool forward_ok = false;
  bool reverse_ok = false;
  bool strict = false;  // generated is a proper subgroup of g12
};

/// Intersection of the products of the two unit groups with the unit group
/// of rho m_{K1K2}. Requires the pair to commute.
GammaProductReport verify_gamma_product(const Subgroup& k1, const Character& rho1, const Subgroup& k2,
                                        const Character& rho2);

/// delta_e + sum_chi (u_chi - 1) conj(chi) m_H for abelian H; u is indexed
/// like character_group(H). Asserts the Fourier values come back as u.
Measure nu_u(const Subgroup& h, const std::vector<CycloScalar>& u);

struct ExpReport {
  FloatMeasure value;
  std::size_t terms = 0;
  double unitarity_residual = 0.0;
};

/// Power series exp(lambda) for skew-adjoint lambda, in floating point.
ExpReport exp_skew(const Measure& lambda, double term_floor = 1e-15, std::size_t max_terms = 2000);

}  // namespace idem
