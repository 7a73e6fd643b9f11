#include "idem/measure_groups.hpp"

#include <algorithm>

#include "idem/commutation.hpp"
#include "idem/error.hpp"

namespace idem {

namespace {

void check_pair(const Subgroup& k, const Character& rho) {
  if (!(rho.domain() == k)) throw PreconditionError("character is not defined on the given subgroup");
}

}  // namespace

Subgroup n_k_rho(const Subgroup& k, const Character& rho) {
  check_pair(k, rho);
  return intersection(normalizer(k), normalizer(kernel(rho)));
}

Subgroup g_k_rho_by_commutation(const Subgroup& k, const Character& rho) {
  check_pair(k, rho);
  const Measure e = Measure::char_idem(k, rho);
  std::vector<Elem> members;
  for (Elem g = 0; g < k.group().order(); ++g) {
    if (left_translate(g, e) == right_translate(e, g)) members.push_back(g);
  }
  return make_subgroup(k.parent(), std::move(members));
}

Subgroup g_k_rho_by_quotient(const Subgroup& k, const Character& rho) {
  const Subgroup n = n_k_rho(k, rho);
  const Quotient q = quotient_group(n, kernel(rho));
  const GroupTable& qg = *q.group;
  std::vector<Elem> image;
  for (Elem x : k.elements()) image.push_back(q.projection[x]);
  std::vector<Elem> members;
  for (Elem g : n.elements()) {
    const Elem y = q.projection[g];
    const bool central = std::all_of(image.begin(), image.end(),
                                     [&](Elem x) { return qg.mul(x, y) == qg.mul(y, x); });
    if (central) members.push_back(g);
  }
  return make_subgroup(k.parent(), std::move(members));
}

Subgroup g_k_rho(const Subgroup& k, const Character& rho) {
  Subgroup a = g_k_rho_by_commutation(k, rho);
  const Subgroup b = g_k_rho_by_quotient(k, rho);
  if (!(a == b)) {
    throw InternalCheckError("G_{K,rho} differs between the commutation test (order " +
                             std::to_string(a.order()) + ") and the quotient definition (order " +
                             std::to_string(b.order()) + ")");
  }
  return a;
}

Measure GammaElement::realize() const { return left_translate(g, Measure::char_idem(k, rho)); }

GammaElement make_gamma(Elem g, const Subgroup& k, const Character& rho) {
  if (g >= k.group().order()) throw PreconditionError("element index out of range");
  if (!g_k_rho(k, rho).contains(g)) {
    throw PreconditionError("element " + k.group().label(g) + " is not in G_{K,rho}");
  }
  return GammaElement{g, k, rho};
}

std::optional<Elem> gamma_part(const Measure& mu, const Subgroup& k, const Character& rho) {
  check_pair(k, rho);
  const auto supp = support(mu);
  if (supp.size() != k.order()) return std::nullopt;
  const Elem g = supp.front();
  const Measure base = left_translate(g, Measure::char_idem(k, rho));
  // base(g) = 1/|K|, so the only candidate scalar is |K| mu(g).
  CycloScalar z = mu[g] * mpq_class(static_cast<long>(k.order()));
  if (z.root_of_unity_index() < 0) return std::nullopt;
  if (!(mu == z * base)) return std::nullopt;
  return g;
}

std::optional<CycloScalar> unit_multiple(Elem g, const Subgroup& k, const Character& rho) {
  check_pair(k, rho);
  const Measure e = Measure::char_idem(k, rho);
  const Measure moved = left_translate(g, e);
  const Elem id = k.group().identity();
  if (moved[id].is_zero()) return std::nullopt;
  CycloScalar z = moved[id] * mpq_class(static_cast<long>(k.order()));
  if (!(moved == z * e)) return std::nullopt;
  return z;
}

std::vector<std::vector<Elem>> omega_partition(const Subgroup& k, const Character& rho) {
  return left_cosets(g_k_rho(k, rho), k).cosets;
}

bool is_local_unitary(const Measure& nu, const Subgroup& k, const Character& rho) {
  check_pair(k, rho);
  if (nu.group() != k.parent()) throw PreconditionError("measure and subgroup live in different groups");
  const Measure e = Measure::char_idem(k, rho);
  const Measure star = adjoint(nu);
  if (!(convolve(star, nu) == e) || !(convolve(nu, star) == e)) return false;
  if (!(convolve(nu, e) == nu) || !(convolve(e, nu) == nu)) {
    throw InternalCheckError("local unitary fails to absorb its idempotent");
  }
  return true;
}

GammaProductReport verify_gamma_product(const Subgroup& k1, const Character& rho1, const Subgroup& k2,
                                        const Character& rho2) {
  check_pair(k1, rho1);
  check_pair(k2, rho2);
  const CommutationVerdict verdict = classify_pair(k1, rho1, k2, rho2, CommutationOptions{});
  if (verdict.kind != CommutationVerdict::Kind::Commute) {
    throw PreconditionError(std::string("pair does not commute with a nonzero product (") +
                            to_string(verdict.kind) + ")");
  }
  const GroupPtr& parent = k1.parent();
  GammaProductReport r{*verdict.product_subgroup, *verdict.product_character,
                       g_k_rho(k1, rho1), g_k_rho(k2, rho2), g_k_rho(*verdict.product_subgroup,
                                                                      *verdict.product_character),
                       Subgroup::trivial(parent), Subgroup::trivial(parent), Subgroup::trivial(parent),
                       0, 0, {}};
  r.h1 = intersection(r.g1, r.g12);
  r.h2 = intersection(r.g2, r.g12);
  std::vector<Elem> seed = r.h1.elements();
  seed.insert(seed.end(), r.h2.elements().begin(), r.h2.elements().end());
  r.generated = closure(parent, seed);

  const Measure e1 = Measure::char_idem(k1, rho1);
  const Measure e2 = Measure::char_idem(k2, rho2);
  const Measure e = Measure::char_idem(r.product, r.rho);

  // Forward: a product of unit-group elements that lands in the unit group
  // of e must have its g-part in <H1 H2>.
  for (Elem g2 : r.g2.elements()) {
    const Measure right = convolve(e1, left_translate(g2, e2));
    for (Elem g1 : r.g1.elements()) {
      ++r.pairs_checked;
      const auto part = gamma_part(left_translate(g1, right), r.product, r.rho);
      if (!part || !r.g12.contains(*part)) continue;
      ++r.pairs_in_gamma;
      if (!r.generated.contains(*part)) r.forward_violations.emplace_back(g1, g2);
    }
  }
  r.forward_ok = r.forward_violations.empty();

  // Reverse: delta_h e arises as (delta_h e1) e2 for h in H1 and as
  // e1 (delta_h e2) for h in H2.
  bool reverse = true;
  for (Elem h : r.h1.elements()) {
    reverse = reverse && convolve(left_translate(h, e1), e2) == left_translate(h, e);
  }
  for (Elem h : r.h2.elements()) {
    reverse = reverse && convolve(e1, left_translate(h, e2)) == left_translate(h, e);
  }
  // delta_a e delta_b e = delta_{ab} e follows from e * e = e and from
  // every b in <H1 H2> commuting with e.
  reverse = reverse && convolve(e, e) == e;
  for (Elem b : r.generated.elements()) {
    reverse = reverse && left_translate(b, e) == right_translate(e, b);
  }
  r.reverse_ok = reverse && r.generated.is_subset_of(r.g12);
  r.strict = r.generated.order() < r.g12.order();
  return r;
}

Measure nu_u(const Subgroup& h, const std::vector<CycloScalar>& u) {
  if (!h.is_abelian()) throw PreconditionError("nu_u needs an abelian subgroup");
  const std::vector<Character> dual = character_group(h);
  if (u.size() != dual.size()) {
    throw PreconditionError("nu_u expects " + std::to_string(dual.size()) + " values, got " +
                            std::to_string(u.size()));
  }
  for (const auto& z : u) {
    if (!(z * z.conj() == CycloScalar::one(1))) {
      throw PreconditionError("nu_u value " + z.to_string() + " is not of modulus one");
    }
  }
  const GroupTable& g = h.group();
  Measure nu = Measure::dirac(h.parent(), g.identity());
  const mpq_class inv_order(1, static_cast<long>(h.order()));
  for (std::size_t c = 0; c < dual.size(); ++c) {
    const CycloScalar weight = (u[c] - CycloScalar::one(1)) * inv_order;
    if (weight.is_zero()) continue;
    for (Elem x : h.elements()) nu.add(x, weight * dual[c].value(x).conj());
  }
  for (std::size_t c = 0; c < dual.size(); ++c) {
    CycloScalar total = CycloScalar::zero(1);
    for (Elem x : h.elements()) total += nu[x] * dual[c].value(x);
    if (!(total == u[c])) throw InternalCheckError("nu_u Fourier value mismatch");
  }
  return nu;
}

ExpReport exp_skew(const Measure& lambda, double term_floor, std::size_t max_terms) {
  if (!(adjoint(lambda) == CycloScalar::rational(-1) * lambda)) {
    throw PreconditionError("exp_skew: measure is not skew-adjoint");
  }
  const GroupTable& g = *lambda.group();
  const FloatMeasure l = lambda.to_complex();
  FloatMeasure term(g.order(), 0.0);
  term[g.identity()] = 1.0;
  ExpReport r;
  r.value = term;
  r.terms = 1;
  while (r.terms < max_terms) {
    term = convolve(g, term, l);
    const double k = static_cast<double>(r.terms);
    for (auto& c : term) c /= k;
    for (std::size_t i = 0; i < term.size(); ++i) r.value[i] += term[i];
    ++r.terms;
    if (max_abs(term) < term_floor) break;
  }
  FloatMeasure id(g.order(), 0.0);
  id[g.identity()] = 1.0;
  r.unitarity_residual = max_abs_diff(convolve(g, adjoint(g, r.value), r.value), id);
  if (r.unitarity_residual >= 1e-9) {
    throw InternalCheckError("exp_skew: result is not unitary (residual " +
                             std::to_string(r.unitarity_residual) + ")");
  }
  return r;
}

}  // namespace idem
