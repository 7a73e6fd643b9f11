#include "idem/commutation.hpp"

#include <limits>

#include "idem/error.hpp"

namespace idem {

const char* to_string(CommutationVerdict::Kind kind) {
  switch (kind) {
    case CommutationVerdict::Kind::ZeroProduct: return "ZeroProduct";
    case CommutationVerdict::Kind::Commute: return "Commute";
    case CommutationVerdict::Kind::NonCommuting: return "NonCommuting";
  }
  return "?";
}

namespace {

// k1 k2 -> rho1(k1) + rho2(k2) on K1K2, or nullopt if that is not a
// well-defined character.
std::optional<Character> product_character(const Subgroup& product, const Character& rho1,
                                           const Character& rho2) {
  const GroupTable& g = product.group();
  const unsigned n = g.exponent();
  constexpr unsigned kUnset = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> nums(product.order(), kUnset);
  for (Elem a : rho1.domain().elements()) {
    for (Elem b : rho2.domain().elements()) {
      const unsigned v = (rho1.numerator(a) + rho2.numerator(b)) % n;
      unsigned& slot = nums[product.position(g.mul(a, b))];
      if (slot == kUnset) {
        slot = v;
      } else if (slot != v) {
        return std::nullopt;
      }
    }
  }
  try {
    return Character::from_numerators(product, std::move(nums));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

CommutationVerdict classify_pair(const Subgroup& k1, const Character& rho1, const Subgroup& k2,
                                 const Character& rho2, const CommutationOptions& options) {
  if (!(rho1.domain() == k1) || !(rho2.domain() == k2)) {
    throw PreconditionError("classify_pair: character domain does not match its subgroup");
  }
  if (k1.parent() != k2.parent()) throw PreconditionError("classify_pair: subgroups of different groups");
  const GroupTable& g = k1.group();

  CommutationVerdict v;
  const Subgroup common = intersection(k1, k2);
  if (!(restrict(rho1, common) == restrict(rho2, common))) {
    v.kind = CommutationVerdict::Kind::ZeroProduct;
    v.reason = "characters differ on the intersection";
  } else {
    const ProductVerdict pv = is_subgroup_product(k1, k2);
    if (!pv.is_subgroup) {
      v.kind = CommutationVerdict::Kind::NonCommuting;
      v.reason = "K1K2 is not a subgroup: " + pv.reason;
    } else {
      const Subgroup product = make_subgroup(k1.parent(), product_set(k1, k2));
      auto rho = product_character(product, rho1, rho2);
      if (rho) {
        v.kind = CommutationVerdict::Kind::Commute;
        v.reason = "K1K2 is a subgroup carrying the product character";
        v.product_subgroup = product;
        v.product_character = std::move(rho);
      } else {
        v.kind = CommutationVerdict::Kind::NonCommuting;
        v.reason = "k1k2 -> rho1(k1)rho2(k2) is not a character on K1K2";
      }
    }
  }

  const bool need_products = options.cross_check || v.kind == CommutationVerdict::Kind::NonCommuting;
  if (!need_products) return v;

  const Measure mu = Measure::char_idem(k1, rho1);
  const Measure nu = Measure::char_idem(k2, rho2);
  v.forward = convolve(mu, nu);
  v.backward = convolve(nu, mu);
  for (Elem x = 0; x < g.order(); ++x) {
    if (!((*v.forward)[x] == (*v.backward)[x])) {
      v.witness = x;
      break;
    }
  }

  switch (v.kind) {
    case CommutationVerdict::Kind::ZeroProduct:
      if (!v.forward->is_zero() || !v.backward->is_zero()) {
        throw InternalCheckError("classify_pair: predicted zero product is nonzero");
      }
      break;
    case CommutationVerdict::Kind::Commute: {
      const Measure expected = Measure::char_idem(*v.product_subgroup, *v.product_character);
      if (!(*v.forward == expected) || !(*v.backward == expected)) {
        throw InternalCheckError("classify_pair: products differ from rho m_{K1K2}");
      }
      break;
    }
    case CommutationVerdict::Kind::NonCommuting:
      if (!v.witness) throw InternalCheckError("classify_pair: predicted non-commuting pair commutes");
      break;
  }
  return v;
}

SemidirectReport semidirect_counterexample(const GroupPtr& normal, const GroupPtr& acting,
                                           const std::vector<std::vector<Elem>>& action,
                                           const Character& rho) {
  if (rho.domain().parent() != normal || rho.domain().order() != normal->order()) {
    throw PreconditionError("semidirect_counterexample: rho must be a character of the whole normal factor");
  }
  if (!normal->is_abelian()) throw PreconditionError("semidirect_counterexample: normal factor must be abelian");
  const GroupPtr g = semidirect_product(normal, acting, action);
  const std::size_t nk = normal->order(), na = acting->order();

  std::optional<Elem> moving;
  for (Elem a = 0; a < na && !moving; ++a) {
    for (Elem k = 0; k < nk; ++k) {
      if (rho.numerator(action[a][k]) != rho.numerator(k)) {
        moving = a;
        break;
      }
    }
  }
  if (!moving) throw PreconditionError("semidirect_counterexample: rho is invariant under the action");

  auto embed = [nk](Elem k, Elem a) { return static_cast<Elem>(a * nk + k); };
  std::vector<Elem> kel, ael;
  for (Elem k = 0; k < nk; ++k) kel.push_back(embed(k, acting->identity()));
  for (Elem a = 0; a < na; ++a) ael.push_back(embed(normal->identity(), a));
  const Subgroup ksub = make_subgroup(g, kel);
  const Subgroup asub = make_subgroup(g, ael);

  const unsigned scale = g->exponent() / normal->exponent();
  std::vector<unsigned> nums;
  for (Elem x : ksub.elements()) nums.push_back(rho.numerator(static_cast<Elem>(x % nk)) * scale);
  const Character grho = Character::from_numerators(ksub, std::move(nums));

  const Measure rho_mk = Measure::char_idem(ksub, grho);
  const Measure m_a = Measure::haar(asub);
  SemidirectReport r{g, ksub, asub, grho, *moving, convolve(rho_mk, m_a), convolve(m_a, rho_mk), false, false,
                     CommutationVerdict{}};
  r.noncommuting = !(r.rho_then_haar == r.haar_then_rho);

  const mpq_class w(1, static_cast<long>(nk * na));
  bool match = true;
  for (Elem a = 0; a < na && match; ++a) {
    const Elem a_inv = acting->inv(a);
    for (Elem k = 0; k < nk && match; ++k) {
      const CycloScalar left = rho.value(k) * w;
      const CycloScalar right = rho.value(action[a_inv][k]) * w;
      match = r.rho_then_haar[embed(k, a)] == left && r.haar_then_rho[embed(k, a)] == right;
    }
  }
  r.closed_forms_match = match;
  r.verdict = classify_pair(ksub, grho, asub, Character::trivial(asub), CommutationOptions{true});
  return r;
}

}  // namespace idem
