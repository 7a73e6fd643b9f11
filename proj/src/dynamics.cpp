#include "idem/dynamics.hpp"

#include <algorithm>
#include <limits>

#include "idem/error.hpp"

namespace idem {

const char* to_string(LimitReport::Prediction p) {
  switch (p) {
    case LimitReport::Prediction::ZeroLimit: return "ZeroLimit";
    case LimitReport::Prediction::Limit: return "Limit";
    case LimitReport::Prediction::NoLimit: return "NoLimit";
  }
  return "?";
}

namespace {

// Iterates p_{k+1} = p_k * nu from p_1 = nu. With a target, stops once both
// the step residual and the distance to the target drop below tolerance.
void iterate_powers(const GroupTable& g, const FloatMeasure& nu, const FloatMeasure* target,
                    const IterationOptions& options, LimitReport& report) {
  FloatMeasure p = nu;
  report.residual_series.clear();
  report.iterations = 0;
  report.residual = std::numeric_limits<double>::infinity();
  report.distance = target ? max_abs_diff(p, *target) : 0.0;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    FloatMeasure q = convolve(g, p, nu);
    report.residual = max_abs_diff(q, p);
    report.residual_series.push_back(report.residual);
    p = std::move(q);
    report.iterations = it;
    if (target) {
      report.distance = max_abs_diff(p, *target);
      if (report.residual < options.tolerance && report.distance < options.tolerance) break;
    }
  }
  report.empirical = std::move(p);
  const std::size_t window = std::min(options.oscillation_window, report.residual_series.size());
  report.persistent_residual =
      window == 0 ? 0.0
                  : *std::min_element(report.residual_series.end() - static_cast<std::ptrdiff_t>(window),
                                      report.residual_series.end());
}

void validate_factors(std::span<const Factor> factors) {
  if (factors.empty()) throw PreconditionError("at least one factor is required");
  for (const auto& f : factors) {
    if (!(f.character.domain() == f.subgroup)) {
      throw PreconditionError("factor character is not defined on its subgroup");
    }
    if (f.subgroup.parent() != factors.front().subgroup.parent()) {
      throw PreconditionError("factors live in different groups");
    }
  }
}

}  // namespace

Measure factor_product(std::span<const Factor> factors) {
  validate_factors(factors);
  Measure nu = Measure::char_idem(factors[0].subgroup, factors[0].character);
  for (std::size_t j = 1; j < factors.size(); ++j) {
    nu = convolve(nu, Measure::char_idem(factors[j].subgroup, factors[j].character));
  }
  return nu;
}

StrombergResult stromberg_check(const Measure& mu, const IterationOptions& options) {
  mpq_class mass = 0;
  for (const auto& c : mu.coefficients()) {
    if (!c.is_rational() || sgn(c.rational_part()) < 0) {
      throw PreconditionError("stromberg_check: measure is not a probability (negative or non-real mass)");
    }
    mass += c.rational_part();
  }
  if (mass != 1) throw PreconditionError("stromberg_check: total mass is " + mass.get_str() + ", not 1");

  const GroupPtr& parent = mu.group();
  const GroupTable& g = *parent;
  const auto supp = support(mu);
  const Subgroup k = make_subgroup(parent, closure(parent, supp).elements());

  // supp mu lies in x N iff N contains every s0^-1 s, so the smallest
  // obstructing normal subgroup is the normal closure of those quotients.
  const Elem s0 = supp.front();
  std::vector<Elem> quotients;
  for (Elem s : supp) quotients.push_back(g.mul(g.inv(s0), s));
  const Subgroup n0 = normal_closure(k, quotients);

  StrombergResult result{StrombergResult::Verdict::Converges, k, std::nullopt, std::nullopt, LimitReport{}};
  LimitReport& report = result.report;
  const FloatMeasure nu = mu.to_complex();
  if (n0.order() == k.order()) {
    report.prediction = LimitReport::Prediction::Limit;
    report.predicted = Measure::haar(k);
    report.limit_subgroup = k;
    report.limit_character = Character::trivial(k);
    const FloatMeasure target = report.predicted->to_complex();
    iterate_powers(g, nu, &target, options, report);
    report.agreement = report.residual < options.tolerance && report.distance < options.tolerance;
  } else {
    result.verdict = StrombergResult::Verdict::Obstructed;
    Elem rep = std::numeric_limits<Elem>::max();
    for (Elem x : n0.elements()) rep = std::min(rep, g.mul(s0, x));
    result.normal = n0;
    result.coset_representative = rep;
    report.prediction = LimitReport::Prediction::NoLimit;
    report.obstruction = n0;
    report.coset_representative = rep;
    iterate_powers(g, nu, nullptr, options, report);
    // consecutive powers sit on disjoint cosets of n0, so the sup gap tends to 1/|n0|
    const double floor = std::min(options.oscillation_floor, 0.5 / static_cast<double>(n0.order()));
    report.agreement = report.persistent_residual > floor;
  }
  return result;
}

LimitReport idempotent_power_limit(std::span<const Factor> factors, const IterationOptions& options) {
  validate_factors(factors);
  const GroupPtr& parent = factors.front().subgroup.parent();
  std::vector<Elem> all;
  std::vector<Character> constraints;
  for (const auto& f : factors) {
    all.insert(all.end(), f.subgroup.elements().begin(), f.subgroup.elements().end());
    constraints.push_back(f.character);
  }
  const Subgroup l = make_subgroup(parent, closure(parent, all).elements());
  const auto rho = find_extension(l, constraints);
  const Measure nu = factor_product(factors);

  LimitReport report;
  FloatMeasure target(parent->order(), 0.0);
  if (rho) {
    report.prediction = LimitReport::Prediction::Limit;
    report.predicted = Measure::char_idem(l, *rho);
    report.limit_subgroup = l;
    report.limit_character = *rho;
    report.absorption = convolve(nu, *report.predicted) == *report.predicted;
    for (const auto& f : factors) {
      const Measure e = Measure::char_idem(f.subgroup, f.character);
      report.absorption = report.absorption && convolve(e, *report.predicted) == *report.predicted;
    }
    target = report.predicted->to_complex();
  } else {
    report.prediction = LimitReport::Prediction::ZeroLimit;
  }
  iterate_powers(*parent, nu.to_complex(), &target, options, report);
  report.agreement = report.absorption && report.distance <= options.tolerance;
  return report;
}

ProductStructureReport verify_idempotent_product(std::span<const Factor> factors) {
  validate_factors(factors);
  const GroupPtr& parent = factors.front().subgroup.parent();
  const GroupTable& g = *parent;
  ProductStructureReport r;
  const Measure nu = factor_product(factors);
  r.idempotent = convolve(nu, nu) == nu;
  r.nonzero = !nu.is_zero();
  r.hypothesis_holds = r.idempotent && r.nonzero;

  std::vector<Elem> p = factors.front().subgroup.elements();
  for (std::size_t j = 1; j < factors.size(); ++j) {
    std::vector<char> mark(g.order(), 0);
    for (Elem a : p) {
      for (Elem b : factors[j].subgroup.elements()) mark[g.mul(a, b)] = 1;
    }
    p.clear();
    for (Elem x = 0; x < g.order(); ++x) {
      if (mark[x]) p.push_back(x);
    }
  }
  r.product_set = p;
  r.product_set_is_subgroup = closure(parent, p).order() == p.size();
  r.support_is_product_set = support(nu) == p;
  if (r.product_set_is_subgroup) {
    std::vector<Character> constraints;
    for (const auto& f : factors) constraints.push_back(f.character);
    r.extension_exists = find_extension(make_subgroup(parent, p), constraints).has_value();
  }
  if (!r.hypothesis_holds) {
    r.passed = true;
    r.summary = r.idempotent ? "hypothesis fails: product is zero" : "hypothesis fails: product is not idempotent";
  } else {
    r.passed = r.product_set_is_subgroup && r.support_is_product_set && r.extension_exists;
    r.summary = r.passed ? "nonzero idempotent product: K1...Km is a subgroup with an extending character"
                         : "nonzero idempotent product violates the expected structure";
  }
  return r;
}

}  // namespace idem
