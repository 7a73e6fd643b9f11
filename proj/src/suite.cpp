#include "idem/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "idem/commutation.hpp"
#include "idem/dynamics.hpp"
#include "idem/error.hpp"
#include "idem/lie.hpp"
#include "idem/measure_groups.hpp"

namespace idem {

namespace {

struct Outcome {
  bool passed = true;
  std::string failures;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      failures += (failures.empty() ? "" : "; ") + what;
      passed = false;
    }
  }
  std::string text() const { return passed ? detail.str() : "FAILED: " + failures; }
};

using FixtureFn = std::function<void(Outcome&, bool corrupt, const SuiteOptions&)>;

struct Fixture {
  std::string id;
  std::string title;
  bool corruptible;
  FixtureFn run;
};

Subgroup by_labels(const GroupPtr& g, std::initializer_list<const char*> labels) {
  std::vector<Elem> seed;
  for (const char* l : labels) seed.push_back(*g->find(l));
  return closure(g, seed);
}

std::vector<std::pair<Subgroup, Character>> all_pairs(const GroupPtr& g) {
  std::vector<std::pair<Subgroup, Character>> out;
  for (const Subgroup& k : all_subgroups(g)) {
    for (const Character& rho : character_group(k)) out.emplace_back(k, rho);
  }
  return out;
}

// (T x T) x| {id, swap}; (t, s) has index s * |T|^2 + t and T x T uses a * |T| + b.
GroupPtr swap_group(const GroupPtr& t) {
  const GroupPtr tt = direct_product(t, t);
  const std::size_t n = t->order();
  std::vector<std::vector<Elem>> action(2, std::vector<Elem>(tt->order()));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      action[0][a * n + b] = a * n + b;
      action[1][a * n + b] = b * n + a;
    }
  }
  return semidirect_product(tt, cyclic(2), action);
}

// --- fixtures -------------------------------------------------------------

void semidirect_noncommuting(Outcome& o, bool corrupt, const SuiteOptions&) {
  struct Case {
    unsigned n;
    unsigned acting;
    unsigned multiplier;  // generator of the acting group sends k to multiplier * k
  };
  for (const Case c : {Case{3, 2, 2}, Case{5, 2, 4}, Case{7, 3, 2}, Case{5, 4, 2}}) {
    const GroupPtr normal = cyclic(c.n);
    const GroupPtr acting = cyclic(c.acting);
    std::vector<std::vector<Elem>> action(c.acting, std::vector<Elem>(c.n));
    unsigned mult = 1;
    for (Elem a = 0; a < c.acting; ++a) {
      for (Elem k = 0; k < c.n; ++k) action[a][k] = static_cast<Elem>((mult * k) % c.n);
      mult = (mult * c.multiplier) % c.n;
    }
    const auto chars = character_group(Subgroup::whole(normal));
    const Character& rho = corrupt ? chars.front() : chars.at(1);
    const std::string tag = "C" + std::to_string(c.n) + "xC" + std::to_string(c.acting);
    try {
      const SemidirectReport r = semidirect_counterexample(normal, acting, action, rho);
      o.check(r.noncommuting, tag + ": rho m_K and m_A commute");
      o.check(r.closed_forms_match, tag + ": convolution closed forms differ");
      o.check(r.verdict.kind == CommutationVerdict::Kind::NonCommuting, tag + ": decision procedure disagrees");
    } catch (const PreconditionError& e) {
      o.check(false, tag + ": " + e.what());
    }
  }
  o.detail << "4 semidirect products, rho m_K * m_A != m_A * rho m_K";
}

void matched_pair_s5(Outcome& o, bool corrupt, const SuiteOptions&) {
  const GroupPtr s5 = symmetric(5);
  const Subgroup k1 = by_labels(s5, {"(1234)", "(12)"});
  const Subgroup k2 = by_labels(s5, {"(12345)"});
  o.check(k1.order() == 24 && k2.order() == 5, "unexpected subgroup orders");
  o.check(product_set(k1, k2).size() == 120, "S4 C5 is not all of S5");
  o.check(!k1.is_normal_in(Subgroup::whole(s5)) && !k2.is_normal_in(Subgroup::whole(s5)),
          "a factor is normal");
  const auto c1 = character_group(k1);
  const auto c2 = character_group(k2);
  o.check(c1.size() == 2 && c2.size() == 5, "unexpected character group sizes");
  std::size_t noncommuting = 0;
  for (const Character& rho1 : c1) {
    for (std::size_t j = 1; j < c2.size(); ++j) {
      const Character& rho2 = corrupt ? c2.front() : c2[j];
      const auto v = classify_pair(k1, rho1, k2, rho2, CommutationOptions{true});
      if (v.kind == CommutationVerdict::Kind::NonCommuting) ++noncommuting;
    }
  }
  o.check(noncommuting == 8, "expected 8 noncommuting cases, got " + std::to_string(noncommuting));
  const auto v = classify_pair(k1, c1.front(), k2, c2.front(), CommutationOptions{true});
  o.check(v.kind == CommutationVerdict::Kind::Commute && v.product_subgroup->order() == 120 &&
              v.product_character->is_trivial(),
          "trivial characters do not give m_S5");
  o.detail << noncommuting << "/8 noncommuting; trivial pair gives m_S5";
}

void commutation_sweep(Outcome& o, bool, const SuiteOptions&) {
  std::size_t cases = 0, mismatches = 0;
  for (const GroupPtr& g : {symmetric(3), symmetric(4), dihedral(4), quaternion()}) {
    const auto pairs = all_pairs(g);
    for (const auto& [k1, rho1] : pairs) {
      const Measure e1 = Measure::char_idem(k1, rho1);
      for (const auto& [k2, rho2] : pairs) {
        const Measure e2 = Measure::char_idem(k2, rho2);
        const Measure f = convolve(e1, e2), b = convolve(e2, e1);
        const auto v = classify_pair(k1, rho1, k2, rho2, CommutationOptions{false});
        bool ok;
        switch (v.kind) {
          case CommutationVerdict::Kind::ZeroProduct: ok = f.is_zero() && b.is_zero(); break;
          case CommutationVerdict::Kind::Commute:
            ok = !f.is_zero() && f == b && f == Measure::char_idem(*v.product_subgroup, *v.product_character);
            break;
          default: ok = !(f == b) && v.witness && !(f[*v.witness] == b[*v.witness]); break;
        }
        ++cases;
        if (!ok) ++mismatches;
      }
    }
  }
  o.check(mismatches == 0, std::to_string(mismatches) + " verdicts contradict brute force");
  o.detail << cases << " ordered (K,rho) pairs over S3, S4, D4, Q8";
}

void power_limit_showcase(Outcome& o, bool corrupt, const SuiteOptions&) {
  const GroupPtr s3 = symmetric(3);
  const Subgroup k1 = by_labels(s3, {"(12)"});
  const Subgroup k2 = by_labels(s3, {"(13)"});
  const Character sgn1 = character_group(k1).at(1);
  const Character sgn2 = character_group(k2).at(1);
  const Character triv2 = Character::trivial(k2);
  const std::vector<Factor> limit{{k1, sgn1}, {k2, corrupt ? triv2 : sgn2}};
  const LimitReport a = idempotent_power_limit(limit);
  const Character sgn = character_group(Subgroup::whole(s3)).at(1);
  o.check(a.prediction == LimitReport::Prediction::Limit && a.limit_subgroup->order() == 6 &&
              *a.limit_character == sgn,
          "sgn pair does not predict sgn m_S3");
  o.check(a.agreement, "sgn pair: iteration disagrees with prediction");
  const std::vector<Factor> zero{{k1, sgn1}, {k2, triv2}};
  const LimitReport b = idempotent_power_limit(zero);
  o.check(b.prediction == LimitReport::Prediction::ZeroLimit, "mixed pair does not predict 0");
  o.check(b.agreement && b.distance < 1e-9, "mixed pair: iteration does not decay");
  o.detail << "sgn pair -> sgn m_S3 (" << a.iterations << " iterations); mixed pair -> 0 (" << b.iterations
           << " iterations)";
}

void power_limit_sweep(Outcome& o, bool, const SuiteOptions&) {
  std::size_t cases = 0, failures = 0, limits = 0;
  double worst = 0.0;
  for (const GroupPtr& g : {symmetric(3), dihedral(4)}) {
    const auto pairs = all_pairs(g);
    for (const auto& [k1, rho1] : pairs) {
      for (const auto& [k2, rho2] : pairs) {
        const std::vector<Factor> f{{k1, rho1}, {k2, rho2}};
        const LimitReport r = idempotent_power_limit(f);
        ++cases;
        if (r.prediction == LimitReport::Prediction::Limit) ++limits;
        worst = std::max(worst, r.distance);
        if (!r.agreement || r.iterations > 500 || r.distance > 1e-9) ++failures;
        if (!verify_idempotent_product(f).passed) ++failures;
      }
    }
  }
  o.check(failures == 0, std::to_string(failures) + " factor pairs disagree");
  o.detail << cases << " factor pairs over S3 and D4, " << limits << " nonzero limits, worst distance " << worst;
}

void stromberg_cyclic(Outcome& o, bool, const SuiteOptions&) {
  std::size_t cases = 0, obstructed = 0, failures = 0;
  for (unsigned n = 2; n <= 12; ++n) {
    const GroupPtr c = cyclic(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        Measure mu(c);
        mu.add(a, CycloScalar::rational(mpq_class(1, 2), c->exponent()));
        mu.add(b, CycloScalar::rational(mpq_class(1, 2), c->exponent()));
        const StrombergResult s = stromberg_check(mu);
        ++cases;
        if (s.verdict == StrombergResult::Verdict::Obstructed) ++obstructed;
        if (!s.report.agreement) ++failures;
      }
    }
  }
  o.check(failures == 0, std::to_string(failures) + " verdicts contradict the iteration");

  const GroupPtr c4 = cyclic(4);
  const auto half = CycloScalar::rational(mpq_class(1, 2), 4);
  Measure mu(c4);
  mu.add(1, half);
  mu.add(3, half);
  Measure sq(c4);
  sq.add(0, half);
  sq.add(2, half);
  const Measure mu2 = convolve(mu, mu);
  o.check(mu2 == sq, "C4: mu^2 != (delta_e + delta_a^2)/2");
  o.check(convolve(mu2, mu) == mu, "C4: mu^3 != mu");
  const StrombergResult s = stromberg_check(mu);
  o.check(s.verdict == StrombergResult::Verdict::Obstructed && s.normal->order() == 2 &&
              s.coset_representative == Elem{1},
          "C4: expected obstruction <a^2> with coset a<a^2>");
  o.detail << cases << " two-point supports on C2..C12, " << obstructed << " obstructed; C4 oscillation exact";
}

void free_product(Outcome& o, bool, const SuiteOptions&) {
  FreeDecayOptions opts;
  opts.word_budget = default_word_budget();
  const DecayReport r = free_product_decay(2, 3, opts);
  o.check(!r.budget_exceeded, "word budget exceeded");
  o.check(r.strictly_decreasing, "max coefficient is not strictly decreasing");
  o.check(r.below_epsilon_at && *r.below_epsilon_at <= 8, "max coefficient not below 1/10 by power 8");
  o.detail << "C2*C3 max coefficient " << r.max_coefficient.front().get_str() << " -> "
           << r.max_coefficient.back().get_str() << " over " << r.powers_computed << " powers";
}

void torus_product(Outcome& o, bool, const SuiteOptions& options) {
  const TorusProductReport r = torus_product_report(options.grid);
  o.check(r.separated, "no panel function separates the measures");
  o.check(std::abs(r.panel[0].product - 1.0) < 1e-12 && std::abs(r.panel[0].haar - 1.0) < 1e-12,
          "normalization is off");
  o.check(std::abs(r.panel[2].product - 0.5) < 1e-6, "product integral of g11^2 is not 1/2");
  o.check(std::abs(r.panel[2].haar - 1.0 / 3.0) < 1e-6, "Haar integral of g11^2 is not 1/3");
  o.detail << "g11^2: product " << r.panel[2].product << ", Haar " << r.panel[2].haar << ", delta "
           << r.panel[2].delta;
}

void central_factor(Outcome& o, bool, const SuiteOptions&) {
  const GroupPtr g = direct_product(cyclic(2), symmetric(3));
  const Subgroup k1 = by_labels(g, {"(a,e)"});
  const Subgroup k2 = by_labels(g, {"(e,(12))"});
  const Character rho1 = character_group(k1).at(1);
  const Character rho2 = character_group(k2).at(1);
  o.check(g_k_rho(k1, rho1).order() == g->order(), "central factor does not give G_{K1,rho1} = G");
  const GammaProductReport r = verify_gamma_product(k1, rho1, k2, rho2);
  o.check(r.forward_ok && r.reverse_ok, "forward or reverse inclusion fails");
  o.check(r.generated == r.g12 && !r.strict, "expected equality with the full unit group");
  o.detail << "<H1 H2> has order " << r.generated.order() << " = |G_{K1K2,rho}|";
}

void matched_pair_equality(Outcome& o, bool, const SuiteOptions&) {
  const GroupPtr s5 = symmetric(5);
  const Subgroup k1 = by_labels(s5, {"(1234)", "(12)"});
  const Subgroup k2 = by_labels(s5, {"(12345)"});
  const Character sgn = character_group(Subgroup::whole(s5)).at(1);
  for (bool signed_case : {false, true}) {
    const Character rho1 = signed_case ? restrict(sgn, k1) : Character::trivial(k1);
    const Character rho2 = signed_case ? restrict(sgn, k2) : Character::trivial(k2);
    const GammaProductReport r = verify_gamma_product(k1, rho1, k2, rho2);
    const std::string tag = signed_case ? "sgn" : "trivial";
    o.check(r.product.order() == 120, tag + ": K1K2 is not S5");
    o.check(r.forward_ok && r.reverse_ok, tag + ": forward or reverse inclusion fails");
    o.check(r.generated.order() == 120 && r.g12.order() == 120 && !r.strict, tag + ": expected equality");
  }
  o.detail << "S4 C5 = S5 with trivial and sign characters: <H1 H2> = S5";
}

void swap_semidirect(Outcome& o, bool corrupt, const SuiteOptions&) {
  const GroupPtr t = cyclic(3);
  const GroupPtr g = swap_group(t);
  const unsigned n = g->exponent();  // 6
  std::vector<Elem> a_part, b_part, both;
  for (Elem x = 0; x < 3; ++x) {
    a_part.push_back(x * 3);
    b_part.push_back(x);
  }
  for (Elem x = 0; x < 9; ++x) both.push_back(x);
  const Subgroup k1 = make_subgroup(g, a_part);
  const Subgroup k2 = make_subgroup(g, b_part);
  const Subgroup tt = make_subgroup(g, both);
  // rho0(a) = 1/3 on each factor; the corrupted run uses rho0^2 on the second.
  const unsigned step2 = corrupt ? 2 * n / 3 : n / 3;
  const Character rho1 = Character::from_numerators(k1, {0, n / 3, 2 * n / 3});
  const Character rho2 = Character::from_numerators(k2, {0, step2, (2 * step2) % n});
  o.check(g_k_rho(k1, rho1) == tt, "G_{T x e, rho1} != T x T");
  const GammaProductReport r = verify_gamma_product(k1, rho1, k2, rho2);
  o.check(r.product == tt, "K1K2 != T x T");
  o.check(r.g12.order() == 18, "G_{T x T, rho} != G");
  o.check(r.generated == tt, "<H1 H2> != T x T");
  o.check(r.forward_ok && r.reverse_ok, "forward or reverse inclusion fails");
  o.check(r.strict, "inclusion is not strict");
  o.detail << "<H1 H2> = T x T (order 9) strictly inside G_{T x T, rho} = G (order 18)";
}

void g_k_rho_agreement(Outcome& o, bool, const SuiteOptions&) {
  std::size_t cases = 0, failures = 0;
  for (const GroupPtr& g : {symmetric(3), symmetric(4), dihedral(4), swap_group(cyclic(3))}) {
    for (const auto& [k, rho] : all_pairs(g)) {
      ++cases;
      try {
        const Subgroup gk = g_k_rho(k, rho);
        if (!k.is_subset_of(gk)) ++failures;
        for (Elem x : gk.elements()) {
          if (!is_local_unitary(left_translate(x, Measure::char_idem(k, rho)), k, rho)) {
            ++failures;
            break;
          }
        }
      } catch (const InternalCheckError&) {
        ++failures;
      }
    }
  }
  o.check(failures == 0, std::to_string(failures) + " (K,rho) pairs fail");
  o.detail << cases << " (K,rho) pairs over S3, S4, D4 and the order-18 swap group";
}

void abelian_unitaries(Outcome& o, bool, const SuiteOptions&) {
  std::mt19937 rng(20240611);
  std::size_t checks = 0;
  for (const GroupPtr& g : {cyclic(4), direct_product(cyclic(2), cyclic(3))}) {
    const Subgroup h = Subgroup::whole(g);
    const auto dual = character_group(h);
    const unsigned n = g->exponent();
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    auto draw = [&] {
      std::vector<CycloScalar> u;
      for (std::size_t i = 0; i < dual.size(); ++i) u.push_back(CycloScalar::root_of_unity(pick(rng), n));
      return u;
    };
    const Subgroup e = Subgroup::trivial(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = draw(), v = draw();
      std::vector<CycloScalar> uv, ubar;
      for (std::size_t i = 0; i < u.size(); ++i) {
        uv.push_back(u[i] * v[i]);
        ubar.push_back(u[i].conj());
      }
      const Measure nu = nu_u(h, u);
      o.check(convolve(nu, nu_u(h, v)) == nu_u(h, uv), "product law fails");
      o.check(adjoint(nu) == nu_u(h, ubar), "adjoint law fails");
      o.check(is_local_unitary(nu, e, Character::trivial(e)), "nu_u is not a unitary");
      ++checks;
    }
    for (Elem g0 = 0; g0 < g->order(); ++g0) {
      std::vector<CycloScalar> u;
      for (const auto& chi : dual) u.push_back(chi.value(g0));
      o.check(nu_u(h, u) == Measure::dirac(g, g0), "character evaluation does not give a Dirac mass");
    }
  }
  o.detail << checks << " random unit families on C4 and C2xC3";
}

Measure random_skew(const GroupPtr& g, std::mt19937& rng) {
  const unsigned n = g->exponent();
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<unsigned> root(0, n - 1);
  Measure x(g);
  for (Elem e = 0; e < g->order(); ++e) {
    x.add(e, CycloScalar::rational(mpq_class(num(rng), 4), n) * CycloScalar::root_of_unity(root(rng), n));
  }
  return x - adjoint(x);
}

void skew_exponentials(Outcome& o, bool, const SuiteOptions&) {
  std::mt19937 rng(7);
  double worst = 0.0, worst_oracle = 0.0;
  for (const GroupPtr& g : {cyclic(3), symmetric(3)}) {
    const auto dual = g->is_abelian() ? character_group(Subgroup::whole(g)) : std::vector<Character>{};
    for (int trial = 0; trial < 20; ++trial) {
      const Measure lambda = random_skew(g, rng);
      const ExpReport r = exp_skew(lambda);
      worst = std::max(worst, r.unitarity_residual);
      for (const auto& chi : dual) {
        std::complex<double> hat = 0.0, got = 0.0;
        for (Elem x = 0; x < g->order(); ++x) {
          hat += lambda[x].to_complex() * chi.value(x).to_complex();
          got += r.value[x] * chi.value(x).to_complex();
        }
        worst_oracle = std::max(worst_oracle, std::abs(got - std::exp(hat)));
      }
    }
  }
  o.check(worst < 1e-9, "unitarity residual too large");
  o.check(worst_oracle < 1e-9, "character oracle mismatch on C3");
  o.detail << "40 skew measures on C3, S3; worst residual " << worst << ", oracle gap " << worst_oracle;
}

void structural_invariants(Outcome& o, bool, const SuiteOptions&) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::size_t weyl = 0, bijections = 0, idems = 0;
  for (const GroupPtr& g : {symmetric(3), symmetric(4), dihedral(4), quaternion()}) {
    const auto subs = all_subgroups(g);
    std::vector<double> u(g->order());
    for (auto& x : u) x = unif(rng);
    for (const Subgroup& h : subs) {
      for (const Subgroup& l : subs) {
        if (!l.is_subset_of(h)) continue;
        double lhs = 0.0, rhs = 0.0;
        for (Elem x : h.elements()) lhs += u[x];
        lhs /= h.order();
        const CosetSpace cs = left_cosets(h, l);
        for (Elem rep : cs.representatives) {
          for (Elem y : l.elements()) rhs += u[g->mul(rep, y)];
        }
        rhs /= static_cast<double>(l.order() * cs.cosets.size());
        o.check(std::abs(lhs - rhs) < 1e-12, "coset sum identity fails");
        ++weyl;
      }
    }
    for (const Subgroup& k1 : subs) {
      for (const Subgroup& k2 : subs) {
        if (!is_subgroup_product(k1, k2).is_subgroup) continue;
        const Subgroup k = intersection(k1, k2);
        const Subgroup k12 = closure(g, product_set(k1, k2));
        const CosetSpace dom = left_cosets(k1, k);
        const CosetSpace cod = left_cosets(k12, k2);
        std::vector<int> coset_of(g->order(), -1);
        for (std::size_t c = 0; c < cod.cosets.size(); ++c) {
          for (Elem x : cod.cosets[c]) coset_of[x] = static_cast<int>(c);
        }
        std::vector<int> hit(cod.cosets.size(), 0);
        bool ok = dom.cosets.size() == cod.cosets.size();
        for (const auto& c : dom.cosets) {
          const int target = coset_of[c.front()];
          for (Elem x : c) ok = ok && coset_of[x] == target;
          ok = ok && target >= 0 && hit[target]++ == 0;
        }
        o.check(ok, "K1/(K1 n K2) -> K1K2/K2 is not a bijection");
        ++bijections;
      }
    }
    for (const Subgroup& k : subs) {
      const auto chars = character_group(k);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        const Measure e = Measure::char_idem(k, chars[i]);
        o.check(adjoint(e) == e, "char_idem is not self-adjoint");
        for (std::size_t j = 0; j < chars.size(); ++j) {
          const bool zero = convolve(e, Measure::char_idem(k, chars[j])).is_zero();
          o.check(zero == (i != j), "orthogonality fails");
        }
        ++idems;
      }
    }
  }
  o.detail << weyl << " coset sums, " << bijections << " coset bijections, " << idems
           << " self-adjoint orthogonal idempotents";
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = {
      {"semidirect-noncommuting", "rho m_K and m_A fail to commute in K x| A", true, semidirect_noncommuting},
      {"matched-pair-s5", "S4 and a 5-cycle in S5: 8 noncommuting pairs", true, matched_pair_s5},
      {"commutation-sweep", "commutation verdicts against brute force", false, commutation_sweep},
      {"power-limit-showcase", "powers of two S3 factors: sgn m_S3 and 0", true, power_limit_showcase},
      {"power-limit-sweep", "predicted power limits over S3 and D4", false, power_limit_sweep},
      {"stromberg-cyclic", "coset obstruction on cyclic groups", false, stromberg_cyclic},
      {"free-product-decay", "powers of m_C2 * m_C3 in C2 * C3 decay", false, free_product},
      {"torus-product-so3", "m_T1 * m_T2 * m_T1 differs from Haar on SO(3)", false, torus_product},
      {"central-factor-equality", "central K1 gives the full unit group", false, central_factor},
      {"matched-pair-equality", "S5 = S4 C5 gives the full unit group", false, matched_pair_equality},
      {"swap-semidirect-strict", "(C3 x C3) x| C2: strict inclusion", true, swap_semidirect},
      {"g-k-rho-agreement", "two definitions of G_{K,rho} agree", false, g_k_rho_agreement},
      {"abelian-unitaries", "nu_u realizes unit families on abelian groups", false, abelian_unitaries},
      {"skew-exponentials", "exponentials of skew measures are unitary", false, skew_exponentials},
      {"structural-invariants", "coset sums, coset bijection, orthogonality", false, structural_invariants},
  };
  return list;
}

}  // namespace

std::vector<std::string> suite_fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& f : fixtures()) ids.push_back(f.id);
  return ids;
}

std::vector<FixtureResult> run_suite(const SuiteOptions& options) {
  const auto& list = fixtures();
  auto known = [&](const std::string& id) {
    return std::any_of(list.begin(), list.end(), [&](const Fixture& f) { return f.id == id; });
  };
  if (options.only && !known(*options.only)) throw PreconditionError("unknown fixture '" + *options.only + "'");
  if (options.corrupt) {
    auto it = std::find_if(list.begin(), list.end(), [&](const Fixture& f) { return f.id == *options.corrupt; });
    if (it == list.end() || !it->corruptible) {
      throw PreconditionError("fixture '" + *options.corrupt + "' has no character input to corrupt");
    }
  }
  std::vector<FixtureResult> results;
  for (const auto& f : list) {
    if (options.only && f.id != *options.only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      f.run(o, options.corrupt && *options.corrupt == f.id, options);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({f.id, f.title, o.passed, o.text(), secs});
  }
  return results;
}

}  // namespace idem
