#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>

#include "idem/dynamics.hpp"
#include "idem/error.hpp"

using namespace idem;

namespace {

Measure two_point(const GroupPtr& g, Elem a, Elem b) {
  Measure mu(g);
  const auto half = CycloScalar::rational(mpq_class(1, 2), g->exponent());
  mu.add(a, half);
  mu.add(b, half);
  return mu;
}

// supp mu sits in a coset xN of a proper normal subgroup N of K, by enumeration.
bool obstructed_by_enumeration(const Subgroup& k, const std::vector<Elem>& supp) {
  const GroupTable& g = k.group();
  for (const Subgroup& n : all_subgroups(k)) {
    if (n.order() == k.order() || !n.is_normal_in(k)) continue;
    const Elem x = supp.front();
    bool inside = true;
    for (Elem s : supp) inside = inside && n.contains(g.mul(g.inv(x), s));
    if (inside) return true;
  }
  return false;
}

Subgroup gen(const GroupPtr& g, std::initializer_list<const char*> labels) {
  std::vector<Elem> seed;
  for (const char* l : labels) seed.push_back(*g->find(l));
  return closure(g, seed);
}

// Independent reduced-word arithmetic for C_m * C_n: pairs (factor, power).
using Word = std::vector<std::pair<int, int>>;
Word reduce_mul(Word a, const Word& b, int m, int n) {
  for (const auto& l : b) {
    if (!a.empty() && a.back().first == l.first) {
      const int p = (a.back().second + l.second) % (l.first == 0 ? m : n);
      a.pop_back();
      if (p) a.emplace_back(l.first, p);
    } else {
      a.push_back(l);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("Stromberg: spec examples") {
  const GroupPtr c4 = cyclic(4);
  const Measure mu = two_point(c4, 1, 3);
  const StrombergResult s = stromberg_check(mu);
  CHECK(s.verdict == StrombergResult::Verdict::Obstructed);
  CHECK(s.normal->elements() == std::vector<Elem>{0, 2});
  CHECK(*s.coset_representative == 1);
  CHECK(s.report.agreement);
  CHECK(s.report.persistent_residual > 0.1);
  const Measure mu2 = convolve(mu, mu);
  CHECK(mu2 == two_point(c4, 0, 2));
  CHECK(convolve(mu2, mu) == mu);

  const StrombergResult c3 = stromberg_check(two_point(cyclic(3), 1, 2));
  CHECK(c3.verdict == StrombergResult::Verdict::Converges);
  CHECK(c3.report.agreement);
  CHECK(c3.report.distance < 1e-9);

  const GroupPtr s3 = symmetric(3);
  const Elem t = *s3->find("(12)");
  const StrombergResult d = stromberg_check(Measure::dirac(s3, t));
  CHECK(d.verdict == StrombergResult::Verdict::Obstructed);
  CHECK(d.normal->order() == 1);
  CHECK(*d.coset_representative == t);
}

TEST_CASE("Stromberg: normal-closure obstruction agrees with enumeration (property)") {
  std::mt19937 rng(3);
  for (const GroupPtr& g : {cyclic(8), cyclic(12), symmetric(3), dihedral(4), quaternion(), symmetric(4)}) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g->order() - 1));
    for (int trial = 0; trial < 25; ++trial) {
      Measure mu(g);
      const int points = 1 + trial % 3;
      for (int i = 0; i < points; ++i) {
        mu.add(pick(rng), CycloScalar::rational(mpq_class(1, points), g->exponent()));
      }
      const StrombergResult s = stromberg_check(mu);
      CHECK((s.verdict == StrombergResult::Verdict::Obstructed) ==
            obstructed_by_enumeration(s.generated, support(mu)));
      INFO(g->order(), " ", support(mu).size(), " ", support(mu).front(), " ", support(mu).back(), " ", s.report.persistent_residual, " ", s.report.distance);
      CHECK(s.report.agreement);
    }
  }
}

TEST_CASE("Stromberg: non-probability input") {
  const GroupPtr c3 = cyclic(3);
  CHECK_THROWS_AS(stromberg_check(Measure(c3)), PreconditionError);
  Measure neg = Measure::dirac(c3, 0) * CycloScalar::rational(2);
  neg -= Measure::dirac(c3, 1);
  CHECK_THROWS_AS(stromberg_check(neg), PreconditionError);
  CHECK_THROWS_AS(stromberg_check(Measure::dirac(c3, 0) * CycloScalar::root_of_unity(1, 3)), PreconditionError);
}

TEST_CASE("power limits: examples") {
  const GroupPtr s3 = symmetric(3);
  const Subgroup a = gen(s3, {"(12)"}), b = gen(s3, {"(13)"});
  const Character sa = character_group(a).at(1), sb = character_group(b).at(1);

  const std::vector<Factor> single{{a, sa}};
  const LimitReport one = idempotent_power_limit(single);
  CHECK(one.prediction == LimitReport::Prediction::Limit);
  CHECK(*one.predicted == Measure::char_idem(a, sa));
  CHECK(one.agreement);

  const std::vector<Factor> signs{{a, sa}, {b, sb}};
  const LimitReport l = idempotent_power_limit(signs);
  CHECK(l.prediction == LimitReport::Prediction::Limit);
  CHECK(*l.limit_character == character_group(Subgroup::whole(s3)).at(1));
  CHECK(l.absorption);
  CHECK(l.agreement);

  const std::vector<Factor> mixed{{a, sa}, {b, Character::trivial(b)}};
  const LimitReport z = idempotent_power_limit(mixed);
  CHECK(z.prediction == LimitReport::Prediction::ZeroLimit);
  CHECK(max_abs(z.empirical) < 1e-9);
  CHECK(z.agreement);

  const std::vector<Factor> foreign{{a, sa}, {Subgroup::whole(cyclic(2)), Character::trivial(Subgroup::whole(cyclic(2)))}};
  CHECK_THROWS_AS(idempotent_power_limit(foreign), PreconditionError);
}

TEST_CASE("power limits on three factors") {
  const GroupPtr s4 = symmetric(4);
  const Subgroup a = gen(s4, {"(12)"}), b = gen(s4, {"(23)"}), c = gen(s4, {"(34)"});
  const std::vector<Factor> f{{a, Character::trivial(a)}, {b, Character::trivial(b)}, {c, Character::trivial(c)}};
  const LimitReport r = idempotent_power_limit(f, IterationOptions{.max_iterations = 3000});
  CHECK(r.limit_subgroup->order() == 24);
  CHECK(r.agreement);
}

TEST_CASE("idempotent products") {
  const GroupPtr s3 = symmetric(3);
  const Subgroup a = gen(s3, {"(12)"}), b = gen(s3, {"(13)"}), n = gen(s3, {"(123)"});
  const std::vector<Factor> noncomm{{a, Character::trivial(a)}, {b, Character::trivial(b)}};
  const ProductStructureReport r = verify_idempotent_product(noncomm);
  CHECK_FALSE(r.idempotent);
  CHECK_FALSE(r.hypothesis_holds);
  CHECK(r.passed);
  CHECK(r.summary.find("hypothesis fails") != std::string::npos);

  const std::vector<Factor> comm{{n, Character::trivial(n)}, {a, character_group(a).at(1)}};
  const ProductStructureReport c = verify_idempotent_product(comm);
  CHECK(c.hypothesis_holds);
  CHECK(c.product_set_is_subgroup);
  CHECK(c.support_is_product_set);
  CHECK(c.extension_exists);
  CHECK(c.passed);

  const std::vector<Factor> single{{a, character_group(a).at(1)}};
  CHECK(verify_idempotent_product(single).passed);
}

TEST_CASE("free words: normal form") {
  const FreeWord a = FreeWord::letter(0, 1, 2), b = FreeWord::letter(1, 1, 3);
  CHECK(FreeWord::letter(0, 2, 2).length() == 0);
  CHECK(a.times(a, 2, 3).length() == 0);
  CHECK(b.times(b, 2, 3).to_string() == "b^2");
  CHECK(b.times(b, 2, 3).times(b, 2, 3).length() == 0);
  const FreeWord ab = a.times(b, 2, 3);
  CHECK(ab.to_string() == "ab");
  CHECK(ab.times(ab, 2, 3).to_string() == "abab");
  // (ab)(b^2 a) = e
  const FreeWord inv = b.times(b, 2, 3).times(a, 2, 3);
  CHECK(ab.times(inv, 2, 3).length() == 0);
  CHECK(FreeWord().to_string() == "e");
  CHECK_THROWS_AS(FreeWord::letter(2, 1, 2), PreconditionError);
}

TEST_CASE("free words: associativity and the independent reducer (property)") {
  std::mt19937 rng(17);
  const int m = 3, n = 4;
  auto random_word = [&](Word& plain) {
    FreeWord w;
    std::uniform_int_distribution<int> len(0, 6), fac(0, 1), pw(1, 3);
    for (int i = len(rng); i > 0; --i) {
      const int f = fac(rng), p = pw(rng) % (f == 0 ? m : n);
      if (p == 0) continue;
      w = w.times(FreeWord::letter(f, p, f == 0 ? m : n), m, n);
      plain = reduce_mul(plain, Word{{f, p}}, m, n);
    }
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Word pa, pb, pc;
    const FreeWord a = random_word(pa), b = random_word(pb), c = random_word(pc);
    CHECK(a.times(b, m, n).times(c, m, n) == a.times(b.times(c, m, n), m, n));
    const FreeWord ab = a.times(b, m, n);
    const Word pab = reduce_mul(pa, pb, m, n);
    REQUIRE(ab.length() == pab.size());
    for (std::size_t i = 0; i < pab.size(); ++i) {
      CHECK(ab.at(i).factor == pab[i].first);
      CHECK(ab.at(i).power == pab[i].second);
    }
  }
}

TEST_CASE("free product decay on C2 * C3") {
  const DecayReport r = free_product_decay(2, 3);
  CHECK_FALSE(r.budget_exceeded);
  CHECK(r.powers_computed == 8);
  CHECK(r.max_coefficient.front() == mpq_class(1, 6));
  CHECK(r.strictly_decreasing);
  REQUIRE(r.below_epsilon_at.has_value());
  CHECK(*r.below_epsilon_at <= 8);
  for (const auto& mass : r.total_mass) CHECK(mass == 1);

  // nu^2 from the independent reducer
  std::map<Word, mpq_class> nu, sq;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      Word w;
      if (i) w.emplace_back(0, i);
      if (j) w.emplace_back(1, j);
      nu[w] += mpq_class(1, 6);
    }
  for (const auto& [u, p] : nu)
    for (const auto& [v, q] : nu) sq[reduce_mul(u, v, 2, 3)] += p * q;
  mpq_class best = 0;
  for (const auto& [w, c] : sq) best = std::max(best, c);
  CHECK(r.max_coefficient[1] == best);
  CHECK(r.support_size[1] == sq.size());
}

TEST_CASE("free product decay on C2 * C2 and budget handling") {
  const DecayReport d = free_product_decay(2, 2, FreeDecayOptions{.max_power = 12});
  for (std::size_t k = 1; k < d.max_coefficient.size(); ++k) {
    CHECK(d.max_coefficient[k] <= d.max_coefficient[k - 1]);
  }
  const DecayReport small = free_product_decay(3, 3, FreeDecayOptions{.max_power = 8, .word_budget = 500});
  CHECK(small.budget_exceeded);
  CHECK(small.powers_computed < 8);
  CHECK_THROWS_AS(free_product_decay(1, 3), PreconditionError);
}

TEST_CASE("word budget from the environment") {
  ::setenv("IDEM_WORD_BUDGET", "1234", 1);
  CHECK(default_word_budget() == 1234);
  ::setenv("IDEM_WORD_BUDGET", "junk", 1);
  CHECK(default_word_budget() == 5'000'000);
  ::unsetenv("IDEM_WORD_BUDGET");
  CHECK(default_word_budget() == 5'000'000);
}
