#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "idem/error.hpp"
#include "idem/measure.hpp"

using namespace idem;

namespace {

Measure random_measure(const GroupPtr& g, std::mt19937& rng) {
  const unsigned n = g->exponent();
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<long> root(0, n - 1);
  Measure mu(g);
  for (Elem x = 0; x < g->order(); ++x) {
    mu.set(x, CycloScalar::root_of_unity(root(rng), n) * mpq_class(num(rng), 2));
  }
  return mu;
}

// Direct O(n^2) floating-point convolution straight from the definition.
FloatMeasure oracle_convolve(const GroupTable& g, const FloatMeasure& a, const FloatMeasure& b) {
  FloatMeasure out(g.order(), 0.0);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h = 0; h < g.order(); ++h) out[x] += a[h] * b[g.mul(g.inv(h), x)];
  return out;
}

Subgroup gen(const GroupPtr& g, std::initializer_list<const char*> labels) {
  std::vector<Elem> seed;
  for (const char* l : labels) seed.push_back(*g->find(l));
  return closure(g, seed);
}

}  // namespace

TEST_CASE("basic constructions") {
  const GroupPtr s3 = symmetric(3);
  CHECK(Measure::haar(Subgroup::trivial(s3)) == Measure::dirac(s3, s3->identity()));
  for (const Subgroup& k : all_subgroups(s3)) {
    CHECK(Measure::char_idem(k, Character::trivial(k)) == Measure::haar(k));
    CHECK(support(Measure::haar(k)) == k.elements());
  }
  const Subgroup c2 = gen(s3, {"(12)"});
  const Measure e = Measure::char_idem(c2, character_group(c2).at(1));
  CHECK(e[s3->identity()] == CycloScalar::rational(mpq_class(1, 2)));
  CHECK(e[*s3->find("(12)")] == CycloScalar::rational(mpq_class(-1, 2)));
  CHECK(support(Measure(s3)).empty());
  CHECK(tv_norm(Measure(s3)) == 0.0);
  CHECK_THROWS_AS(Measure::char_idem(c2, Character::trivial(Subgroup::whole(s3))), PreconditionError);
}

TEST_CASE("product of two transposition subgroups in S3") {
  const GroupPtr s3 = symmetric(3);
  const Measure p = convolve(Measure::haar(gen(s3, {"(12)"})), Measure::haar(gen(s3, {"(13)"})));
  const auto quarter = CycloScalar::rational(mpq_class(1, 4));
  for (const char* l : {"e", "(12)", "(13)", "(132)"}) CHECK(p[*s3->find(l)] == quarter);
  CHECK(support(p).size() == 4);
  CHECK(tv_norm(p) <= 1.0 + 1e-12);
}

TEST_CASE("Dirac masses multiply like the group") {
  const GroupPtr d4 = dihedral(4);
  for (Elem a = 0; a < d4->order(); ++a) {
    for (Elem b = 0; b < d4->order(); ++b) {
      CHECK(convolve(Measure::dirac(d4, a), Measure::dirac(d4, b)) == Measure::dirac(d4, d4->mul(a, b)));
    }
    CHECK(adjoint(Measure::dirac(d4, a)) == Measure::dirac(d4, d4->inv(a)));
  }
}

TEST_CASE("algebra laws (property)") {
  std::mt19937 rng(5);
  for (const GroupPtr& g : {symmetric(3), quaternion(), cyclic(6)}) {
    const Measure id = Measure::dirac(g, g->identity());
    for (int trial = 0; trial < 10; ++trial) {
      const Measure a = random_measure(g, rng), b = random_measure(g, rng), c = random_measure(g, rng);
      CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
      CHECK(convolve(id, a) == a);
      CHECK(convolve(a, id) == a);
      CHECK(adjoint(convolve(a, b)) == convolve(adjoint(b), adjoint(a)));
      CHECK(adjoint(adjoint(a)) == a);
      CHECK(convolve(a, b + c) == convolve(a, b) + convolve(a, c));
      const FloatMeasure fa = a.to_complex(), fb = b.to_complex();
      CHECK(max_abs_diff(convolve(a, b).to_complex(), oracle_convolve(*g, fa, fb)) < 1e-12);
      CHECK(max_abs_diff(convolve(*g, fa, fb), oracle_convolve(*g, fa, fb)) < 1e-12);
      CHECK(max_abs_diff(adjoint(*g, fa), adjoint(a).to_complex()) < 1e-12);
      const auto sa = support(a), sb = support(b);
      for (Elem x : support(convolve(a, b))) {
        bool found = false;
        for (Elem p : sa)
          for (Elem q : sb) found = found || g->mul(p, q) == x;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("skew-adjoint witness") {
  const GroupPtr c4 = cyclic(4);
  const Measure l = Measure::dirac(c4, 1) - Measure::dirac(c4, 3);
  CHECK(adjoint(l) == CycloScalar::rational(-1) * l);
}

TEST_CASE("support of Haar products equals the product set") {
  const GroupPtr s4 = symmetric(4);
  const auto subs = all_subgroups(s4);
  for (const Subgroup& a : subs) {
    for (const Subgroup& b : subs) {
      CHECK(support(convolve(Measure::haar(a), Measure::haar(b))) == product_set(a, b));
    }
  }
}

TEST_CASE("character idempotents: self-adjoint, contractive, orthogonal, round trip") {
  for (const GroupPtr& g : {symmetric(3), symmetric(4), dihedral(4), quaternion(), cyclic(12)}) {
    for (const Subgroup& k : all_subgroups(g)) {
      const auto chars = character_group(k);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        const Measure e = Measure::char_idem(k, chars[i]);
        CHECK(adjoint(e) == e);
        CHECK(convolve(e, e) == e);
        CHECK(std::abs(tv_norm(e) - 1.0) < 1e-9);
        const IdempotentClass c = classify_idempotent(e);
        REQUIRE(c.kind == IdempotentClass::Kind::Contractive);
        CHECK(*c.subgroup == k);
        CHECK(*c.character == chars[i]);
        for (std::size_t j = 0; j < chars.size(); ++j) {
          CHECK(convolve(e, Measure::char_idem(k, chars[j])).is_zero() == (i != j));
        }
      }
    }
  }
}

TEST_CASE("classification of other measures") {
  const GroupPtr c4 = cyclic(4);
  const auto half = CycloScalar::rational(mpq_class(1, 2));
  Measure plus(c4), minus(c4);
  plus.set(0, half);
  plus.set(2, half);
  minus.set(0, half);
  minus.set(2, -half);
  IdempotentClass c = classify_idempotent(plus);
  CHECK(c.kind == IdempotentClass::Kind::Contractive);
  CHECK(c.subgroup->order() == 2);
  CHECK(c.character->is_trivial());
  c = classify_idempotent(minus);
  CHECK(c.kind == IdempotentClass::Kind::Contractive);
  CHECK_FALSE(c.character->is_trivial());
  CHECK(classify_idempotent(Measure(c4)).kind == IdempotentClass::Kind::Zero);
  CHECK(classify_idempotent(Measure::dirac(c4, 1)).kind == IdempotentClass::Kind::NotIdempotent);
  // delta_e - m_C3 is idempotent but has norm 4/3
  const GroupPtr c3 = cyclic(3);
  const Measure other = Measure::dirac(c3, 0) - Measure::haar(Subgroup::whole(c3));
  CHECK(classify_idempotent(other).kind == IdempotentClass::Kind::IdempotentOther);
  CHECK(tv_norm(other) > 1.0);
}

TEST_CASE("mismatched groups are rejected") {
  CHECK_THROWS_AS(convolve(Measure::dirac(cyclic(3), 0), Measure::dirac(cyclic(4), 0)), PreconditionError);
}
