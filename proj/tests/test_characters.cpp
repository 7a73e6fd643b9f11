#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idem/characters.hpp"
#include "idem/error.hpp"

using namespace idem;

TEST_CASE("dual group sizes match the abelianization") {
  struct Case {
    GroupPtr g;
    std::size_t dual;
  };
  for (const Case& c : {Case{symmetric(3), 2}, Case{symmetric(4), 2}, Case{quaternion(), 4},
                        Case{dihedral(4), 4}, Case{cyclic(12), 12},
                        Case{direct_product(cyclic(2), cyclic(3)), 6}, Case{symmetric(5), 2}}) {
    const Subgroup whole = Subgroup::whole(c.g);
    const auto chars = character_group(whole);
    CHECK(chars.size() == c.dual);
    CHECK(chars.size() * commutator_subgroup(whole).order() == whole.order());
    CHECK(chars.front().is_trivial());
  }
}

TEST_CASE("characters are distinct homomorphisms, orthogonal (exact)") {
  for (const GroupPtr& g : {symmetric(4), dihedral(4), quaternion(), cyclic(12)}) {
    for (const Subgroup& k : all_subgroups(g)) {
      const auto chars = character_group(k);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        for (Elem a : k.elements()) {
          for (Elem b : k.elements()) {
            CHECK(chars[i].value(g->mul(a, b)) == chars[i].value(a) * chars[i].value(b));
          }
        }
        for (std::size_t j = 0; j < chars.size(); ++j) {
          CycloScalar s = CycloScalar::zero(1);
          for (Elem x : k.elements()) s += chars[i].value(x) * chars[j].value(x).conj();
          s *= mpq_class(1, static_cast<long>(k.order()));
          CHECK(s == CycloScalar::rational(i == j ? 1 : 0));
          if (i != j) CHECK_FALSE(chars[i] == chars[j]);
        }
      }
    }
  }
}

TEST_CASE("sign character on S3") {
  const GroupPtr s3 = symmetric(3);
  const Character sgn = character_group(Subgroup::whole(s3)).at(1);
  CHECK(sgn.rotation(*s3->find("(12)")) == mpq_class(1, 2));
  CHECK(sgn.rotation(*s3->find("(123)")) == 0);
  CHECK(sgn.value(*s3->find("(13)")) == CycloScalar::rational(-1));
  CHECK(kernel(sgn).order() == 3);
  const Subgroup c2 = closure(s3, std::vector<Elem>{*s3->find("(12)")});
  CHECK_FALSE(restrict(sgn, c2).is_trivial());
  CHECK(restrict(sgn, Subgroup::trivial(s3)).is_trivial());
}

TEST_CASE("characters from generator rotations") {
  const GroupPtr s3 = symmetric(3);
  const Subgroup whole = Subgroup::whole(s3);
  const std::vector<Elem> gens{*s3->find("(12)"), *s3->find("(123)")};
  const std::vector<unsigned> sgn{3, 0};  // over exponent 6
  const auto rho = Character::from_generators(whole, gens, sgn);
  REQUIRE(rho.has_value());
  CHECK(*rho == character_group(whole).at(1));
  const std::vector<unsigned> bad{3, 2};
  CHECK_FALSE(Character::from_generators(whole, gens, bad).has_value());
  CHECK_THROWS_AS(Character::from_numerators(whole, {0, 1, 0, 0, 0, 0}), PreconditionError);
}

TEST_CASE("extension of characters") {
  const GroupPtr s3 = symmetric(3);
  const Subgroup a = closure(s3, std::vector<Elem>{*s3->find("(12)")});
  const Subgroup b = closure(s3, std::vector<Elem>{*s3->find("(13)")});
  const Subgroup whole = Subgroup::whole(s3);
  const std::vector<Character> both_sign{character_group(a).at(1), character_group(b).at(1)};
  const auto ext = find_extension(whole, both_sign);
  REQUIRE(ext.has_value());
  CHECK(*ext == character_group(whole).at(1));
  const std::vector<Character> mixed{character_group(a).at(1), Character::trivial(b)};
  CHECK_FALSE(find_extension(whole, mixed).has_value());
  const std::vector<Character> trivial{Character::trivial(a), Character::trivial(b)};
  CHECK(find_extension(whole, trivial)->is_trivial());
}

TEST_CASE("abelian decomposition") {
  for (const GroupPtr& g : {cyclic(12), direct_product(cyclic(2), cyclic(2)),
                            direct_product(cyclic(4), cyclic(6)), quaternion()}) {
    if (!g->is_abelian()) {
      CHECK_THROWS_AS(abelian_decomposition(g), PreconditionError);
      continue;
    }
    const auto dec = abelian_decomposition(g);
    std::size_t prod = 1;
    std::vector<Elem> gens;
    for (const auto& [x, order] : dec) {
      CHECK(g->element_order(x) == order);
      prod *= order;
      gens.push_back(x);
    }
    CHECK(prod == g->order());
    CHECK(closure(g, gens).order() == g->order());
  }
}
