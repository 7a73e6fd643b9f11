#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "idem/error.hpp"
#include "idem/group.hpp"

using namespace idem;

namespace {

Elem at(const GroupPtr& g, const char* label) {
  const auto x = g->find(label);
  REQUIRE(x.has_value());
  return *x;
}

// Brute-force subgroup check.
bool closed(const GroupTable& g, const std::vector<Elem>& s) {
  std::set<Elem> set(s.begin(), s.end());
  if (!set.count(g.identity())) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!set.count(g.mul(a, b))) return false;
  return true;
}

}  // namespace

TEST_CASE("standard constructions") {
  CHECK(cyclic(12)->order() == 12);
  CHECK(cyclic(12)->exponent() == 12);
  CHECK(cyclic(1)->order() == 1);
  CHECK(symmetric(4)->order() == 24);
  CHECK(symmetric(4)->exponent() == 12);
  CHECK_FALSE(symmetric(3)->is_abelian());
  CHECK(dihedral(4)->order() == 8);
  CHECK(dihedral(4)->exponent() == 4);
  CHECK(quaternion()->order() == 8);
  CHECK(quaternion()->exponent() == 4);
  CHECK(direct_product(cyclic(2), cyclic(3))->exponent() == 6);
  CHECK(direct_product(cyclic(2), cyclic(3))->is_abelian());
}

TEST_CASE("composition applies the right factor first") {
  const GroupPtr s3 = symmetric(3);
  CHECK(s3->label(s3->mul(at(s3, "(12)"), at(s3, "(13)"))) == "(132)");
  const std::vector<Elem> prod = product_set(closure(s3, std::vector<Elem>{at(s3, "(12)")}),
                                             closure(s3, std::vector<Elem>{at(s3, "(13)")}));
  std::set<std::string> labels;
  for (Elem x : prod) labels.insert(s3->label(x));
  CHECK(labels == std::set<std::string>{"e", "(12)", "(13)", "(132)"});
}

TEST_CASE("multiplication agrees with permutation composition (oracle)") {
  const GroupPtr s4 = symmetric(4);
  for (Elem a = 0; a < s4->order(); ++a) {
    for (Elem b = 0; b < s4->order(); ++b) {
      const Permutation p = parse_cycles(s4->label(a), 4), q = parse_cycles(s4->label(b), 4);
      Permutation pq(4);
      for (unsigned i = 0; i < 4; ++i) pq[i] = p[q[i] - 1];
      CHECK(parse_cycles(s4->label(s4->mul(a, b)), 4) == pq);
    }
  }
}

TEST_CASE("cycle parsing") {
  CHECK(parse_cycles("e", 3) == Permutation{1, 2, 3});
  CHECK(parse_cycles("()", 3) == Permutation{1, 2, 3});
  CHECK(parse_cycles("(1 2)", 3) == Permutation{2, 1, 3});
  CHECK(parse_cycles("(1,2,3)", 3) == Permutation{2, 3, 1});
  CHECK(parse_cycles("(12)(23)", 3) == parse_cycles("(123)", 3));
  CHECK(cycle_notation(Permutation{2, 3, 1}) == "(123)");
  CHECK_THROWS_AS(parse_cycles("(14)", 3), PreconditionError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), PreconditionError);
  CHECK_THROWS_AS(parse_cycles("(12", 3), PreconditionError);
}

TEST_CASE("subgroup lattice sizes") {
  CHECK(all_subgroups(symmetric(3)).size() == 6);
  CHECK(all_subgroups(symmetric(4)).size() == 30);
  CHECK(all_subgroups(dihedral(4)).size() == 10);
  CHECK(all_subgroups(quaternion()).size() == 6);
  CHECK(all_subgroups(cyclic(12)).size() == 6);
  CHECK(all_subgroups(direct_product(cyclic(2), cyclic(2))).size() == 5);
  for (const GroupPtr& g : {symmetric(4), dihedral(4), quaternion()}) {
    for (const Subgroup& k : all_subgroups(g)) {
      CHECK(closed(*g, k.elements()));
      CHECK(g->order() % k.order() == 0);
      CHECK(closure(g, k.generators()) == k);
    }
  }
}

TEST_CASE("normalizer, centralizer and commutator against definitions") {
  for (const GroupPtr& g : {symmetric(4), dihedral(4), quaternion()}) {
    for (const Subgroup& k : all_subgroups(g)) {
      std::vector<Elem> norm, cent;
      for (Elem x = 0; x < g->order(); ++x) {
        bool n = true, c = true;
        for (Elem y : k.elements()) {
          n = n && k.contains(g->conjugate(x, y));
          c = c && g->mul(x, y) == g->mul(y, x);
        }
        if (n) norm.push_back(x);
        if (c) cent.push_back(x);
      }
      CHECK(normalizer(k).elements() == norm);
      CHECK(centralizer(k).elements() == cent);
      CHECK(k.is_normal_in(Subgroup::whole(g)) == (norm.size() == g->order()));
    }
  }
  CHECK(commutator_subgroup(Subgroup::whole(symmetric(4))).order() == 12);
  CHECK(commutator_subgroup(Subgroup::whole(quaternion())).order() == 2);
  CHECK(commutator_subgroup(Subgroup::whole(cyclic(6))).order() == 1);
}

TEST_CASE("product sets and matched pairs") {
  const GroupPtr s4 = symmetric(4);
  const auto subs = all_subgroups(s4);
  for (const Subgroup& a : subs) {
    for (const Subgroup& b : subs) {
      const auto ab = product_set(a, b), ba = product_set(b, a);
      const ProductVerdict v = is_subgroup_product(a, b);
      CHECK(v.is_subgroup == closed(*s4, ab));
      CHECK(v.commutes == (ab == ba));
      CHECK(ab.size() * intersection(a, b).order() == a.order() * b.order());
    }
  }
  const GroupPtr s5 = symmetric(5);
  const Subgroup k1 = closure(s5, std::vector<Elem>{at(s5, "(1234)"), at(s5, "(12)")});
  const Subgroup k2 = closure(s5, std::vector<Elem>{at(s5, "(12345)")});
  CHECK(is_matched_pair(k1, k2));
  CHECK_FALSE(is_matched_pair(k1, k1));
}

TEST_CASE("quotients and cosets") {
  const GroupPtr s4 = symmetric(4);
  const Subgroup v4 = closure(s4, std::vector<Elem>{at(s4, "(12)(34)"), at(s4, "(13)(24)")});
  CHECK(v4.order() == 4);
  const Quotient q = quotient_group(Subgroup::whole(s4), v4);
  CHECK(q.group->order() == 6);
  CHECK_FALSE(q.group->is_abelian());
  for (Elem a = 0; a < s4->order(); ++a) {
    for (Elem b = 0; b < s4->order(); ++b) {
      CHECK(q.projection[s4->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
    }
  }
  const Subgroup c2 = closure(s4, std::vector<Elem>{at(s4, "(12)")});
  CHECK_THROWS_AS(quotient_group(Subgroup::whole(s4), c2), PreconditionError);
  const CosetSpace cs = left_cosets(Subgroup::whole(s4), c2);
  CHECK(cs.cosets.size() == 12);
  CHECK(normal_closure(Subgroup::whole(s4), std::vector<Elem>{at(s4, "(12)")}).order() == 24);
  CHECK(normal_closure(Subgroup::whole(s4), std::vector<Elem>{at(s4, "(12)(34)")}).order() == 4);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(GroupTable::from_table({{0, 1}, {1, 1}}, {}, "bad"), PreconditionError);
  CHECK_THROWS_AS(GroupTable::from_table({{0, 1}}, {}, "ragged"), PreconditionError);
  CHECK_THROWS_AS(GroupTable::from_table({{1, 0}, {0, 0}}, {}, "no identity"), PreconditionError);
  const GroupPtr c2 = GroupTable::from_table({{0, 1}, {1, 0}}, {"e", "s"}, "c2");
  CHECK(c2->order() == 2);
  CHECK(c2->inv(1) == 1);
  // Latin square that is not associative: x*y = 2x - y mod 3
  // (0 is a right identity but not a left identity).
  std::vector<std::vector<Elem>> t(3, std::vector<Elem>(3));
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) t[a][b] = (2 * a + 3 - b) % 3;
  CHECK_THROWS_AS(GroupTable::from_table(t, {}, "quasigroup"), PreconditionError);
}

TEST_CASE("semidirect products") {
  const GroupPtr c3 = cyclic(3), c2 = cyclic(2);
  const std::vector<std::vector<Elem>> inversion{{0, 1, 2}, {0, 2, 1}};
  const GroupPtr g = semidirect_product(c3, c2, inversion);
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  const std::vector<std::vector<Elem>> bogus{{0, 1, 2}, {0, 1, 1}};
  CHECK_THROWS_AS(semidirect_product(c3, c2, bogus), PreconditionError);
}

TEST_CASE("homomorphism extension") {
  const GroupPtr c6 = cyclic(6), c3 = cyclic(3);
  const Subgroup whole = Subgroup::whole(c6);
  const std::vector<Elem> gens{1}, img{1};
  const auto hom = extend_homomorphism(whole, gens, img, *c3);
  REQUIRE(hom.has_value());
  CHECK((*hom)[2] == 2);
  CHECK((*hom)[3] == 0);
  const GroupPtr c4 = cyclic(4);
  CHECK_FALSE(extend_homomorphism(Subgroup::whole(c3), gens, img, *c4).has_value());
}
