#include "idem/characters.hpp"

#include <algorithm>

#include "idem/error.hpp"

namespace idem {

namespace {

// Odometer step over a mixed-radix counter; false once it wraps to zero.
bool advance(std::vector<unsigned>& digits, const std::vector<unsigned>& radices) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radices[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

Character Character::trivial(const Subgroup& domain) {
  return Character(domain, std::vector<unsigned>(domain.order(), 0));
}

Character Character::from_numerators(const Subgroup& domain, std::vector<unsigned> numerators) {
  const GroupTable& g = domain.group();
  const unsigned n = g.exponent();
  if (numerators.size() != domain.order()) throw PreconditionError("character: one numerator per element required");
  for (unsigned& v : numerators) {
    if (v >= n) throw PreconditionError("character: numerator out of range");
  }
  if (numerators[domain.position(g.identity())] != 0) throw PreconditionError("character: nonzero at identity");
  const auto& el = domain.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      const Elem p = g.mul(el[i], el[j]);
      if (numerators[domain.position(p)] != (numerators[i] + numerators[j]) % n) {
        throw PreconditionError("character: not multiplicative at " + g.label(el[i]) + ", " + g.label(el[j]));
      }
    }
  }
  return Character(domain, std::move(numerators));
}

std::optional<Character> Character::from_generators(const Subgroup& domain, std::span<const Elem> generators,
                                                    std::span<const unsigned> numerators) {
  const unsigned n = domain.group().exponent();
  for (unsigned v : numerators) {
    if (v >= n) throw PreconditionError("character: numerator out of range");
  }
  for (Elem s : generators) {
    if (!domain.contains(s)) throw PreconditionError("character: generator outside the domain");
  }
  const GroupPtr circle = cyclic(n);
  std::vector<Elem> images(numerators.begin(), numerators.end());
  const auto map = extend_homomorphism(domain, generators, images, *circle);
  if (!map) return std::nullopt;
  std::vector<unsigned> nums;
  nums.reserve(domain.order());
  for (Elem k : domain.elements()) nums.push_back((*map)[k]);
  return Character(domain, std::move(nums));
}

mpq_class Character::rotation(Elem g) const {
  mpq_class r(numerator(g), denominator());
  r.canonicalize();
  return r;
}

CycloScalar Character::value(Elem g) const { return CycloScalar::root_of_unity(numerator(g), denominator()); }

bool Character::is_trivial() const {
  return std::all_of(numerators_.begin(), numerators_.end(), [](unsigned v) { return v == 0; });
}

std::vector<std::pair<Elem, unsigned>> abelian_decomposition(const GroupPtr& abelian) {
  const GroupTable& a = *abelian;
  if (!a.is_abelian()) throw PreconditionError("abelian_decomposition: group is not abelian");
  std::vector<std::pair<Elem, unsigned>> factors;
  std::vector<Elem> chosen;
  Subgroup span = Subgroup::trivial(abelian);
  const Subgroup whole = Subgroup::whole(abelian);
  while (span.order() < a.order()) {
    // peel the cyclic factor of maximal order in A / span, lifted without
    // increasing its order
    const Quotient q = quotient_group(whole, span);
    Elem best = q.group->identity();
    for (Elem c = 0; c < q.group->order(); ++c) {
      if (q.group->element_order(c) > q.group->element_order(best)) best = c;
    }
    const unsigned ord = q.group->element_order(best);
    std::optional<Elem> lift;
    for (Elem x = 0; x < a.order() && !lift; ++x) {
      if (q.projection[x] == best && a.element_order(x) == ord) lift = x;
    }
    if (!lift) throw InternalCheckError("abelian_decomposition: no order-preserving lift");
    factors.emplace_back(*lift, ord);
    chosen.push_back(*lift);
    span = make_subgroup(abelian, closure(abelian, chosen).elements());
  }
  std::size_t product = 1;
  for (const auto& f : factors) product *= f.second;
  if (product != a.order()) throw InternalCheckError("abelian_decomposition: factors are not independent");
  return factors;
}

std::vector<Character> character_group(const Subgroup& k) {
  const GroupTable& g = k.group();
  const unsigned n = g.exponent();
  const Subgroup derived = commutator_subgroup(k);
  const Quotient ab = quotient_group(k, derived);
  const GroupTable& a = *ab.group;
  const auto factors = abelian_decomposition(ab.group);

  std::vector<unsigned> radices;
  for (const auto& f : factors) radices.push_back(f.second);

  // coordinates of every element of the abelianization in the chosen basis
  std::vector<std::vector<unsigned>> coords(a.order());
  std::size_t filled = 0;
  std::vector<unsigned> c(factors.size(), 0);
  do {
    Elem x = a.identity();
    for (std::size_t i = 0; i < factors.size(); ++i) x = a.mul(x, a.power(factors[i].first, c[i]));
    if (filled > 0 && x == a.identity()) throw InternalCheckError("character_group: basis coordinates collide");
    coords[x] = c;
    ++filled;
  } while (advance(c, radices));
  if (filled != a.order()) throw InternalCheckError("character_group: basis does not cover the abelianization");

  std::vector<Character> out;
  std::vector<unsigned> j(factors.size(), 0);
  do {
    std::vector<unsigned> nums;
    nums.reserve(k.order());
    for (Elem x : k.elements()) {
      const auto& cx = coords[ab.projection[x]];
      unsigned long long v = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        v += static_cast<unsigned long long>(cx[i]) * j[i] * (n / radices[i]);
      }
      nums.push_back(static_cast<unsigned>(v % n));
    }
    out.push_back(Character::from_numerators(k, std::move(nums)));
  } while (advance(j, radices));
  return out;
}

Character restrict(const Character& rho, const Subgroup& l) {
  if (!l.is_subset_of(rho.domain())) throw PreconditionError("restrict: subgroup is not inside the character's domain");
  std::vector<unsigned> nums;
  nums.reserve(l.order());
  for (Elem x : l.elements()) nums.push_back(rho.numerator(x));
  return Character::from_numerators(l, std::move(nums));
}

Subgroup kernel(const Character& rho) {
  std::vector<Elem> out;
  for (Elem x : rho.domain().elements()) {
    if (rho.numerator(x) == 0) out.push_back(x);
  }
  return make_subgroup(rho.domain().parent(), std::move(out));
}

std::optional<Character> find_extension(const Subgroup& l, std::span<const Character> constraints) {
  std::vector<Elem> generated;
  for (const auto& c : constraints) {
    if (!c.domain().is_subset_of(l)) throw PreconditionError("find_extension: constraint domain not inside L");
    generated.insert(generated.end(), c.domain().elements().begin(), c.domain().elements().end());
  }
  std::optional<Character> found;
  std::size_t matches = 0;
  for (const auto& rho : character_group(l)) {
    const bool ok = std::all_of(constraints.begin(), constraints.end(),
                                [&](const Character& c) { return restrict(rho, c.domain()) == c; });
    if (ok) {
      ++matches;
      if (!found) found = rho;
    }
  }
  if (matches > 1 && closure(l.parent(), generated).order() == l.order()) {
    throw InternalCheckError("find_extension: extension to a generated subgroup is not unique");
  }
  return found;
}

}  // namespace idem
