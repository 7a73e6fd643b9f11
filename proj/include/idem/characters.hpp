#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "idem/cyclotomic.hpp"
#include "idem/group.hpp"

namespace idem {

/// A multiplicative character k -> exp(2 pi i rot(k)) on a subgroup.
///
/// Rotation numbers are stored as numerators over the exponent N of the
/// parent group; every element order divides N, so this denominator is
/// always sufficient and the representation is canonical.
class Character {
 public:
  static Character trivial(const Subgroup& domain);
  /// numerators[i] is the numerator (mod N) at domain.elements()[i].
  /// Validates multiplicativity; throws PreconditionError.
  static Character from_numerators(const Subgroup& domain, std::vector<unsigned> numerators);
  /// Extends rotations given on a generating set (numerators over N).
  /// Returns nullopt when the assignment is not a homomorphism.
  static std::optional<Character> from_generators(const Subgroup& domain, std::span<const Elem> generators,
                                                  std::span<const unsigned> numerators);

  const Subgroup& domain() const { return domain_; }
  unsigned denominator() const { return domain_.group().exponent(); }
  unsigned numerator(Elem g) const { return numerators_[domain_.position(g)]; }
  const std::vector<unsigned>& numerators() const { return numerators_; }
  /// Reduced rotation number in [0, 1).
  mpq_class rotation(Elem g) const;
  CycloScalar value(Elem g) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.domain_ == b.domain_ && a.numerators_ == b.numerators_;
  }

 private:
  Character(Subgroup domain, std::vector<unsigned> numerators)
      : domain_(std::move(domain)), numerators_(std::move(numerators)) {}

  Subgroup domain_;
  std::vector<unsigned> numerators_;
};

/// All multiplicative characters of K (the dual of K/[K,K]); the trivial
/// character comes first.
std::vector<Character> character_group(const Subgroup& k);

Character restrict(const Character& rho, const Subgroup& l);
Subgroup kernel(const Character& rho);

/// A character on L restricting to every constraint, if one exists.
std::optional<Character> find_extension(const Subgroup& l, std::span<const Character> constraints);

/// Cyclic decomposition of an abelian group: generators with their orders,
/// such that the group is the internal direct product of the cyclic factors.
std::vector<std::pair<Elem, unsigned>> abelian_decomposition(const GroupPtr& abelian);

}  // namespace idem
