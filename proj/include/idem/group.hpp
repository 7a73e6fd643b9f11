#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idem {

/// Group elements are indices into a GroupTable.
using Elem = std::uint32_t;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// A finite group given by its full multiplication table.
///
/// Composition convention: mul(g, h) is "apply h, then g". For permutation
/// groups this is (g h)(x) = g(h(x)), so (1 2)(1 3) = (1 3 2).
class GroupTable {
 public:
  /// Validates the table (closure, associativity, identity, inverses) and
  /// derives identity, inverses and exponent. Throws PreconditionError.
  static GroupPtr from_table(std::vector<std::vector<Elem>> table, std::vector<std::string> labels,
                             std::string name = "");

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return identity_; }
  /// lcm of the element orders.
  unsigned exponent() const { return exponent_; }
  unsigned element_order(Elem a) const { return elem_order_[a]; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  const std::string& name() const { return name_; }
  bool is_abelian() const;

  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem power(Elem a, long long k) const;

 private:
  GroupTable() = default;

  std::size_t n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<unsigned> elem_order_;
  std::vector<std::string> labels_;
  std::string name_;
  Elem identity_ = 0;
  unsigned exponent_ = 1;
};

/// A subgroup of a GroupTable: sorted element indices plus the generating
/// witness it was built from.
class Subgroup {
 public:
  /// Trusted constructor: `elements` must already form a subgroup.
  /// Use closure() for arbitrary seeds.
  Subgroup(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> generators);

  static Subgroup whole(const GroupPtr& parent);
  static Subgroup trivial(const GroupPtr& parent);

  const GroupPtr& parent() const { return parent_; }
  const GroupTable& group() const { return *parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem g) const { return member_[g] != 0; }
  /// Position of g in elements(); g must be a member.
  std::size_t position(Elem g) const { return static_cast<std::size_t>(member_[g] - 1); }

  bool is_subset_of(const Subgroup& other) const;
  bool is_normal_in(const Subgroup& ambient) const;
  bool is_abelian() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::vector<std::uint32_t> member_;  // 0 if absent, else position + 1
};

/// Left cosets hL of L in H.
struct CosetSpace {
  std::vector<std::vector<Elem>> cosets;
  std::vector<Elem> representatives;  // smallest index in each coset
};

/// Result of testing whether K1 K2 is a subgroup, with the three equivalent
/// conditions evaluated separately.
struct ProductVerdict {
  bool is_subgroup = false;
  bool inversion_closed = false;
  bool commutes = false;  // K1 K2 == K2 K1
  std::optional<Elem> witness;
  std::string reason;
};

struct Quotient {
  GroupPtr group;
  /// projection[g] for g in the numerator subgroup; other entries unset.
  std::vector<Elem> projection;
  /// representatives[c] = smallest parent element mapping to c.
  std::vector<Elem> representatives;
};

// --- subgroup machinery -----------------------------------------------------

/// Wraps an element set known to be a subgroup, with a greedy generating set.
/// Throws PreconditionError if the set is not closed or lacks the identity.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elem> elements);
Subgroup closure(const GroupPtr& parent, std::span<const Elem> seed);
std::vector<Elem> product_set(const Subgroup& k1, const Subgroup& k2);
ProductVerdict is_subgroup_product(const Subgroup& k1, const Subgroup& k2);
bool is_matched_pair(const Subgroup& k1, const Subgroup& k2);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup normalizer(const Subgroup& k);
Subgroup centralizer(const Subgroup& k);
/// Normalizer / centralizer of k inside an ambient subgroup.
Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& k);
Subgroup centralizer_in(const Subgroup& ambient, const Subgroup& k);
Subgroup commutator_subgroup(const Subgroup& k);
/// Smallest normal subgroup of `ambient` containing the seed.
Subgroup normal_closure(const Subgroup& ambient, std::span<const Elem> seed);
CosetSpace left_cosets(const Subgroup& h, const Subgroup& l);
Quotient quotient_group(const Subgroup& h, const Subgroup& n);

/// Every subgroup of `ambient`, ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const Subgroup& ambient);
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// --- constructions -----------------------------------------------------------

/// Permutations act on points 1..degree; images[i] is the image of point i+1.
using Permutation = std::vector<unsigned>;

GroupPtr cyclic(unsigned n);
GroupPtr symmetric(unsigned n);
GroupPtr dihedral(unsigned n);  // order 2n
GroupPtr quaternion();          // Q_8
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// action[alpha][k] = alpha(k): each row must be an automorphism of `normal`
/// and alpha -> action[alpha] a homomorphism. Group law (k,a)(k',b) = (k a(k'), ab);
/// element (k, a) has index a * |normal| + k.
GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& acting,
                            const std::vector<std::vector<Elem>>& action);
GroupPtr from_permutations(unsigned degree, const std::vector<Permutation>& generators,
                           std::string name = "");

std::string cycle_notation(const Permutation& p);
/// Parses "e", "()", "(1 2)(3 4)" or compact "(12)" (single-digit points).
Permutation parse_cycles(std::string_view text, unsigned degree);

/// Extends a map on generators of `source` to a homomorphism source -> target.
/// Returns nullopt if the assignment does not extend consistently.
std::optional<std::vector<Elem>> extend_homomorphism(const Subgroup& source,
                                                     std::span<const Elem> generators,
                                                     std::span<const Elem> images,
                                                     const GroupTable& target);

}  // namespace idem
