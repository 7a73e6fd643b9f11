#include "idem/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "idem/error.hpp"

namespace idem {

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

// Full associativity check up to this order, random triples beyond.
constexpr std::size_t kFullAssociativityBound = 200;
constexpr std::size_t kAssociativitySamples = 200000;

std::vector<Elem> generators_or_elements(const Subgroup& k) {
  return k.generators().empty() ? k.elements() : k.generators();
}

// Builds a subgroup from a known element set with a greedy generating set.
Subgroup from_elements(const GroupPtr& parent, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Elem> gens;
  std::vector<char> covered(parent->order(), 0);
  covered[parent->identity()] = 1;
  for (Elem g : elements) {
    if (covered[g]) continue;
    gens.push_back(g);
    const Subgroup c = closure(parent, gens);
    for (Elem x : c.elements()) covered[x] = 1;
  }
  return Subgroup(parent, std::move(elements), std::move(gens));
}

}  // namespace

// --- GroupTable ---------------------------------------------------------------

GroupPtr GroupTable::from_table(std::vector<std::vector<Elem>> table, std::vector<std::string> labels,
                                std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw PreconditionError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw PreconditionError("group table is not square");
    for (Elem x : row) {
      if (x >= n) throw PreconditionError("group table entry out of range");
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) throw PreconditionError("label count does not match group order");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw PreconditionError("group labels are not unique");
  }

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = n;
  g->mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g->mul_[a * n + b] = table[a][b];
  }
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);

  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = g->mul(e, x) == x && g->mul(x, e) == x;
    if (ok) id = e;
  }
  if (!id) throw PreconditionError("group table has no two-sided identity");
  g->identity_ = *id;

  g->inv_.assign(n, kUnset);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g->mul(a, b) == *id && g->mul(b, a) == *id) {
        g->inv_[a] = b;
        break;
      }
    }
    if (g->inv_[a] == kUnset) throw PreconditionError("element without two-sided inverse: " + g->labels_[a]);
  }

  if (n <= kFullAssociativityBound) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = g->mul(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (g->mul(ab, c) != g->mul(a, g->mul(b, c))) throw PreconditionError("group table is not associative");
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
        throw PreconditionError("group table is not associative");
      }
    }
  }

  g->elem_order_.assign(n, 0);
  unsigned exponent = 1;
  for (Elem a = 0; a < n; ++a) {
    unsigned k = 1;
    Elem x = a;
    while (x != *id) {
      x = g->mul(x, a);
      ++k;
    }
    g->elem_order_[a] = k;
    exponent = std::lcm(exponent, k);
  }
  g->exponent_ = exponent;
  return g;
}

std::optional<Elem> GroupTable::find(std::string_view label) const {
  for (Elem i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool GroupTable::is_abelian() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Elem GroupTable::power(Elem a, long long k) const {
  const long long ord = elem_order_[a];
  k = ((k % ord) + ord) % ord;
  Elem x = identity_;
  for (long long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

// --- Subgroup -----------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements, std::vector<Elem> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  member_.assign(parent_->order(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) member_[elements_[i]] = static_cast<std::uint32_t>(i + 1);
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<Elem> all(parent->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return from_elements(parent, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& parent) { return Subgroup(parent, {parent->identity()}, {}); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem g) { return other.contains(g); });
}

bool Subgroup::is_normal_in(const Subgroup& ambient) const {
  if (!is_subset_of(ambient)) return false;
  const auto gens = generators_or_elements(*this);
  for (Elem g : generators_or_elements(ambient)) {
    for (Elem k : gens) {
      if (!contains(parent_->conjugate(g, k))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const {
  const auto gens = generators_or_elements(*this);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (parent_->mul(gens[i], gens[j]) != parent_->mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

// --- subgroup machinery ---------------------------------------------------------

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elem> elements) {
  const GroupTable& g = *parent;
  std::vector<char> in(g.order(), 0);
  for (Elem x : elements) {
    if (x >= g.order()) throw PreconditionError("make_subgroup: element index out of range");
    in[x] = 1;
  }
  if (!in[g.identity()]) throw PreconditionError("make_subgroup: identity missing");
  for (Elem a : elements) {
    if (!in[g.inv(a)]) throw PreconditionError("make_subgroup: not closed under inversion");
    for (Elem b : elements) {
      if (!in[g.mul(a, b)]) throw PreconditionError("make_subgroup: not closed under multiplication");
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return from_elements(parent, std::move(elements));
}

Subgroup closure(const GroupPtr& parent, std::span<const Elem> seed) {
  const GroupTable& g = *parent;
  for (Elem s : seed) {
    if (s >= g.order()) throw PreconditionError("closure: element index out of range");
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> elems{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Elem x = elems[i];
    for (Elem s : seed) {
      const Elem y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(parent, std::move(elems), std::vector<Elem>(seed.begin(), seed.end()));
}

std::vector<Elem> product_set(const Subgroup& k1, const Subgroup& k2) {
  if (k1.parent() != k2.parent()) throw PreconditionError("product_set: subgroups of different groups");
  const GroupTable& g = k1.group();
  std::vector<char> mark(g.order(), 0);
  for (Elem a : k1.elements()) {
    for (Elem b : k2.elements()) mark[g.mul(a, b)] = 1;
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (mark[x]) out.push_back(x);
  }
  return out;
}

ProductVerdict is_subgroup_product(const Subgroup& k1, const Subgroup& k2) {
  if (k1.parent() != k2.parent()) throw PreconditionError("is_subgroup_product: subgroups of different groups");
  const GroupTable& g = k1.group();
  const auto p12 = product_set(k1, k2);
  const auto p21 = product_set(k2, k1);
  std::vector<char> in(g.order(), 0);
  for (Elem x : p12) in[x] = 1;

  ProductVerdict v;
  v.commutes = p12 == p21;

  std::optional<Elem> inverse_escape;
  for (Elem x : p12) {
    if (!in[g.inv(x)]) {
      inverse_escape = x;
      break;
    }
  }
  v.inversion_closed = !inverse_escape;

  std::optional<std::pair<Elem, Elem>> product_escape;
  for (Elem a : p12) {
    for (Elem b : p12) {
      if (!in[g.mul(a, b)]) {
        product_escape = {a, b};
        break;
      }
    }
    if (product_escape) break;
  }
  v.is_subgroup = !inverse_escape && !product_escape;

  if (v.is_subgroup != v.inversion_closed || v.is_subgroup != v.commutes) {
    throw InternalCheckError("is_subgroup_product: subgroup, inversion and commutation tests disagree");
  }
  if (inverse_escape) {
    v.witness = *inverse_escape;
    v.reason = "inverse of " + g.label(*inverse_escape) + " is not in K1K2";
  } else if (product_escape) {
    v.witness = g.mul(product_escape->first, product_escape->second);
    v.reason = "product " + g.label(product_escape->first) + "*" + g.label(product_escape->second) +
               " is not in K1K2";
  }
  return v;
}

bool is_matched_pair(const Subgroup& k1, const Subgroup& k2) {
  return intersection(k1, k2).order() == 1 && is_subgroup_product(k1, k2).is_subgroup;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw PreconditionError("intersection: subgroups of different groups");
  std::vector<Elem> out;
  for (Elem x : a.elements()) {
    if (b.contains(x)) out.push_back(x);
  }
  return from_elements(a.parent(), std::move(out));
}

Subgroup normalizer_in(const Subgroup& ambient, const Subgroup& k) {
  const GroupTable& g = k.group();
  const auto gens = generators_or_elements(k);
  std::vector<Elem> out;
  for (Elem x : ambient.elements()) {
    const bool ok =
        std::all_of(gens.begin(), gens.end(), [&](Elem s) { return k.contains(g.conjugate(x, s)); });
    if (ok) out.push_back(x);
  }
  return from_elements(k.parent(), std::move(out));
}

Subgroup centralizer_in(const Subgroup& ambient, const Subgroup& k) {
  const GroupTable& g = k.group();
  const auto gens = generators_or_elements(k);
  std::vector<Elem> out;
  for (Elem x : ambient.elements()) {
    const bool ok = std::all_of(gens.begin(), gens.end(), [&](Elem s) { return g.mul(x, s) == g.mul(s, x); });
    if (ok) out.push_back(x);
  }
  return from_elements(k.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& k) { return normalizer_in(Subgroup::whole(k.parent()), k); }
Subgroup centralizer(const Subgroup& k) { return centralizer_in(Subgroup::whole(k.parent()), k); }

Subgroup commutator_subgroup(const Subgroup& k) {
  const GroupTable& g = k.group();
  std::vector<char> mark(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem a : k.elements()) {
    for (Elem b : k.elements()) {
      const Elem c = g.commutator(a, b);
      if (!mark[c]) {
        mark[c] = 1;
        comms.push_back(c);
      }
    }
  }
  const Subgroup c = closure(k.parent(), comms);
  return from_elements(k.parent(), c.elements());
}

Subgroup normal_closure(const Subgroup& ambient, std::span<const Elem> seed) {
  const GroupTable& g = ambient.group();
  std::vector<char> mark(g.order(), 0);
  std::vector<Elem> conjugates;
  for (Elem s : seed) {
    for (Elem x : ambient.elements()) {
      const Elem c = g.conjugate(x, s);
      if (!mark[c]) {
        mark[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  const Subgroup c = closure(ambient.parent(), conjugates);
  return from_elements(ambient.parent(), c.elements());
}

CosetSpace left_cosets(const Subgroup& h, const Subgroup& l) {
  if (!l.is_subset_of(h)) throw PreconditionError("left_cosets: L is not contained in H");
  const GroupTable& g = h.group();
  std::vector<char> done(g.order(), 0);
  CosetSpace cs;
  for (Elem x : h.elements()) {
    if (done[x]) continue;
    std::vector<Elem> coset;
    for (Elem y : l.elements()) {
      const Elem z = g.mul(x, y);
      done[z] = 1;
      coset.push_back(z);
    }
    std::sort(coset.begin(), coset.end());
    cs.representatives.push_back(coset.front());
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

Quotient quotient_group(const Subgroup& h, const Subgroup& n) {
  if (!n.is_subset_of(h)) throw PreconditionError("quotient_group: N is not contained in H");
  if (!n.is_normal_in(h)) throw PreconditionError("quotient_group: N is not normal in H");
  const GroupTable& g = h.group();
  const CosetSpace cs = left_cosets(h, n);
  Quotient q;
  q.projection.assign(g.order(), kUnset);
  for (std::size_t c = 0; c < cs.cosets.size(); ++c) {
    for (Elem x : cs.cosets[c]) q.projection[x] = static_cast<Elem>(c);
  }
  q.representatives = cs.representatives;
  const std::size_t m = cs.cosets.size();
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("[" + g.label(cs.representatives[a]) + "]");
    for (std::size_t b = 0; b < m; ++b) {
      table[a][b] = q.projection[g.mul(cs.representatives[a], cs.representatives[b])];
    }
  }
  q.group = GroupTable::from_table(std::move(table), std::move(labels), g.name() + "/N");
  return q;
}

std::vector<Subgroup> all_subgroups(const Subgroup& ambient) {
  const GroupPtr& parent = ambient.parent();
  std::map<std::vector<Elem>, Subgroup> found;
  std::vector<Elem> cyclic_gens;
  for (Elem g : ambient.elements()) {
    Elem seed[] = {g};
    Subgroup c = closure(parent, seed);
    if (found.emplace(c.elements(), c).second && g != parent->identity()) cyclic_gens.push_back(g);
  }
  std::deque<Subgroup> queue;
  for (const auto& [key, s] : found) queue.push_back(s);
  while (!queue.empty()) {
    Subgroup s = std::move(queue.front());
    queue.pop_front();
    for (Elem g : cyclic_gens) {
      if (s.contains(g)) continue;
      auto seed = generators_or_elements(s);
      seed.push_back(g);
      Subgroup t = closure(parent, seed);
      auto key = t.elements();
      if (found.find(key) == found.end()) {
        found.emplace(std::move(key), t);
        queue.push_back(std::move(t));
      }
    }
  }
  std::vector<Subgroup> out;
  for (auto& [key, s] : found) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) { return all_subgroups(Subgroup::whole(g)); }

// --- constructions ---------------------------------------------------------------

GroupPtr cyclic(unsigned n) {
  if (n == 0) throw PreconditionError("cyclic: order must be positive");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (unsigned a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : a == 1 ? "a" : "a^" + std::to_string(a));
    for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return GroupTable::from_table(std::move(t), std::move(labels), "C" + std::to_string(n));
}

GroupPtr dihedral(unsigned n) {
  if (n == 0) throw PreconditionError("dihedral: n must be positive");
  // index j*n + k stands for r^k s^j
  const unsigned m = 2 * n;
  std::vector<std::vector<Elem>> t(m, std::vector<Elem>(m));
  std::vector<std::string> labels(m);
  for (unsigned x = 0; x < m; ++x) {
    const unsigned i = x / n, a = x % n;
    std::string r = a == 0 ? "" : a == 1 ? "r" : "r^" + std::to_string(a);
    labels[x] = i == 0 ? (a == 0 ? "e" : r) : r + "s";
    for (unsigned y = 0; y < m; ++y) {
      const unsigned j = y / n, b = y % n;
      const unsigned k = i == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = ((i + j) % 2) * n + k;
    }
  }
  return GroupTable::from_table(std::move(t), std::move(labels), "D" + std::to_string(n));
}

GroupPtr quaternion() {
  // unit u in {1,i,j,k} with sign; index = 2*u + (negative ? 1 : 0)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  std::vector<std::string> labels(8);
  for (int x = 0; x < 8; ++x) {
    labels[x] = std::string(x % 2 ? "-" : "") + names[x / 2];
    for (int y = 0; y < 8; ++y) {
      const int u = unit_mul[x / 2][y / 2];
      int sign = unit_sign[x / 2][y / 2] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      t[x][y] = static_cast<Elem>(2 * u + (sign < 0 ? 1 : 0));
    }
  }
  return GroupTable::from_table(std::move(t), std::move(labels), "Q8");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    labels[x] = "(" + a->label(xa) + "," + b->label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      t[x][y] = static_cast<Elem>(a->mul(xa, ya) * nb + b->mul(xb, yb));
    }
  }
  return GroupTable::from_table(std::move(t), std::move(labels), a->name() + "x" + b->name());
}

GroupPtr semidirect_product(const GroupPtr& normal, const GroupPtr& acting,
                            const std::vector<std::vector<Elem>>& action) {
  const std::size_t nk = normal->order(), na = acting->order();
  if (action.size() != na) throw PreconditionError("semidirect_product: action needs one row per acting element");
  for (std::size_t a = 0; a < na; ++a) {
    const auto& row = action[a];
    if (row.size() != nk) throw PreconditionError("semidirect_product: action row has wrong length");
    std::vector<char> hit(nk, 0);
    for (Elem x : row) {
      if (x >= nk || hit[x]) throw PreconditionError("semidirect_product: action row is not a bijection");
      hit[x] = 1;
    }
    for (Elem x = 0; x < nk; ++x) {
      for (Elem y = 0; y < nk; ++y) {
        if (row[normal->mul(x, y)] != normal->mul(row[x], row[y])) {
          throw PreconditionError("semidirect_product: action of " + acting->label(static_cast<Elem>(a)) +
                                  " is not an automorphism");
        }
      }
    }
  }
  for (Elem a = 0; a < na; ++a) {
    for (Elem b = 0; b < na; ++b) {
      for (Elem k = 0; k < nk; ++k) {
        if (action[acting->mul(a, b)][k] != action[a][action[b][k]]) {
          throw PreconditionError("semidirect_product: action is not a homomorphism");
        }
      }
    }
  }
  const std::size_t n = nk * na;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nk), xk = static_cast<Elem>(x % nk);
    labels[x] = "(" + normal->label(xk) + "," + acting->label(xa) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nk), yk = static_cast<Elem>(y % nk);
      const Elem k = normal->mul(xk, action[xa][yk]);
      t[x][y] = static_cast<Elem>(acting->mul(xa, ya) * nk + k);
    }
  }
  return GroupTable::from_table(std::move(t), std::move(labels), normal->name() + "x|" + acting->name());
}

std::string cycle_notation(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i + 1) continue;
    out += "(";
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!compact && !first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j] - 1;
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Permutation parse_cycles(std::string_view text, unsigned degree) {
  Permutation result(degree);
  std::iota(result.begin(), result.end(), 1u);
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return std::string(v);
  };
  const std::string s = trim(text);
  if (s.empty() || s == "e" || s == "()") return result;

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw PreconditionError("parse_cycles: expected '(' in \"" + std::string(text) + "\"");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw PreconditionError("parse_cycles: unbalanced parenthesis");
    std::string body = trim(std::string_view(s).substr(pos + 1, close - pos - 1));
    pos = close + 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;

    std::vector<unsigned> points;
    const bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      for (char& c : body) {
        if (c == ',') c = ' ';
      }
      std::istringstream in(body);
      std::string tok;
      while (in >> tok) {
        if (!std::all_of(tok.begin(), tok.end(), ::isdigit)) throw PreconditionError("parse_cycles: bad point " + tok);
        points.push_back(static_cast<unsigned>(std::stoul(tok)));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw PreconditionError("parse_cycles: bad point in cycle");
        points.push_back(static_cast<unsigned>(c - '0'));
      }
    }
    Permutation cyc(degree);
    std::iota(cyc.begin(), cyc.end(), 1u);
    std::set<unsigned> used;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const unsigned p = points[i];
      if (p < 1 || p > degree) throw PreconditionError("parse_cycles: point " + std::to_string(p) + " out of range");
      if (!used.insert(p).second) throw PreconditionError("parse_cycles: repeated point in cycle");
      cyc[p - 1] = points[(i + 1) % points.size()];
    }
    // result := result o cyc
    Permutation next(degree);
    for (unsigned x = 0; x < degree; ++x) next[x] = result[cyc[x] - 1];
    result = std::move(next);
  }
  return result;
}

GroupPtr from_permutations(unsigned degree, const std::vector<Permutation>& generators, std::string name) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 1u);
  for (const auto& g : generators) {
    if (g.size() != degree) throw PreconditionError("from_permutations: generator has wrong degree");
    std::vector<char> hit(degree + 1, 0);
    for (unsigned x : g) {
      if (x < 1 || x > degree || hit[x]) throw PreconditionError("from_permutations: generator is not a permutation");
      hit[x] = 1;
    }
  }
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (unsigned x = 0; x < degree; ++x) c[x] = a[b[x] - 1];
    return c;
  };
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : generators) {
        Permutation q = compose(p, s);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> perms(seen.begin(), seen.end());
  std::map<Permutation, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Elem>(i);
  const std::size_t n = perms.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = cycle_notation(perms[a]);
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(perms[a], perms[b]));
  }
  return GroupTable::from_table(std::move(t), std::move(labels), std::move(name));
}

GroupPtr symmetric(unsigned n) {
  if (n == 0) throw PreconditionError("symmetric: degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 1u);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
    gens = {swap, cycle};
  }
  return from_permutations(n, gens, "S" + std::to_string(n));
}

std::optional<std::vector<Elem>> extend_homomorphism(const Subgroup& source, std::span<const Elem> generators,
                                                     std::span<const Elem> images, const GroupTable& target) {
  if (generators.size() != images.size()) throw PreconditionError("extend_homomorphism: size mismatch");
  const GroupTable& g = source.group();
  std::vector<Elem> map(g.order(), kUnset);
  map[g.identity()] = target.identity();
  std::vector<Elem> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const Elem y = g.mul(x, generators[j]);
      const Elem fy = target.mul(map[x], images[j]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) throw PreconditionError("extend_homomorphism: generators do not generate the subgroup");
  return map;
}

}  // namespace idem
