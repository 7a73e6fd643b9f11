#include "idem/measure.hpp"

#include <algorithm>
#include <numeric>

#include "idem/error.hpp"

namespace idem {

namespace {

void require_same_group(const Measure& a, const Measure& b, const char* op) {
  if (a.group() != b.group()) throw PreconditionError(std::string(op) + ": measures live on different groups");
}

}  // namespace

Measure::Measure(GroupPtr group)
    : group_(std::move(group)), coeff_(group_->order(), CycloScalar::zero(group_->exponent())) {}

Measure Measure::dirac(const GroupPtr& group, Elem g) {
  if (g >= group->order()) throw PreconditionError("dirac: element out of range");
  Measure m(group);
  m.coeff_[g] = CycloScalar::one(group->exponent());
  return m;
}

Measure Measure::haar(const Subgroup& k) {
  Measure m(k.parent());
  const mpq_class w(1, k.order());
  for (Elem x : k.elements()) m.coeff_[x] = CycloScalar::rational(w, k.group().exponent());
  return m;
}

Measure Measure::char_idem(const Subgroup& k, const Character& rho) {
  if (!(rho.domain() == k)) throw PreconditionError("char_idem: character domain differs from K");
  Measure m(k.parent());
  const mpq_class w(1, k.order());
  for (Elem x : k.elements()) m.coeff_[x] = rho.value(x) * w;
  return m;
}

bool Measure::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const CycloScalar& c) { return c.is_zero(); });
}

std::vector<std::complex<double>> Measure::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeff_.size());
  for (const auto& c : coeff_) out.push_back(c.to_complex());
  return out;
}

Measure& Measure::operator+=(const Measure& o) {
  require_same_group(*this, o, "measure +");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

Measure& Measure::operator-=(const Measure& o) {
  require_same_group(*this, o, "measure -");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

Measure& Measure::operator*=(const CycloScalar& z) {
  for (auto& c : coeff_) c *= z;
  return *this;
}

bool operator==(const Measure& a, const Measure& b) { return a.group_ == b.group_ && a.coeff_ == b.coeff_; }

Measure convolve(const Measure& mu, const Measure& nu) {
  require_same_group(mu, nu, "convolve");
  const GroupTable& g = *mu.group();
  const auto smu = support(mu);
  const auto snu = support(nu);
  Measure out(mu.group());
  for (Elem h : smu) {
    for (Elem k : snu) out.add(g.mul(h, k), mu[h] * nu[k]);
  }
  return out;
}

Measure adjoint(const Measure& mu) {
  const GroupTable& g = *mu.group();
  Measure out(mu.group());
  for (Elem x = 0; x < g.order(); ++x) out.set(x, mu[g.inv(x)].conj());
  return out;
}

Measure left_translate(Elem g, const Measure& mu) {
  const GroupTable& t = *mu.group();
  Measure out(mu.group());
  for (Elem x = 0; x < t.order(); ++x) out.set(t.mul(g, x), mu[x]);
  return out;
}

Measure right_translate(const Measure& mu, Elem g) {
  const GroupTable& t = *mu.group();
  Measure out(mu.group());
  for (Elem x = 0; x < t.order(); ++x) out.set(t.mul(x, g), mu[x]);
  return out;
}

std::vector<Elem> support(const Measure& mu) {
  std::vector<Elem> out;
  for (Elem x = 0; x < mu.size(); ++x) {
    if (!mu[x].is_zero()) out.push_back(x);
  }
  return out;
}

double tv_norm(const Measure& mu) {
  double s = 0.0;
  for (const auto& c : mu.coefficients()) {
    if (!c.is_zero()) s += std::abs(c.to_complex());
  }
  return s;
}

const char* to_string(IdempotentClass::Kind kind) {
  switch (kind) {
    case IdempotentClass::Kind::Zero: return "Zero";
    case IdempotentClass::Kind::Contractive: return "Contractive";
    case IdempotentClass::Kind::IdempotentOther: return "IdempotentOther";
    case IdempotentClass::Kind::NotIdempotent: return "NotIdempotent";
  }
  return "?";
}

IdempotentClass classify_idempotent(const Measure& mu) {
  IdempotentClass result;
  if (!(convolve(mu, mu) == mu)) return result;
  if (mu.is_zero()) {
    result.kind = IdempotentClass::Kind::Zero;
    return result;
  }
  result.kind = IdempotentClass::Kind::IdempotentOther;
  const GroupPtr& parent = mu.group();
  const auto supp = support(mu);
  if (closure(parent, supp).order() != supp.size()) return result;
  const Subgroup k = make_subgroup(parent, supp);

  const unsigned n = parent->exponent();
  const mpq_class order(static_cast<long>(k.order()));
  std::vector<unsigned> nums;
  nums.reserve(k.order());
  for (Elem x : k.elements()) {
    // |K| mu(x) must be an n-th root of unity
    CycloScalar c = mu[x] * order;
    const unsigned l = std::lcm(c.conductor(), n);
    c = c.promoted(l);
    const long long idx = c.root_of_unity_index();
    if (idx < 0 || (static_cast<unsigned long long>(idx) * n) % l != 0) return result;
    nums.push_back(static_cast<unsigned>(static_cast<unsigned long long>(idx) * n / l));
  }
  try {
    Character rho = Character::from_numerators(k, std::move(nums));
    result.kind = IdempotentClass::Kind::Contractive;
    result.subgroup = k;
    result.character = std::move(rho);
  } catch (const PreconditionError&) {
    // root-of-unity values that are not multiplicative
  }
  return result;
}

FloatMeasure convolve(const GroupTable& g, const FloatMeasure& mu, const FloatMeasure& nu) {
  FloatMeasure out(g.order(), 0.0);
  for (Elem h = 0; h < g.order(); ++h) {
    if (mu[h] == 0.0) continue;
    for (Elem k = 0; k < g.order(); ++k) {
      if (nu[k] != 0.0) out[g.mul(h, k)] += mu[h] * nu[k];
    }
  }
  return out;
}

FloatMeasure adjoint(const GroupTable& g, const FloatMeasure& mu) {
  FloatMeasure out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = std::conj(mu[g.inv(x)]);
  return out;
}

double max_abs_diff(const FloatMeasure& a, const FloatMeasure& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const FloatMeasure& a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace idem
