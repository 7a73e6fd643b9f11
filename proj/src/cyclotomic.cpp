#include "idem/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace idem {

struct CycloField {
  unsigned n = 1;
  unsigned phi = 1;
  // powers[k] = x^k mod Phi_n, for 0 <= k < max(n, 2*phi - 1)
  std::vector<std::vector<long>> powers;
};

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<long>;

// Exact division of a by the monic polynomial b.
Poly divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::unique_ptr<CycloField> build_field(unsigned n) {
  auto f = std::make_unique<CycloField>();
  f->n = n;
  f->phi = euler_phi(n);
  const Poly phi_poly = cyclotomic_polynomial(n);
  const std::size_t d = f->phi;
  const std::size_t count = std::max<std::size_t>(n, 2 * d - 1);
  f->powers.reserve(count);
  Poly cur(d, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    f->powers.push_back(cur);
    // multiply by x, then reduce the x^d term using x^d = -sum phi_j x^j
    Poly next(d, 0);
    const long top = cur[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (top != 0) {
      for (std::size_t j = 0; j < d; ++j) next[j] -= top * phi_poly[j];
    }
    cur = std::move(next);
  }
  return f;
}

const CycloField* field_for(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<CycloField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[n];
  if (!slot) slot = build_field(n);
  return slot.get();
}

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  return p;
}

CycloScalar::CycloScalar() : field_(field_for(1)), coeff_(1) {}

CycloScalar::CycloScalar(const CycloField* field, std::vector<mpq_class> coeff)
    : field_(field), coeff_(std::move(coeff)) {}

CycloScalar CycloScalar::zero(unsigned conductor) {
  const CycloField* f = field_for(conductor);
  return CycloScalar(f, std::vector<mpq_class>(f->phi));
}

CycloScalar CycloScalar::one(unsigned conductor) { return rational(1, conductor); }

CycloScalar CycloScalar::rational(const mpq_class& q, unsigned conductor) {
  CycloScalar s = zero(conductor);
  s.coeff_[0] = q;
  s.coeff_[0].canonicalize();
  return s;
}

CycloScalar CycloScalar::root_of_unity(long long k, unsigned conductor) {
  const CycloField* f = field_for(conductor);
  const long long n = conductor;
  const auto& pw = f->powers[static_cast<std::size_t>(((k % n) + n) % n)];
  std::vector<mpq_class> c(f->phi);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = pw[i];
  return CycloScalar(f, std::move(c));
}

unsigned CycloScalar::conductor() const { return field_->n; }

bool CycloScalar::is_zero() const {
  for (const auto& c : coeff_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < coeff_.size(); ++i) {
    if (sgn(coeff_[i]) != 0) return false;
  }
  return true;
}

CycloScalar CycloScalar::promoted(unsigned multiple) const {
  if (multiple == field_->n) return *this;
  if (multiple % field_->n != 0) {
    throw std::invalid_argument("CycloScalar::promoted: target conductor is not a multiple");
  }
  const CycloField* f = field_for(multiple);
  const std::size_t step = multiple / field_->n;
  std::vector<mpq_class> out(f->phi);
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (sgn(coeff_[i]) == 0) continue;
    const auto& pw = f->powers[i * step];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (pw[j] != 0) out[j] += coeff_[i] * pw[j];
    }
  }
  return CycloScalar(f, std::move(out));
}

void CycloScalar::match_conductor(CycloScalar& other) {
  if (field_ == other.field_) return;
  const unsigned m = std::lcm(field_->n, other.field_->n);
  if (m != field_->n) *this = promoted(m);
  if (m != other.field_->n) other = other.promoted(m);
}

CycloScalar CycloScalar::conj() const {
  const unsigned n = field_->n;
  std::vector<mpq_class> out(coeff_.size());
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (sgn(coeff_[i]) == 0) continue;
    const auto& pw = field_->powers[(n - i % n) % n];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (pw[j] != 0) out[j] += coeff_[i] * pw[j];
    }
  }
  return CycloScalar(field_, std::move(out));
}

long long CycloScalar::root_of_unity_index() const {
  for (unsigned k = 0; k < field_->n; ++k) {
    const auto& pw = field_->powers[k];
    bool same = true;
    for (std::size_t j = 0; j < coeff_.size() && same; ++j) same = (coeff_[j] == pw[j]);
    if (same) return k;
  }
  return -1;
}

std::complex<double> CycloScalar::to_complex() const {
  std::complex<double> z = 0.0;
  const double step = 2.0 * std::numbers::pi / field_->n;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (sgn(coeff_[i]) == 0) continue;
    z += coeff_[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
  }
  return z;
}

std::string CycloScalar::to_string() const {
  if (is_rational()) return coeff_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (sgn(coeff_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeff_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  os << " (z=zeta_" << field_->n << ")";
  return os.str();
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (field_ != o.field_) {
    CycloScalar other = o;
    match_conductor(other);
    return *this += other;
  }
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  if (field_ != o.field_) {
    CycloScalar other = o;
    match_conductor(other);
    return *this -= other;
  }
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const mpq_class& q) {
  // gmp assumes canonical operands; callers may hand in e.g. mpq_class(2, 4)
  mpq_class r = q;
  r.canonicalize();
  for (auto& c : coeff_) c *= r;
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  if (o.is_rational()) {
    // promote the conductor so mixed products stay in the common field
    if (field_ != o.field_ && std::lcm(field_->n, o.field_->n) != field_->n) {
      *this = promoted(std::lcm(field_->n, o.field_->n));
    }
    return *this *= o.coeff_[0];
  }
  if (field_ != o.field_) {
    CycloScalar other = o;
    match_conductor(other);
    return *this *= other;
  }
  if (is_rational()) {
    const mpq_class q = coeff_[0];
    *this = o;
    return *this *= q;
  }
  const std::size_t d = coeff_.size();
  std::vector<mpq_class> raw(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeff_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(o.coeff_[j]) != 0) raw[i + j] += coeff_[i] * o.coeff_[j];
    }
  }
  std::vector<mpq_class> out(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < raw.size(); ++k) {
    if (sgn(raw[k]) == 0) continue;
    const auto& pw = field_->powers[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (pw[j] != 0) out[j] += raw[k] * pw[j];
    }
  }
  coeff_ = std::move(out);
  return *this;
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.field_ != b.field_) {
    CycloScalar x = a;
    CycloScalar y = b;
    x.match_conductor(y);
    return x.coeff_ == y.coeff_;
  }
  return a.coeff_ == b.coeff_;
}

}  // namespace idem
