#include <cstdlib>
#include <unordered_map>

#include "idem/dynamics.hpp"
#include "idem/error.hpp"

namespace idem {

// One byte per letter: high bit is the factor, the rest the power.
FreeWord FreeWord::letter(unsigned factor, unsigned power, unsigned order) {
  if (factor > 1) throw PreconditionError("free word factor must be 0 or 1");
  if (order < 2 || order > 127) throw PreconditionError("free factor order must lie in [2, 127]");
  FreeWord w;
  power %= order;
  if (power != 0) {
    w.code_.push_back(static_cast<char>((factor << 7) | power));
  }
  return w;
}

FreeWord::Letter FreeWord::at(std::size_t i) const {
  const auto byte = static_cast<unsigned char>(code_.at(i));
  return {static_cast<unsigned char>(byte >> 7), static_cast<unsigned char>(byte & 0x7f)};
}

void FreeWord::push(Letter l, unsigned order0, unsigned order1) {
  if (!code_.empty()) {
    const Letter last = at(code_.size() - 1);
    if (last.factor == l.factor) {
      const unsigned order = l.factor == 0 ? order0 : order1;
      const unsigned p = (last.power + l.power) % order;
      code_.pop_back();
      if (p != 0) code_.push_back(static_cast<char>((l.factor << 7) | p));
      return;
    }
  }
  code_.push_back(static_cast<char>((l.factor << 7) | l.power));
}

FreeWord FreeWord::times(const FreeWord& other, unsigned order0, unsigned order1) const {
  FreeWord w = *this;
  for (std::size_t i = 0; i < other.length(); ++i) w.push(other.at(i), order0, order1);
  return w;
}

std::string FreeWord::to_string() const {
  if (code_.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < length(); ++i) {
    const Letter l = at(i);
    s += l.factor == 0 ? 'a' : 'b';
    if (l.power != 1) s += "^" + std::to_string(l.power);
  }
  return s;
}

std::size_t default_word_budget() {
  if (const char* env = std::getenv("IDEM_WORD_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

DecayReport free_product_decay(unsigned m, unsigned n, const FreeDecayOptions& options) {
  if (m < 2 || n < 2) throw PreconditionError("free_product_decay: both cyclic orders must be at least 2");
  if (m > 127 || n > 127) throw PreconditionError("free_product_decay: cyclic orders above 127 are unsupported");
  if (options.max_power == 0) throw PreconditionError("free_product_decay: max_power must be positive");

  using Dist = std::unordered_map<std::string, std::pair<FreeWord, mpq_class>>;
  // nu = m_{C_m} * m_{C_n} puts 1/(mn) on every a^i b^j.
  Dist nu;
  const mpq_class w(1, static_cast<long>(m) * n);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      FreeWord word = FreeWord::letter(0, i, m).times(FreeWord::letter(1, j, n), m, n);
      nu.emplace(word.key(), std::make_pair(word, w));
    }
  }

  DecayReport report;
  report.m = m;
  report.n = n;
  auto record = [&](const Dist& d) {
    mpq_class best = 0, mass = 0;
    for (const auto& [key, entry] : d) {
      mass += entry.second;
      if (abs(entry.second) > best) best = abs(entry.second);
    }
    if (!report.max_coefficient.empty() && !(best < report.max_coefficient.back())) {
      report.strictly_decreasing = false;
    }
    report.max_coefficient.push_back(best);
    report.support_size.push_back(d.size());
    report.total_mass.push_back(mass);
    ++report.powers_computed;
    if (!report.below_epsilon_at && best < options.epsilon) report.below_epsilon_at = report.powers_computed;
  };

  Dist power = nu;
  record(power);
  while (report.powers_computed < options.max_power) {
    if (power.size() * nu.size() > options.word_budget) {
      report.budget_exceeded = true;
      break;
    }
    Dist next;
    next.reserve(power.size() * 4);
    for (const auto& [k1, e1] : power) {
      for (const auto& [k2, e2] : nu) {
        FreeWord word = e1.first.times(e2.first, m, n);
        auto [it, fresh] = next.try_emplace(word.key(), word, mpq_class(0));
        it->second.second += e1.second * e2.second;
      }
    }
    power = std::move(next);
    record(power);
  }
  return report;
}

}  // namespace idem
