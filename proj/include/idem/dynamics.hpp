#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idem/characters.hpp"
#include "idem/group.hpp"
#include "idem/measure.hpp"

namespace idem {

struct IterationOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 500;
  /// Residual that must persist for an oscillation to count as one.
  double oscillation_floor = 0.1;  // capped at 1/(2|N|) for an obstruction N
  /// Number of trailing iterations inspected for persistent oscillation.
  std::size_t oscillation_window = 50;
};

/// One contractive idempotent factor rho m_K.
struct Factor {
  Subgroup subgroup;
  Character character;
};

/// Predicted (exact) versus empirical (floating point) behaviour of
/// convolution powers nu^n.
struct LimitReport {
  enum class Prediction { ZeroLimit, Limit, NoLimit };
  Prediction prediction = Prediction::ZeroLimit;
  std::optional<Measure> predicted;  // Limit only
  std::optional<Subgroup> limit_subgroup;
  std::optional<Character> limit_character;
  std::optional<Subgroup> obstruction;  // NoLimit only
  std::optional<Elem> coset_representative;

  FloatMeasure empirical;            // last power computed
  std::size_t iterations = 0;        // powers computed beyond nu itself
  double residual = 0.0;             // max |nu^(n+1) - nu^n|
  double distance = 0.0;             // max |nu^n - predicted|; NoLimit: unused
  double persistent_residual = 0.0;  // NoLimit: min residual over the trailing window
  std::vector<double> residual_series;
  /// Exact identities nu * predicted = predicted and factor * predicted = predicted.
  bool absorption = true;
  bool agreement = false;
};

const char* to_string(LimitReport::Prediction p);

struct StrombergResult {
  enum class Verdict { Converges, Obstructed };
  Verdict verdict = Verdict::Converges;
  Subgroup generated;                 // <supp mu>
  std::optional<Subgroup> normal;     // smallest obstructing normal subgroup
  std::optional<Elem> coset_representative;
  LimitReport report;
};

/// For a probability mu on a finite group: powers converge to the Haar
/// measure of K = <supp mu> unless supp mu lies in a coset of a proper
/// normal subgroup of K. The verdict is exact; the powers are then iterated
/// numerically to confirm it. Two-point walks on C_12 contract like
/// cos(pi/12)^n, so the default cap here is larger than elsewhere.
inline constexpr std::size_t kStrombergMaxIterations = 2000;
StrombergResult stromberg_check(const Measure& mu,
                                const IterationOptions& options = {.max_iterations = kStrombergMaxIterations});

/// Limit of [(rho_1 m_K1) * ... * (rho_m m_Km)]^n: rho m_L for L = <K_1 ... K_m>
/// when some rho on L restricts to every rho_j, otherwise 0.
LimitReport idempotent_power_limit(std::span<const Factor> factors, const IterationOptions& options = {});

/// Structure of a product of contractive idempotents that is itself idempotent.
struct ProductStructureReport {
  bool idempotent = false;
  bool nonzero = false;
  bool hypothesis_holds = false;      // idempotent and nonzero
  bool product_set_is_subgroup = false;
  bool support_is_product_set = false;
  bool extension_exists = false;
  bool passed = false;                // vacuous when the hypothesis fails
  std::vector<Elem> product_set;      // K_1 K_2 ... K_m
  std::string summary;
};

/// If nu = prod rho_j m_Kj is a nonzero idempotent, checks that K_1...K_m is a
/// subgroup L carrying a character that restricts to each rho_j.
ProductStructureReport verify_idempotent_product(std::span<const Factor> factors);

/// Exact product of the factor measures.
Measure factor_product(std::span<const Factor> factors);

// --- free products of two finite cyclic groups ------------------------------

/// Reduced word in C_m * C_n: nonidentity letters alternating between the two
/// factors. The empty word is the identity.
class FreeWord {
 public:
  struct Letter {
    unsigned char factor;  // 0 or 1
    unsigned char power;   // 1 .. order-1
  };

  FreeWord() = default;
  static FreeWord letter(unsigned factor, unsigned power, unsigned order);

  std::size_t length() const { return code_.size(); }
  Letter at(std::size_t i) const;
  /// Product in C_m * C_n, reduced to normal form.
  FreeWord times(const FreeWord& other, unsigned order0, unsigned order1) const;
  const std::string& key() const { return code_; }
  std::string to_string() const;

  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.code_ == b.code_; }

 private:
  void push(Letter l, unsigned order0, unsigned order1);
  std::string code_;
};

struct FreeDecayOptions {
  std::size_t max_power = 8;
  mpq_class epsilon{1, 10};
  std::size_t word_budget = 5'000'000;
};

/// Reads IDEM_WORD_BUDGET, falling back to 5e6.
std::size_t default_word_budget();

struct DecayReport {
  unsigned m = 0, n = 0;
  std::vector<mpq_class> max_coefficient;  // index k-1 for nu^k
  std::vector<std::size_t> support_size;
  std::vector<mpq_class> total_mass;
  bool strictly_decreasing = true;
  std::optional<std::size_t> below_epsilon_at;
  bool budget_exceeded = false;
  std::size_t powers_computed = 0;
};

/// Exact rational powers of nu = m_{C_m} * m_{C_n} in C_m * C_n.
DecayReport free_product_decay(unsigned m, unsigned n, const FreeDecayOptions& options = {});

}  // namespace idem
