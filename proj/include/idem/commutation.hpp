#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idem/characters.hpp"
#include "idem/group.hpp"
#include "idem/measure.hpp"

namespace idem {

#ifdef NDEBUG
inline constexpr bool kCrossCheckByDefault = false;
#else
inline constexpr bool kCrossCheckByDefault = true;
#endif

struct CommutationOptions {
  /// Also compute both convolutions exactly and require them to agree with
  /// the verdict. A disagreement raises InternalCheckError.
  bool cross_check = kCrossCheckByDefault;
};

struct CommutationVerdict {
  enum class Kind { ZeroProduct, Commute, NonCommuting };
  Kind kind = Kind::NonCommuting;
  /// Commute: the subgroup K1K2 and the character on it.
  std::optional<Subgroup> product_subgroup;
  std::optional<Character> product_character;
  /// NonCommuting: smallest element where the two products differ.
  std::optional<Elem> witness;
  std::string reason;
  /// (rho1 m_K1) * (rho2 m_K2) and the reverse order; present whenever they
  /// were computed (always for NonCommuting, and under cross_check).
  std::optional<Measure> forward;
  std::optional<Measure> backward;
};

const char* to_string(CommutationVerdict::Kind kind);

/// Decides whether rho1 m_K1 and rho2 m_K2 commute, and gives the product:
/// zero when the characters disagree on K1 n K2; rho m_{K1K2} when K1K2 is a
/// subgroup and k1k2 -> rho1(k1)rho2(k2) is a character; otherwise they do
/// not commute.
CommutationVerdict classify_pair(const Subgroup& k1, const Character& rho1, const Subgroup& k2,
                                 const Character& rho2, const CommutationOptions& options = {});

struct SemidirectReport {
  GroupPtr group;
  Subgroup normal_factor;
  Subgroup acting_factor;
  Character rho;  // transported onto normal_factor
  Elem moving_automorphism = 0;  // an alpha with rho o alpha != rho (index in the acting group)
  Measure rho_then_haar;  // (rho m_K) * m_A
  Measure haar_then_rho;  // m_A * (rho m_K)
  bool noncommuting = false;
  /// Both products match the closed forms rho(k)/(|A||K|) and
  /// rho(alpha^-1(k))/(|A||K|) at (k, alpha).
  bool closed_forms_match = false;
  CommutationVerdict verdict;
};

/// Builds G = K x| A and checks that rho m_K and m_A fail to commute.
/// Throws PreconditionError when rho is invariant under the action.
SemidirectReport semidirect_counterexample(const GroupPtr& normal, const GroupPtr& acting,
                                           const std::vector<std::vector<Elem>>& action,
                                           const Character& rho);

}  // namespace idem
