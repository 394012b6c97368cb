#pragma once

// Parametric generators for infinite families of Type-2 isomorphic circulant
// graphs (m = 2, 3, 5, 7 and a general odd prime p), and a verifier that
// checks every declared theta relation and resolves the isomorphism type.

#include <functional>
#include <string>
#include <vector>

#include "circulant/core.hpp"
#include "circulant/groups.hpp"

namespace circulant {

enum class FamilyClaim { Type2, Type1OrType2 };
std::string_view to_string(FamilyClaim c);

/// theta_{n,m,t}(C_n(sets[from])) = C_n(sets[to]).
struct FamilyRelation {
  Int t = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const FamilyRelation&, const FamilyRelation&) = default;
};

struct FamilyInstance {
  std::string kind;
  Int order = 0;
  Int m = 0;
  std::vector<JumpSet> sets;
  std::vector<FamilyRelation> relations;
  FamilyClaim claim = FamilyClaim::Type2;
  /// Hypotheses of the construction that this instance does not meet.
  std::vector<std::string> notes;
};

struct GeneralPParams {
  Int p = 0;  // odd prime
  Int n = 0;
  Int x = 0;  // 1 <= x <= p - 1
  Int y = 0;  // 0 <= y <= np - 1

  Int order() const noexcept { return n * p * p * p; }
  /// d_i = (i-1) x p n + x + y p, i = 1..p.
  Int d(Int i) const noexcept { return (i - 1) * x * p * n + x + y * p; }
};

/// Throws InvalidFamilyParams (n < 2, 2s-1 out of range) or DegenerateFamily
/// (n = 2s-1).
FamilyInstance family_m2(Int n, Int s);
/// Throws InvalidFamilyParams when p_list is empty, gcd(p_list) != 1, or 2y is
/// not a shared jump with gcd(4n, y) = 1.
FamilyInstance family_m2_general(Int n, Int s, const std::vector<Int>& p_list, Int y);
FamilyInstance family_m3(Int n);
FamilyInstance family_m5(Int n);
FamilyInstance family_m7(Int n);
/// The general variants accept any non-empty list of positive p_i. A list
/// with gcd != 1 falls outside the construction's hypothesis; it is still
/// generated and the unmet hypothesis is recorded in `notes`.
FamilyInstance family_m3_general(Int n, const std::vector<Int>& p_list);
FamilyInstance family_m5_general(Int n, const std::vector<Int>& p_list);
FamilyInstance family_m7_general(Int n, const std::vector<Int>& p_list);
/// Throws InvalidFamilyParams when p is not an odd prime or a bound fails.
FamilyInstance family_general_p(const GeneralPParams& params);

enum class ResolvedClaim {
  Type2,  // no unit multiplier relates any two sets
  Type1,  // every pair is related by a unit multiplier
  Mixed,  // some pairs are, some are not
};
std::string_view to_string(ResolvedClaim c);

struct RelationCheck {
  FamilyRelation relation;
  bool holds = false;
};

struct PairWitnesses {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<Int> witnesses;
};

struct FamilyReport {
  std::vector<RelationCheck> relations;
  /// Pairs i < j with a non-empty unit-multiplier witness list.
  std::vector<PairWitnesses> type1_pairs;
  ResolvedClaim resolved = ResolvedClaim::Type2;
  std::vector<CirculantGraph> t2_members;  // T2 of the first set
  bool t2_matches_sets = false;
  Int group_order = 0;
  Int group_generator = 0;
};

struct FamilyVerifyConfig {
  Int max_order = 100'000;
  unsigned threads = 1;
};

/// Checks every relation edge-exactly, computes pairwise unit witnesses and
/// T2 of the first set. Throws VerificationFailure naming (t, i, j) when a
/// relation fails, and for claim Type2 also when a pair is Type-1 related
/// or T2 differs from the set list. Throws BudgetExceeded above max_order.
FamilyReport family_verify(const FamilyInstance& f, const FamilyVerifyConfig& config = {});

}  // namespace circulant
