#pragma once

// Type-1 (Adam's) isomorphism: C_n(R) -> C_n(xR) for units x of Z_n.

#include <vector>

#include "circulant/core.hpp"
#include "circulant/finite_group.hpp"

namespace circulant {

/// The multiplicative group of units of Z_n.
struct UnitGroup {
  Int order = 0;              // n
  std::vector<Int> elements;  // sorted

  bool contains(Int x) const;
  Int inverse(Int x) const;
};

UnitGroup units(Int n);

/// Reflexive reduction of {x s mod n : s in r}. Throws NotAUnit when
/// gcd(n, x) != 1.
JumpSet phi_apply(Int n, Int x, const JumpSet& r);

struct Type1Set {
  CirculantGraph base;
  /// Distinct graphs C_n(xR), ordered by jump sequence.
  std::vector<CirculantGraph> members;
  /// witnesses[i] = sorted multipliers x with xR = members[i].
  std::vector<std::vector<Int>> witnesses;

  std::size_t size() const noexcept { return members.size(); }
  /// Index of g among the members, or size() when absent.
  std::size_t index_of(const CirculantGraph& g) const;
  bool contains(const CirculantGraph& g) const { return index_of(g) != size(); }
  std::size_t base_index() const { return index_of(base); }
};

Type1Set type1_set(const CirculantGraph& g);

/// All units x with xR(g) = R(h); empty when the graphs are not Type-1
/// related. Throws OrderMismatch.
std::vector<Int> type1_witnesses(const CirculantGraph& g, const CirculantGraph& h);

struct Type1Group {
  Type1Set carrier;
  /// Smallest witness of each member: the canonical coset representative.
  std::vector<Int> representatives;
  /// {x : xR = R}, the witness set of the base.
  std::vector<Int> stabilizer;
  /// table[i][j] = index of C_n((x_i x_j) R).
  CayleyTable table;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return carrier.size(); }
};

/// Builds the composition table C_n(xR) o' C_n(yR) = C_n((xy)R) and checks
/// that it does not depend on the chosen representatives. Throws
/// VerificationFailure when well-definedness or a group axiom fails.
Type1Group type1_group(const CirculantGraph& g);

/// h in T1(g). Throws OrderMismatch.
bool type1_set_equality(const CirculantGraph& g, const CirculantGraph& h);

/// T1(g) and T1(h) hold the same graphs.
bool same_type1_carrier(const Type1Set& a, const Type1Set& b);

}  // namespace circulant
