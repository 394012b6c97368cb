#pragma once

// Circulant graphs C_n(R) over Z_n with connection sets stored folded into
// [1, n/2]. Everything here is a value type; equality is structural.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "circulant/error.hpp"

namespace circulant {

using Int = std::int64_t;

/// Non-negative residue of v modulo n.
constexpr Int mod(Int v, Int n) {
  const Int r = v % n;
  return r < 0 ? r + n : r;
}

/// Folds a residue into [0, n/2]: r -> min(r, n - r).
constexpr Int fold(Int v, Int n) {
  const Int r = mod(v, n);
  return 2 * r > n ? n - r : r;
}

Int gcd(Int a, Int b);

/// Canonical connection set: sorted, distinct, non-empty, every jump in
/// [1, n/2].
class JumpSet {
 public:
  /// Reflexive modular reduction of an arbitrary multiset of integers.
  /// Throws InvalidJump on a value that is 0 mod n and EmptyConnectionSet on
  /// an empty input.
  static JumpSet reduce(Int n, std::span<const Int> raw);
  static JumpSet reduce(Int n, std::initializer_list<Int> raw) {
    return reduce(n, std::span<const Int>(raw.begin(), raw.size()));
  }

  Int order() const noexcept { return order_; }
  const std::vector<Int>& jumps() const noexcept { return jumps_; }
  std::size_t size() const noexcept { return jumps_.size(); }
  bool contains(Int jump) const;
  /// True when n is even and n/2 is a jump.
  bool has_half_jump() const;

  auto begin() const noexcept { return jumps_.begin(); }
  auto end() const noexcept { return jumps_.end(); }

  friend bool operator==(const JumpSet&, const JumpSet&) = default;
  friend auto operator<=>(const JumpSet&, const JumpSet&) = default;

 private:
  JumpSet(Int order, std::vector<Int> jumps)
      : order_(order), jumps_(std::move(jumps)) {}

  Int order_ = 0;
  std::vector<Int> jumps_;
};

/// Residues R ∪ (n - R), closed under v -> n - v.
struct DirectedJumpSet {
  Int order = 0;
  std::vector<Int> values;  // sorted ascending

  bool contains(Int v) const;
  friend bool operator==(const DirectedJumpSet&, const DirectedJumpSet&) = default;
};

/// Unordered edge stored with first < second.
using Edge = std::pair<Int, Int>;

inline Edge make_edge(Int a, Int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A simple graph on the vertex set Z_n. Edges are kept sorted and unique.
class LabeledGraph {
 public:
  LabeledGraph(Int order, std::vector<Edge> edges);

  Int order() const noexcept { return order_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(Int a, Int b) const;
  /// Neighbours of vertex v, sorted.
  std::vector<Int> neighbors(Int v) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  Int order_;
  std::vector<Edge> edges_;
};

class CirculantGraph {
 public:
  explicit CirculantGraph(JumpSet jumps) : jumps_(std::move(jumps)) {}

  Int order() const noexcept { return jumps_.order(); }
  const JumpSet& jumps() const noexcept { return jumps_; }

  /// Adjacency test on Z_n without materialising the edge set.
  bool adjacent(Int a, Int b) const;
  std::size_t degree() const;

  /// "C_n(r1,r2,...)".
  std::string to_string() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;
  friend auto operator<=>(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  JumpSet jumps_;
};

/// Canonical constructor; propagates JumpSet::reduce errors. Requires n >= 3.
CirculantGraph make_circulant(Int n, std::span<const Int> raw);
inline CirculantGraph make_circulant(Int n, std::initializer_list<Int> raw) {
  return make_circulant(n, std::span<const Int>(raw.begin(), raw.size()));
}

/// FNV-1a hash of the order and the sorted edge list.
std::uint64_t fingerprint(const LabeledGraph& h);

DirectedJumpSet symmetric_closure(const CirculantGraph& g);

LabeledGraph edge_set(const CirculantGraph& g);

/// Expected |E(C_n(R))|: n|R|, less n/2 when n/2 is a jump.
std::size_t expected_edge_count(const JumpSet& r);

struct CycleStats {
  Int jump = 0;
  Int gcd = 0;
  Int cycle_length = 0;
  Int cycle_count = 0;
};

/// Cycles formed by the edges of one jump. Computed by walking x -> x + r
/// from every start, so the result is a constructive count rather than the
/// closed form.
CycleStats period_cycle_stats(Int n, Int r);

/// k.C_n(T) = C_{kn}(kT).
CirculantGraph scale(Int k, const CirculantGraph& g);

}  // namespace circulant
