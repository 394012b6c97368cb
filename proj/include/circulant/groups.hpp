#pragma once

// The orbit V_{n,m}(C_n(R)) of a circulant graph under all shifts t, the
// Type-2 set, and their group structures. Group elements are shift indices
// in Z_{n/m}; graphs are labels on those indices.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circulant/core.hpp"
#include "circulant/finite_group.hpp"
#include "circulant/theta.hpp"

namespace circulant {

struct VSet {
  CirculantGraph base;
  Int m = 0;
  Int modulus = 0;                     // n/m
  std::vector<TClassification> rows;   // indexed by t
  /// image_class[t] identifies the image graph of row t: equal ids mean equal
  /// edge sets. Circulant images are compared exactly; non-circulant ones by
  /// a 64-bit fingerprint of the sorted edge list.
  std::vector<std::size_t> image_class;
  /// Distinct circulant images (base included), sorted.
  std::vector<CirculantGraph> distinct;
  /// Smallest d > 0 with image(d) = base, or modulus if there is none.
  Int graph_period = 0;

  /// Number of distinct images, circulant or not.
  std::size_t distinct_image_count() const;
};

VSet v_set(Int n, Int m, const CirculantGraph& g, unsigned threads = 1);

/// A subgroup of (Z_modulus, +) with graph labels. Its quotient by the
/// stabilizer {t : image(t) = base} acts on the labelled graphs.
struct OrbitGroup {
  Int modulus = 0;
  Int generator = 0;  // 0 for the trivial group
  std::vector<Int> indices;
  /// Image graph per index; nullopt for non-circulant images.
  std::vector<std::optional<JumpSet>> labels;
  /// Label class per index (see VSet::image_class).
  std::vector<std::size_t> label_class;
  /// Addition table over positions in `indices`.
  CayleyTable table;
  /// Size of the stabilizer subgroup inside `indices`.
  Int stabilizer_order = 1;

  Int order() const noexcept { return static_cast<Int>(indices.size()); }
  Int quotient_order() const noexcept { return order() / stabilizer_order; }
  /// Position of t in `indices`, or indices.size() when absent.
  std::size_t position_of(Int t) const;
};

/// The full index group Z_{n/m} labelled by the sweep. Throws
/// VerificationFailure if an axiom or the label quotient fails.
OrbitGroup v_group(const VSet& v);

struct Type2Set {
  CirculantGraph base;
  Int m = 0;
  Int modulus = 0;
  Int graph_period = 0;
  /// {base} plus every Type-2 image, sorted.
  std::vector<CirculantGraph> members;
  /// All t whose verdict is Identity or Type2, ascending.
  std::vector<Int> t2_indices;
  /// True when every shift gives Identity or Type2, i.e. T2 = V.
  bool equals_v = false;
  /// Per-t image classes carried over from the sweep.
  std::vector<std::size_t> image_class;
  std::vector<std::optional<JumpSet>> images;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const CirculantGraph& g) const;
};

Type2Set t2_set(const VSet& v);
Type2Set t2_set(Int n, Int m, const CirculantGraph& g, unsigned threads = 1);

/// Checks that t2_indices is a subgroup of Z_{n/m} and returns it with its
/// labels. Throws SubgroupViolation when closure fails, VerificationFailure
/// when the quotient order differs from the number of members.
OrbitGroup t2_group(const Type2Set& s);

/// h in T2_{n,m}(g). Throws OrderMismatch.
bool t2_set_equality(const CirculantGraph& g, const CirculantGraph& h, Int m);

/// Edge-exact check of theta_{t+t'}(G) = theta_t(theta_{t'}(G)).
bool orbit_law_holds(const CirculantGraph& g, Int m, Int t, Int t_prime);

struct AppendedJumpReport {
  bool applicable = false;
  std::string reason;  // why the check is inapplicable, empty otherwise
  std::size_t t2_size_with_jump = 0;
  /// Sweep of C_n(base) over every t.
  std::vector<TClassification> rows;
  /// No row of the sweep is Type2.
  bool holds = false;
};

/// For C_n(base ∪ {r}) with a Type-2 partner w.r.t. m, sweeps C_n(base)
/// (which has no jump divisible by m) and checks that no shift produces a
/// Type-2 image.
AppendedJumpReport appended_jump_check(Int n, Int m, Int r, const JumpSet& base);

struct CensusConfig {
  std::size_t min_size = 3;
  std::size_t max_size = 3;
  /// Upper bound on canonical candidate sets examined.
  std::uint64_t max_candidates = 10'000'000;
  /// Extra filter on candidates; empty means accept all.
  std::function<bool(const JumpSet&)> predicate;
  unsigned threads = 1;
};

struct CensusClass {
  std::vector<CirculantGraph> members;  // sorted; members.front() is the key
  std::vector<Int> t2_indices;
  Int graph_period = 0;
  Int group_order = 0;  // |members|
  bool equals_v = false;
};

struct CensusResult {
  Int n = 0;
  Int m = 0;
  std::vector<CensusClass> classes;  // ordered by least member
  std::uint64_t candidates_total = 0;     // canonical sets of the requested sizes
  std::uint64_t candidates_examined = 0;
  std::uint64_t anchored = 0;             // examined sets with a jump divisible by m
  std::uint64_t singleton_count = 0;      // anchored sets with |T2| = 1
  std::uint64_t equals_v_count = 0;       // classes with T2 = V
  bool budget_exceeded = false;           // enumeration stopped at max_candidates
};

/// Enumerates canonical connection sets of C_n in the configured size range
/// (sizes ascending, lexicographic within a size) and reports each Type-2
/// class with more than one member once, keyed by its least member. When the
/// space exceeds max_candidates the first max_candidates sets are processed
/// and budget_exceeded is set. `on_class` sees classes in report order.
CensusResult census(Int n, Int m, const CensusConfig& config,
                    const std::function<void(const CensusClass&)>& on_class = {});

/// Number of canonical k-subsets of [1, n/2], saturating at UINT64_MAX.
std::uint64_t canonical_set_count(Int n, std::size_t k);

}  // namespace circulant
