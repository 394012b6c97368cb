#pragma once

// The rotation transform theta_{n,m,t}: x = qm + j  ->  x + j t m (mod n),
// its action on circulant graphs, and per-shift classification of the image.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

struct ThetaParams {
  Int n = 0;
  Int m = 0;
  Int t = 0;

  /// Requires m > 1, m^3 | n and 0 <= t < n/m; throws InvalidThetaParams.
  /// The anchor-jump condition depends on the graph and is checked by
  /// theta_validity.
  static ThetaParams make(Int n, Int m, Int t);

  /// n/m, the number of distinct shifts.
  Int modulus() const noexcept { return n / m; }
};

enum class ThetaIssue {
  MTooSmall,       // m <= 1
  NoDivisorCubed,  // m^3 does not divide n
  NoAnchorJump,    // no jump of R is divisible by m
};

std::string_view to_string(ThetaIssue issue);

struct ThetaValidity {
  Int n = 0;
  Int m = 0;
  std::vector<ThetaIssue> issues;

  bool valid() const noexcept { return issues.empty(); }
  std::string describe() const;
};

/// Admissibility of m for C_n(R): m > 1, m^3 | n and some r in R with m | r.
ThetaValidity theta_validity(Int n, Int m, const JumpSet& r);

/// Every m admissible for R, ascending.
std::vector<Int> admissible_moduli(const JumpSet& r);

/// Throws InvalidThetaParams with the reasons when (n, m) is not admissible.
void require_admissible(Int n, Int m, const JumpSet& r);

Int theta_vertex(const ThetaParams& p, Int x);

/// Image of the edge set of g under theta_vertex. Requires p.n == g.order().
LabeledGraph theta_image(const ThetaParams& p, const CirculantGraph& g);

/// Image of an arbitrary labelled graph on Z_n under theta_vertex.
LabeledGraph theta_image(const ThetaParams& p, const LabeledGraph& h);

/// The connection set S with h = C_n(S) exactly, if there is one. The
/// candidate is read off vertex 0's neighbourhood and then checked against
/// every edge of h.
std::optional<JumpSet> detect_circulant(const LabeledGraph& h);

/// Necessary condition only: vertex 0's neighbourhood is closed under
/// v -> n - v.
bool zero_neighborhood_symmetric(const LabeledGraph& h);

enum class Verdict {
  NonCirculant,
  Identity,
  Type1,
  Type2,
  /// Circulant image, not a unit multiple of R, but |R| < 3 so it does not
  /// qualify as Type-2. Never observed in practice; kept so the sweep stays
  /// total.
  Untyped,
};

std::string_view to_string(Verdict v);

struct TClassification {
  Int t = 0;
  Verdict verdict = Verdict::NonCirculant;
  std::optional<JumpSet> image;  // absent iff NonCirculant
  std::vector<Int> witnesses;    // units x with xR = image, for Type1
  /// theta_vertex applied to each value of R ∪ (n - R), in ascending order of
  /// the source value; the per-jump columns of the printed tables.
  std::vector<Int> transformed;
  /// Outcome of zero_neighborhood_symmetric on the image.
  bool neighborhood_symmetric = false;
  /// fingerprint() of the image edge set.
  std::uint64_t image_fingerprint = 0;
};

/// Classifies theta_{n,m,t}(g) as NonCirculant / Identity / Type1 / Type2.
/// Requires (n, m) admissible for g.
TClassification classify_t(const ThetaParams& p, const CirculantGraph& g);

/// Same as classify_t without the anchor-jump requirement; used where the
/// transform is applied to a graph that has no jump divisible by m.
TClassification classify_transform(const ThetaParams& p, const CirculantGraph& g);

/// One row per t = 0 .. n/m - 1, ordered by t.
std::vector<TClassification> classification_table(Int n, Int m, const CirculantGraph& g,
                                                  unsigned threads = 1);

}  // namespace circulant
