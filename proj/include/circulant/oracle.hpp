#pragma once

// Independent evidence for isomorphism claims. Depends on core only; nothing
// here calls into the theta or groups code.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

/// Multiset {gcd(n, r) : r in R} as sorted (gcd, multiplicity) pairs.
struct GcdSignature {
  std::vector<std::pair<Int, std::size_t>> entries;

  std::size_t total() const;
  friend bool operator==(const GcdSignature&, const GcdSignature&) = default;
};

GcdSignature gcd_signature(const CirculantGraph& g);

/// Necessary condition for C_n(R) ≅ C_n(S). Throws OrderMismatch.
bool gcd_signature_check(const CirculantGraph& g, const CirculantGraph& h);

/// Eigenvalues are rounded to this many decimal digits.
inline constexpr int kSpectralDigits = 9;
/// Per-value tolerance when comparing rounded fingerprints.
inline constexpr double kSpectralTolerance = 1e-9;

/// Sorted eigenvalues sum_{s} cos(2 pi j s / n), j = 0..n-1, s over R ∪ (n-R),
/// rounded to kSpectralDigits.
std::vector<double> spectral_fingerprint(const CirculantGraph& g);

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b,
                   double tolerance = kSpectralTolerance);

struct IsoWitness {
  std::vector<Int> permutation;  // permutation[x] = image of x
  bool verified = false;
};

/// True when `perm` is a bijection of Z_n taking the edges of `a` exactly
/// onto the edges of `b`.
bool verify_permutation(const LabeledGraph& a, const LabeledGraph& b,
                        const std::vector<Int>& perm);

struct BruteForceConfig {
  Int max_order = 24;
  /// Maximum search nodes before giving up as inconclusive.
  std::uint64_t node_budget = 50'000'000;
};

/// Backtracking search for an isomorphism C_n(R) -> C_n(S) with vertex 0
/// fixed (circulants are vertex-transitive). Returns a verified witness, or
/// nullopt when none exists. Throws OrderMismatch, and BudgetExceeded when n
/// is above the cap or the node budget runs out.
std::optional<IsoWitness> brute_force_isomorphic(const CirculantGraph& g,
                                                 const CirculantGraph& h,
                                                 const BruteForceConfig& config = {});

/// Builds x = qm + j -> x + j t m (mod n) directly and checks it maps the edges
/// of g onto those of h. Throws VerificationFailure on any mismatch and
/// InvalidThetaParams when m does not divide n.
IsoWitness verify_theta_witness(Int n, Int m, Int t, const CirculantGraph& g,
                                const CirculantGraph& h);

}  // namespace circulant
