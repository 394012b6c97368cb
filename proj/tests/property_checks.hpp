#pragma once

// Randomised and exhaustive invariant checks shared by the property tests and
// the acceptance runner. Each check returns the number of cases run and the
// first counterexample, if any.

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "circulant/groups.hpp"
#include "circulant/oracle.hpp"
#include "circulant/type1.hpp"
#include "support.hpp"

namespace props {

using circulant::Int;

struct Outcome {
  std::size_t cases = 0;
  std::optional<std::string> failure;
};

inline constexpr std::size_t kCases = 1000;
inline constexpr std::uint64_t kSeed = 0x5eed'c1c0'ba5eULL;

struct ThetaCase {
  Int n = 0;
  Int m = 0;
  Int t = 0;
  ref::Jumps jumps;

  circulant::CirculantGraph graph() const { return circulant::make_circulant(n, jumps); }
  std::string describe() const {
    std::ostringstream os;
    os << "n=" << n << " m=" << m << " t=" << t << " R=";
    for (Int v : jumps) os << v << ",";
    return os.str();
  }
};

/// Random admissible (n, m, t, R): m in {2, 3, 5}, m^3 | n, R holds a jump
/// divisible by m.
inline ThetaCase random_theta_case(std::mt19937_64& rng) {
  const Int ms[] = {2, 2, 3, 3, 5};
  ThetaCase c;
  c.m = ms[std::uniform_int_distribution<int>(0, 4)(rng)];
  const Int max_k = c.m == 2 ? 8 : (c.m == 3 ? 3 : 1);
  c.n = c.m * c.m * c.m * std::uniform_int_distribution<Int>(1, max_k)(rng);
  const auto size = std::uniform_int_distribution<std::size_t>(
      1, std::min<std::size_t>(6, static_cast<std::size_t>(c.n / 2)))(rng);
  c.jumps = ref::random_jumps(rng, c.n, size);
  if (std::none_of(c.jumps.begin(), c.jumps.end(), [&](Int v) { return v % c.m == 0; })) {
    c.jumps[0] = c.m * std::uniform_int_distribution<Int>(1, (c.n / 2) / c.m)(rng);
    c.jumps = *ref::reduce(c.n, c.jumps);
  }
  c.t = std::uniform_int_distribution<Int>(0, c.n / c.m - 1)(rng);
  return c;
}

inline Outcome theta_bijective(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto c = random_theta_case(rng);
    const auto p = circulant::ThetaParams::make(c.n, c.m, c.t);
    std::vector<bool> hit(static_cast<std::size_t>(c.n), false);
    for (Int x = 0; x < c.n; ++x) {
      const Int y = circulant::theta_vertex(p, x);
      if (y != ref::theta(c.n, c.m, c.t, x) || hit[static_cast<std::size_t>(y)]) {
        o.failure = "not a bijection: " + c.describe();
        return o;
      }
      hit[static_cast<std::size_t>(y)] = true;
    }
  }
  return o;
}

inline Outcome theta_composition(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed + 1);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto c = random_theta_case(rng);
    const Int modulus = c.n / c.m;
    const Int u = std::uniform_int_distribution<Int>(0, modulus - 1)(rng);
    const auto g = c.graph();
    const auto e = ref::edges(c.n, c.jumps);
    const auto composed = ref::theta_edges(c.n, c.m, c.t, ref::theta_edges(c.n, c.m, u, e));
    const auto direct = ref::theta_edges(c.n, c.m, (c.t + u) % modulus, e);
    const auto lib = circulant::theta_image(circulant::ThetaParams::make(c.n, c.m, c.t), g).edges();
    const bool lib_ok = ref::EdgeSet(lib.begin(), lib.end()) == ref::theta_edges(c.n, c.m, c.t, e);
    if (!circulant::orbit_law_holds(g, c.m, c.t, u) || composed != direct || !lib_ok) {
      o.failure = "composition fails: " + c.describe() + " t'=" + std::to_string(u);
      return o;
    }
  }
  return o;
}

inline Outcome theta_inverse(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed + 2);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto c = random_theta_case(rng);
    const Int modulus = c.n / c.m;
    const auto g = c.graph();
    const auto forward = circulant::theta_image(circulant::ThetaParams::make(c.n, c.m, c.t), g);
    const auto back = circulant::theta_image(
        circulant::ThetaParams::make(c.n, c.m, (modulus - c.t) % modulus), forward);
    if (!(back == circulant::edge_set(g))) {
      o.failure = "inverse fails: " + c.describe();
      return o;
    }
  }
  return o;
}

inline bool closed_subgroup(const std::vector<Int>& s, Int modulus) {
  if (s.empty() || s.front() != 0) return false;
  for (Int a : s) {
    for (Int b : s) {
      if (!std::binary_search(s.begin(), s.end(), (a + b) % modulus)) return false;
    }
    if (!std::binary_search(s.begin(), s.end(), (modulus - a) % modulus)) return false;
  }
  return true;
}

inline Outcome index_subgroups(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed + 3);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const auto c = random_theta_case(rng);
    const auto v = circulant::v_set(c.n, c.m, c.graph());
    const auto s = circulant::t2_set(v);
    std::vector<Int> identity;
    for (const auto& row : v.rows) {
      if (row.verdict == circulant::Verdict::Identity) identity.push_back(row.t);
    }
    std::vector<Int> multiples;
    for (Int t = 0; t < v.modulus; t += v.graph_period) multiples.push_back(t);
    const bool ok =
        closed_subgroup(identity, v.modulus) && closed_subgroup(s.t2_indices, v.modulus) &&
        identity == multiples &&
        std::includes(s.t2_indices.begin(), s.t2_indices.end(), identity.begin(), identity.end()) &&
        s.t2_indices.size() == identity.size() * s.size() &&
        (s.t2_indices.size() < 2 || v.modulus % s.t2_indices[1] == 0);
    if (!ok) {
      o.failure = "index sets are not nested subgroups: " + c.describe();
      return o;
    }
    try {
      circulant::t2_group(s);
    } catch (const circulant::Error& e) {
      o.failure = std::string("t2_group rejects ") + c.describe() + ": " + e.what();
      return o;
    }
  }
  return o;
}

/// |T1| divides |units| and the witness lists partition the units.
inline Outcome type1_cosets(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed + 4);
  Outcome o;
  for (; o.cases < cases; ++o.cases) {
    const Int n = std::uniform_int_distribution<Int>(3, 160)(rng);
    const auto size = std::uniform_int_distribution<std::size_t>(
        1, std::min<std::size_t>(5, static_cast<std::size_t>(n / 2)))(rng);
    const auto r = ref::random_jumps(rng, n, size);
    const auto s = circulant::type1_set(circulant::make_circulant(n, r));
    const auto phi = ref::units(n);
    std::vector<Int> all;
    bool ok = phi.size() % s.size() == 0;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      ok = s.witnesses[i].size() == phi.size() / s.size();
      for (Int x : s.witnesses[i]) {
        ok = ok && ref::multiply(n, x, r) == s.members[i].jumps().jumps();
        all.push_back(x);
      }
    }
    std::sort(all.begin(), all.end());
    if (!ok || all != phi) {
      o.failure = "witness cosets do not partition the units for n=" + std::to_string(n);
      return o;
    }
  }
  return o;
}

/// Every certified isomorphic pair (theta witness or unit multiplier) passes
/// the gcd-signature and spectral filters.
inline Outcome certified_pairs_pass_filters(std::size_t cases = kCases) {
  std::mt19937_64 rng(kSeed + 5);
  Outcome o;
  while (o.cases < cases) {
    const auto c = random_theta_case(rng);
    const auto g = c.graph();
    const auto eig = circulant::spectral_fingerprint(g);
    const auto check = [&](const circulant::CirculantGraph& h, const std::string& how) {
      ++o.cases;
      if (!circulant::gcd_signature_check(g, h) ||
          !circulant::spectra_match(eig, circulant::spectral_fingerprint(h))) {
        o.failure = "filters reject certified pair (" + how + "): " + c.describe();
      }
    };
    const auto row = circulant::classify_t(circulant::ThetaParams::make(c.n, c.m, c.t), g);
    if (row.image) {
      const circulant::CirculantGraph h(*row.image);
      try {
        circulant::verify_theta_witness(c.n, c.m, c.t, g, h);
      } catch (const circulant::Error&) {
        o.failure = std::string("theta witness fails: ") + c.describe();
        return o;
      }
      check(h, "theta");
      if (o.failure) return o;
    }
    const auto phi = ref::units(c.n);
    const Int x = phi[std::uniform_int_distribution<std::size_t>(0, phi.size() - 1)(rng)];
    const auto h = circulant::make_circulant(c.n, ref::multiply(c.n, x, c.jumps));
    std::vector<Int> perm(static_cast<std::size_t>(c.n));
    for (Int v = 0; v < c.n; ++v) perm[static_cast<std::size_t>(v)] = (v * x) % c.n;
    if (!circulant::verify_permutation(circulant::edge_set(g), circulant::edge_set(h), perm)) {
      o.failure = "unit multiplier is not an isomorphism: " + c.describe();
      return o;
    }
    check(h, "unit multiplier");
    if (o.failure) return o;
  }
  return o;
}

/// Over every anchored set of the given sizes, T2 sets are equal or disjoint:
/// each set's T2 either equals its census class or is a singleton outside all
/// classes.
inline Outcome t2_equal_or_disjoint(Int n, Int m, std::size_t min_size, std::size_t max_size) {
  Outcome o;
  const auto res = circulant::census(n, m, {min_size, max_size});
  std::map<circulant::JumpSet, std::size_t> owner;
  for (std::size_t i = 0; i < res.classes.size(); ++i) {
    for (const auto& g : res.classes[i].members) {
      if (!owner.emplace(g.jumps(), i).second) {
        o.failure = "census classes overlap at " + g.to_string();
        return o;
      }
    }
  }
  for (std::size_t k = min_size; k <= max_size; ++k) {
    for (const auto& r : ref::all_jump_sets(n, k)) {
      if (std::none_of(r.begin(), r.end(), [&](Int v) { return v % m == 0; })) continue;
      ++o.cases;
      const auto g = circulant::make_circulant(n, r);
      const auto s = circulant::t2_set(n, m, g);
      const auto it = owner.find(g.jumps());
      const bool ok = it == owner.end() ? s.size() == 1
                                        : s.members == res.classes[it->second].members;
      if (!ok) {
        o.failure = "T2 sets neither equal nor disjoint at " + g.to_string();
        return o;
      }
    }
  }
  return o;
}

}  // namespace props
