#include "circulant/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "circulant/oracle.hpp"
#include "circulant/parallel.hpp"
#include "circulant/theta.hpp"
#include "circulant/type1.hpp"

namespace circulant {

std::string_view to_string(FamilyClaim c) {
  switch (c) {
    case FamilyClaim::Type2: return "Type2";
    case FamilyClaim::Type1OrType2: return "Type1OrType2";
  }
  return "?";
}

std::string_view to_string(ResolvedClaim c) {
  switch (c) {
    case ResolvedClaim::Type2: return "Type2";
    case ResolvedClaim::Type1: return "Type1";
    case ResolvedClaim::Mixed: return "Mixed";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw Error(ErrorKind::InvalidFamilyParams, what);
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

Int list_gcd(const std::vector<Int>& values) {
  Int g = 0;
  for (Int v : values) g = gcd(g, v);
  return g;
}

void check_p_list(const std::vector<Int>& p_list) {
  if (p_list.empty()) bad_params("p_list must not be empty");
  for (Int v : p_list) {
    if (v <= 0) bad_params("p_list entries must be positive");
  }
}

// All sets must have the same size and gcd signature once folded.
void check_shape(const FamilyInstance& f) {
  const auto size = f.sets.front().size();
  const auto sig = gcd_signature(CirculantGraph(f.sets.front()));
  for (const auto& s : f.sets) {
    if (s.size() != size || !(gcd_signature(CirculantGraph(s)) == sig)) {
      throw Error(ErrorKind::DegenerateFamily,
                  f.kind + ": generated sets collapse to different shapes after folding");
    }
  }
  if (std::set<JumpSet>(f.sets.begin(), f.sets.end()).size() != f.sets.size()) {
    throw Error(ErrorKind::DegenerateFamily, f.kind + ": generated sets coincide");
  }
}

// R_i = {d_i} ∪ {k p^2 n ± d_i : k = 1..p-1} ∪ anchors, i = 1..p, with the
// order N = p^3 n. R_i -> R_{i+j} under theta at t = j n.
FamilyInstance prime_family(std::string kind, Int p, Int n,
                            const std::function<Int(Int)>& d,
                            const std::vector<Int>& anchors, FamilyClaim claim) {
  FamilyInstance f;
  f.kind = std::move(kind);
  f.order = n * p * p * p;
  f.m = p;
  f.claim = claim;
  for (Int i = 1; i <= p; ++i) {
    const Int di = d(i);
    std::vector<Int> raw{di};
    for (Int k = 1; k < p; ++k) {
      raw.push_back(k * p * p * n - di);
      raw.push_back(k * p * p * n + di);
    }
    raw.insert(raw.end(), anchors.begin(), anchors.end());
    f.sets.push_back(JumpSet::reduce(f.order, raw));
  }
  for (Int j = 1; j < p; ++j) {
    for (Int i = 0; i < p; ++i) {
      f.relations.push_back({j * n, static_cast<std::size_t>(i),
                             static_cast<std::size_t>((i + j) % p)});
    }
  }
  check_shape(f);
  return f;
}

FamilyInstance small_prime_general(std::string kind, Int p, Int n,
                                   const std::vector<Int>& p_list, FamilyClaim claim) {
  if (n < 1) bad_params("n must be positive");
  check_p_list(p_list);
  std::vector<Int> anchors;
  for (Int v : p_list) anchors.push_back(p * v);
  auto f = prime_family(std::move(kind), p, n, [&](Int i) { return p * n * (i - 1) + 1; },
                        anchors, claim);
  if (list_gcd(p_list) != 1) {
    f.notes.push_back("gcd(p_list) = " + std::to_string(list_gcd(p_list)) +
                      " is outside the construction's hypothesis gcd = 1");
  }
  return f;
}

}  // namespace

FamilyInstance family_m2_general(Int n, Int s, const std::vector<Int>& p_list, Int y) {
  if (n < 2) bad_params("n must be at least 2");
  const Int odd = 2 * s - 1;
  if (odd < 1 || odd > 2 * n - 1) bad_params("2s-1 must lie in [1, 2n-1]");
  if (n == odd) {
    throw Error(ErrorKind::DegenerateFamily,
                "n = 2s-1: the two circulant graphs are the same");
  }
  check_p_list(p_list);
  if (list_gcd(p_list) != 1) bad_params("gcd(p_list) must be 1");
  const Int order = 8 * n;
  std::vector<Int> r_raw{odd, 4 * n - odd};
  std::vector<Int> s_raw{2 * n - odd, 2 * n + odd};
  for (Int v : p_list) {
    r_raw.push_back(2 * v);
    s_raw.push_back(2 * v);
  }
  FamilyInstance f;
  f.kind = "m2_general";
  f.order = order;
  f.m = 2;
  f.claim = FamilyClaim::Type1OrType2;
  f.sets = {JumpSet::reduce(order, r_raw), JumpSet::reduce(order, s_raw)};
  if (gcd(4 * n, y) != 1) bad_params("gcd(4n, y) must be 1");
  const Int shared = fold(2 * y, order);
  if (shared == 0 || !f.sets[0].contains(shared) || !f.sets[1].contains(shared)) {
    bad_params("2y must be a jump of both R and S");
  }
  f.relations = {{n, 0, 1}, {n, 1, 0}, {3 * n, 0, 1}, {3 * n, 1, 0},
                 {2 * n, 0, 0}, {2 * n, 1, 1}};
  check_shape(f);
  return f;
}

FamilyInstance family_m2(Int n, Int s) {
  auto f = family_m2_general(n, s, {1}, 1);
  f.kind = "m2";
  f.claim = FamilyClaim::Type2;
  f.relations = {{n, 0, 1}, {n, 1, 0}, {3 * n, 0, 1}, {3 * n, 1, 0}};
  return f;
}

FamilyInstance family_m3(Int n) {
  return small_prime_general("m3", 3, n, {1}, FamilyClaim::Type2);
}
FamilyInstance family_m5(Int n) {
  return small_prime_general("m5", 5, n, {1}, FamilyClaim::Type2);
}
FamilyInstance family_m7(Int n) {
  return small_prime_general("m7", 7, n, {1}, FamilyClaim::Type2);
}
FamilyInstance family_m3_general(Int n, const std::vector<Int>& p_list) {
  return small_prime_general("m3_general", 3, n, p_list, FamilyClaim::Type1OrType2);
}
FamilyInstance family_m5_general(Int n, const std::vector<Int>& p_list) {
  return small_prime_general("m5_general", 5, n, p_list, FamilyClaim::Type1OrType2);
}
FamilyInstance family_m7_general(Int n, const std::vector<Int>& p_list) {
  return small_prime_general("m7_general", 7, n, p_list, FamilyClaim::Type1OrType2);
}

FamilyInstance family_general_p(const GeneralPParams& q) {
  if (q.p < 3 || !is_prime(q.p)) bad_params("p must be an odd prime");
  if (q.n < 1) bad_params("n must be positive");
  if (q.x < 1 || q.x > q.p - 1) bad_params("x must lie in [1, p-1]");
  if (q.y < 0 || q.y > q.n * q.p - 1) bad_params("y must lie in [0, np-1]");
  const Int first = q.x + q.y * q.p;
  if (first < 1 || first > q.n * q.p * q.p - 1) bad_params("x + yp must lie in [1, np^2-1]");
  return prime_family("general_p", q.p, q.n, [&](Int i) { return q.d(i); }, {q.p},
                      FamilyClaim::Type2);
}

FamilyReport family_verify(const FamilyInstance& f, const FamilyVerifyConfig& config) {
  if (f.order > config.max_order) {
    throw Error(ErrorKind::BudgetExceeded,
                "family order " + std::to_string(f.order) + " exceeds the verify budget");
  }
  FamilyReport rep;
  const Int modulus = f.order / f.m;
  std::vector<CirculantGraph> graphs;
  for (const auto& s : f.sets) graphs.emplace_back(s);

  rep.relations.resize(f.relations.size());
  detail::parallel_for(f.relations.size(), config.threads, [&](std::size_t k) {
    const auto& rel = f.relations[k];
    const auto p = ThetaParams::make(f.order, f.m, mod(rel.t, modulus));
    rep.relations[k] = {rel, theta_image(p, graphs[rel.from]) == edge_set(graphs[rel.to])};
  });
  for (const auto& rc : rep.relations) {
    if (!rc.holds) {
      throw Error(ErrorKind::VerificationFailure,
                  f.kind + ": theta relation fails at t = " + std::to_string(rc.relation.t) +
                      ", R_" + std::to_string(rc.relation.from + 1) + " -> R_" +
                      std::to_string(rc.relation.to + 1));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<Int>> witnesses(pairs.size());
  detail::parallel_for(pairs.size(), config.threads, [&](std::size_t k) {
    witnesses[k] = type1_witnesses(graphs[pairs[k].first], graphs[pairs[k].second]);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!witnesses[k].empty()) {
      rep.type1_pairs.push_back({pairs[k].first, pairs[k].second, witnesses[k]});
    }
  }
  if (rep.type1_pairs.empty()) {
    rep.resolved = ResolvedClaim::Type2;
  } else if (rep.type1_pairs.size() == pairs.size()) {
    rep.resolved = ResolvedClaim::Type1;
  } else {
    rep.resolved = ResolvedClaim::Mixed;
  }

  const auto t2 = t2_set(f.order, f.m, graphs.front(), config.threads);
  rep.t2_members = t2.members;
  std::vector<CirculantGraph> expected = graphs;
  std::sort(expected.begin(), expected.end());
  rep.t2_matches_sets = rep.t2_members == expected;
  const auto grp = t2_group(t2);
  rep.group_order = grp.quotient_order();
  rep.group_generator = grp.generator;

  if (f.claim == FamilyClaim::Type2) {
    if (!rep.type1_pairs.empty()) {
      const auto& pw = rep.type1_pairs.front();
      throw Error(ErrorKind::VerificationFailure,
                  f.kind + ": R_" + std::to_string(pw.i + 1) + " and R_" +
                      std::to_string(pw.j + 1) + " are Type-1 related (x = " +
                      std::to_string(pw.witnesses.front()) + ")");
    }
    if (!rep.t2_matches_sets || rep.group_order != static_cast<Int>(graphs.size())) {
      throw Error(ErrorKind::VerificationFailure,
                  f.kind + ": Type-2 set of R_1 differs from the generated sets");
    }
  }
  return rep;
}

}  // namespace circulant
