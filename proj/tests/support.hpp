#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; everything is done by brute force over Z_n.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace ref {

using Int = std::int64_t;
using Jumps = std::vector<Int>;
using EdgeSet = std::set<std::pair<Int, Int>>;

inline Int residue(Int v, Int n) { return ((v % n) + n) % n; }

/// Folded, sorted, distinct jumps; nullopt if some value is 0 mod n.
inline std::optional<Jumps> reduce(Int n, const Jumps& raw) {
  std::set<Int> out;
  for (Int v : raw) {
    const Int r = residue(v, n);
    if (r == 0) return std::nullopt;
    out.insert(std::min(r, n - r));
  }
  return Jumps(out.begin(), out.end());
}

inline EdgeSet edges(Int n, const Jumps& jumps) {
  EdgeSet e;
  for (Int a = 0; a < n; ++a) {
    for (Int b = a + 1; b < n; ++b) {
      const Int d = std::min(b - a, n - (b - a));
      if (std::find(jumps.begin(), jumps.end(), d) != jumps.end()) e.insert({a, b});
    }
  }
  return e;
}

inline Int theta(Int n, Int m, Int t, Int x) { return residue(x + (x % m) * t * m, n); }

inline EdgeSet theta_edges(Int n, Int m, Int t, const EdgeSet& in) {
  EdgeSet out;
  for (auto [a, b] : in) {
    Int u = theta(n, m, t, a);
    Int v = theta(n, m, t, b);
    if (u > v) std::swap(u, v);
    out.insert({u, v});
  }
  return out;
}

/// A graph on Z_n is circulant iff x -> x+1 is an automorphism; then the
/// connection set is read off vertex 0.
inline std::optional<Jumps> circulant_jumps(Int n, const EdgeSet& e) {
  for (auto [a, b] : e) {
    Int u = (a + 1) % n;
    Int v = (b + 1) % n;
    if (u > v) std::swap(u, v);
    if (!e.count({u, v})) return std::nullopt;
  }
  std::set<Int> s;
  for (auto [a, b] : e) {
    if (a == 0) s.insert(std::min(b, n - b));
  }
  return Jumps(s.begin(), s.end());
}

inline std::vector<Int> units(Int n) {
  std::vector<Int> u;
  for (Int x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) u.push_back(x);
  }
  return u;
}

inline Jumps multiply(Int n, Int x, const Jumps& r) {
  Jumps raw;
  for (Int v : r) raw.push_back(v * x);
  return *reduce(n, raw);
}

inline std::set<Jumps> type1_members(Int n, const Jumps& r) {
  std::set<Jumps> out;
  for (Int x : units(n)) out.insert(multiply(n, x, r));
  return out;
}

/// Random canonical jump set of the given size from [1, n/2].
inline Jumps random_jumps(std::mt19937_64& rng, Int n, std::size_t size) {
  std::vector<Int> pool(static_cast<std::size_t>(n / 2));
  std::iota(pool.begin(), pool.end(), Int{1});
  std::shuffle(pool.begin(), pool.end(), rng);
  Jumps r(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(r.begin(), r.end());
  return r;
}

/// All k-subsets of [1, n/2] in lexicographic order.
inline std::vector<Jumps> all_jump_sets(Int n, std::size_t k) {
  std::vector<Jumps> out;
  Jumps cur;
  auto rec = [&](auto&& self, Int start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Int v = start; v <= n / 2; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace ref
