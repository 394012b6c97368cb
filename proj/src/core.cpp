#include "circulant/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace circulant {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

JumpSet JumpSet::reduce(Int n, std::span<const Int> raw) {
  if (n < 3) {
    throw Error(ErrorKind::InvalidOrder,
                "graph order must be at least 3, got " + std::to_string(n));
  }
  if (raw.empty()) {
    throw Error(ErrorKind::EmptyConnectionSet, "connection set is empty");
  }
  std::vector<Int> jumps;
  jumps.reserve(raw.size());
  for (Int v : raw) {
    const Int folded = fold(v, n);
    if (folded == 0) {
      throw Error(ErrorKind::InvalidJump,
                  "jump " + std::to_string(v) + " is 0 mod " + std::to_string(n) +
                      " (self-loop)");
    }
    jumps.push_back(folded);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return JumpSet(n, std::move(jumps));
}

bool JumpSet::contains(Int jump) const {
  return std::binary_search(jumps_.begin(), jumps_.end(), jump);
}

bool JumpSet::has_half_jump() const {
  return order_ % 2 == 0 && !jumps_.empty() && jumps_.back() == order_ / 2;
}

bool DirectedJumpSet::contains(Int v) const {
  return std::binary_search(values.begin(), values.end(), v);
}

LabeledGraph::LabeledGraph(Int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.first, e.second);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool LabeledGraph::has_edge(Int a, Int b) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<Int> LabeledGraph::neighbors(Int v) const {
  std::vector<Int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CirculantGraph::adjacent(Int a, Int b) const {
  const Int d = fold(a - b, order());
  return d != 0 && jumps_.contains(d);
}

std::size_t CirculantGraph::degree() const {
  return 2 * jumps_.size() - (jumps_.has_half_jump() ? 1 : 0);
}

std::string CirculantGraph::to_string() const {
  std::ostringstream os;
  os << "C_" << order() << "(";
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (i) os << ",";
    os << jumps_.jumps()[i];
  }
  os << ")";
  return os.str();
}

CirculantGraph make_circulant(Int n, std::span<const Int> raw) {
  return CirculantGraph(JumpSet::reduce(n, raw));
}

DirectedJumpSet symmetric_closure(const CirculantGraph& g) {
  const Int n = g.order();
  DirectedJumpSet out{n, {}};
  for (Int r : g.jumps()) {
    out.values.push_back(r);
    if (2 * r != n) out.values.push_back(n - r);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::uint64_t fingerprint(const LabeledGraph& h) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&](Int v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      hash ^= (u >> (8 * i)) & 0xffU;
      hash *= 1099511628211ULL;
    }
  };
  mix(h.order());
  for (const auto& [a, b] : h.edges()) {
    mix(a);
    mix(b);
  }
  return hash;
}

LabeledGraph edge_set(const CirculantGraph& g) {
  const Int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(expected_edge_count(g.jumps()));
  for (Int s : g.jumps()) {
    // the n/2 jump pairs x with x + n/2; take each such edge once
    const Int starts = (2 * s == n) ? n / 2 : n;
    for (Int x = 0; x < starts; ++x) edges.push_back(make_edge(x, (x + s) % n));
  }
  return LabeledGraph(n, std::move(edges));
}

std::size_t expected_edge_count(const JumpSet& r) {
  const auto n = static_cast<std::size_t>(r.order());
  return n * r.size() - (r.has_half_jump() ? n / 2 : 0);
}

CycleStats period_cycle_stats(Int n, Int r) {
  if (n < 2 || r < 1 || r >= n) {
    throw Error(ErrorKind::InvalidJump, "period must lie in [1, n-1]");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Int cycles = 0;
  Int length = 0;
  for (Int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Int len = 0;
    Int x = start;
    do {
      seen[x] = true;
      x = (x + r) % n;
      ++len;
    } while (x != start);
    ++cycles;
    length = len;
  }
  return CycleStats{r, gcd(n, r), length, cycles};
}

CirculantGraph scale(Int k, const CirculantGraph& g) {
  if (k < 1) throw Error(ErrorKind::InvalidOrder, "scale factor must be >= 1");
  std::vector<Int> raw;
  for (Int r : g.jumps()) raw.push_back(k * r);
  return make_circulant(k * g.order(), raw);
}

}  // namespace circulant
