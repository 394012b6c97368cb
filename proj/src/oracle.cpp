#include "circulant/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace circulant {

std::size_t GcdSignature::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries) sum += e.second;
  return sum;
}

GcdSignature gcd_signature(const CirculantGraph& g) {
  std::map<Int, std::size_t> counts;
  for (Int r : g.jumps()) ++counts[gcd(g.order(), r)];
  GcdSignature sig;
  sig.entries.assign(counts.begin(), counts.end());
  return sig;
}

bool gcd_signature_check(const CirculantGraph& g, const CirculantGraph& h) {
  if (g.order() != h.order()) {
    throw Error(ErrorKind::OrderMismatch, g.to_string() + " vs " + h.to_string());
  }
  return gcd_signature(g) == gcd_signature(h);
}

std::vector<double> spectral_fingerprint(const CirculantGraph& g) {
  const Int n = g.order();
  const double scale = std::pow(10.0, kSpectralDigits);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (Int j = 0; j < n; ++j) {
    double lambda = 0.0;
    for (Int r : g.jumps()) {
      // Reduce j*r first so the angle stays small and exact.
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(mod(j * r, n)) / static_cast<double>(n);
      lambda += 2.0 * std::cos(angle);
      if (2 * r == n) lambda -= std::cos(angle);
    }
    double rounded = std::round(lambda * scale) / scale;
    if (rounded == 0.0) rounded = 0.0;  // drop negative zero
    values.push_back(rounded);
  }
  std::sort(values.begin(), values.end());
  return values;
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b,
                   double tolerance) {
  if (a.size() != b.size()) return false;
  // Values straddling a rounding boundary can differ by one unit of the last
  // digit, hence the extra slack over the tolerance.
  const double slack = tolerance + std::pow(10.0, -kSpectralDigits);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > slack) return false;
  }
  return true;
}

bool verify_permutation(const LabeledGraph& a, const LabeledGraph& b,
                        const std::vector<Int>& perm) {
  const Int n = a.order();
  if (b.order() != n || static_cast<Int>(perm.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (Int v : perm) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (a.edge_count() != b.edge_count()) return false;
  for (const auto& [x, y] : a.edges()) {
    if (!b.has_edge(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)])) {
      return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const CirculantGraph& g) {
  const Int n = g.order();
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Int x = 0; x < n; ++x) {
    for (Int r : g.jumps()) {
      adj[static_cast<std::size_t>(x)] |= Mask{1} << mod(x + r, n);
      adj[static_cast<std::size_t>(x)] |= Mask{1} << mod(x - r, n);
    }
  }
  return adj;
}

class Search {
 public:
  Search(const CirculantGraph& g, const CirculantGraph& h, std::uint64_t budget)
      : n_(g.order()), a_(adjacency_masks(g)), b_(adjacency_masks(h)), budget_(budget) {
    // Breadth-first order from 0 so most vertices have an already placed
    // neighbour, which restricts their candidates to that neighbour's image.
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (Int root = 0; root < n_; ++root) {
      if (seen[static_cast<std::size_t>(root)]) continue;
      seen[static_cast<std::size_t>(root)] = true;
      std::size_t head = order_.size();
      order_.push_back(root);
      parent_.push_back(-1);
      while (head < order_.size()) {
        const Int v = order_[head++];
        for (Int w = 0; w < n_; ++w) {
          if ((a_[static_cast<std::size_t>(v)] >> w & 1U) && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            order_.push_back(w);
            parent_.push_back(v);
          }
        }
      }
    }
    map_.assign(static_cast<std::size_t>(n_), -1);
  }

  bool run() {
    used_ = 0;
    return place(0);
  }
  const std::vector<Int>& mapping() const { return map_; }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (nodes_++ >= budget_) {
      throw Error(ErrorKind::BudgetExceeded, "isomorphism search exceeded its node budget");
    }
    const Int v = order_[depth];
    Mask candidates = ~used_ & (n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1);
    if (depth == 0) {
      candidates = 1;  // vertex 0 maps to 0
    } else if (parent_[depth] >= 0) {
      candidates &= b_[static_cast<std::size_t>(map_[static_cast<std::size_t>(parent_[depth])])];
    }
    for (Int c = 0; c < n_; ++c) {
      if (!(candidates >> c & 1U)) continue;
      if (!consistent(depth, v, c)) continue;
      map_[static_cast<std::size_t>(v)] = c;
      used_ |= Mask{1} << c;
      if (place(depth + 1)) return true;
      used_ &= ~(Mask{1} << c);
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  bool consistent(std::size_t depth, Int v, Int c) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Int u = order_[i];
      const bool in_a = a_[static_cast<std::size_t>(v)] >> u & 1U;
      const bool in_b = b_[static_cast<std::size_t>(c)] >> map_[static_cast<std::size_t>(u)] & 1U;
      if (in_a != in_b) return false;
    }
    return true;
  }

  Int n_;
  std::vector<Mask> a_, b_;
  std::vector<Int> order_, parent_, map_;
  Mask used_ = 0;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<IsoWitness> brute_force_isomorphic(const CirculantGraph& g,
                                                 const CirculantGraph& h,
                                                 const BruteForceConfig& config) {
  if (g.order() != h.order()) {
    throw Error(ErrorKind::OrderMismatch, g.to_string() + " vs " + h.to_string());
  }
  const Int n = g.order();
  if (n > config.max_order || n > 32) {
    throw Error(ErrorKind::BudgetExceeded,
                "order " + std::to_string(n) + " is above the brute-force cap");
  }
  if (g.degree() != h.degree()) return std::nullopt;

  Search search(g, h, config.node_budget);
  if (!search.run()) return std::nullopt;
  IsoWitness w{search.mapping(), false};
  w.verified = verify_permutation(edge_set(g), edge_set(h), w.permutation);
  if (!w.verified) {
    throw Error(ErrorKind::VerificationFailure, "search produced an invalid witness");
  }
  return w;
}

IsoWitness verify_theta_witness(Int n, Int m, Int t, const CirculantGraph& g,
                                const CirculantGraph& h) {
  if (m <= 0 || n % m != 0) {
    throw Error(ErrorKind::InvalidThetaParams, "m must divide n");
  }
  if (g.order() != n || h.order() != n) {
    throw Error(ErrorKind::OrderMismatch, "graph orders differ from n");
  }
  IsoWitness w;
  w.permutation.resize(static_cast<std::size_t>(n));
  for (Int x = 0; x < n; ++x) {
    const Int j = x % m;
    w.permutation[static_cast<std::size_t>(x)] = mod(x + mod(j * t, n) * m, n);
  }
  w.verified = verify_permutation(edge_set(g), edge_set(h), w.permutation);
  if (!w.verified) {
    throw Error(ErrorKind::VerificationFailure,
                "theta(" + std::to_string(n) + "," + std::to_string(m) + "," +
                    std::to_string(t) + ") does not map " + g.to_string() + " onto " +
                    h.to_string());
  }
  return w;
}

}  // namespace circulant
