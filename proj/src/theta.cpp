#include "circulant/theta.hpp"

#include <algorithm>
#include <sstream>

#include "circulant/parallel.hpp"
#include "circulant/type1.hpp"

namespace circulant {

namespace {

bool cube_divides(Int m, Int n) {
  // m^3 | n with m^3 <= n, so no overflow for n in range
  if (m > n) return false;
  const Int m2 = m * m;
  if (m2 > n) return false;
  const Int m3 = m2 * m;
  return m3 <= n && n % m3 == 0;
}

}  // namespace

ThetaParams ThetaParams::make(Int n, Int m, Int t) {
  if (m <= 1) {
    throw Error(ErrorKind::InvalidThetaParams, "m must exceed 1, got " + std::to_string(m));
  }
  if (!cube_divides(m, n)) {
    throw Error(ErrorKind::InvalidThetaParams,
                std::to_string(m) + "^3 does not divide " + std::to_string(n));
  }
  if (t < 0 || t >= n / m) {
    throw Error(ErrorKind::InvalidThetaParams, "shift " + std::to_string(t) +
                                                   " outside [0, " + std::to_string(n / m - 1) +
                                                   "]");
  }
  return ThetaParams{n, m, t};
}

std::string_view to_string(ThetaIssue issue) {
  switch (issue) {
    case ThetaIssue::MTooSmall: return "MTooSmall";
    case ThetaIssue::NoDivisorCubed: return "NoDivisorCubed";
    case ThetaIssue::NoAnchorJump: return "NoAnchorJump";
  }
  return "Unknown";
}

std::string ThetaValidity::describe() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os << "m=" << m << " not admissible for n=" << n << ":";
  for (std::size_t i = 0; i < issues.size(); ++i) {
    os << (i ? "; " : " ");
    switch (issues[i]) {
      case ThetaIssue::MTooSmall: os << "m must exceed 1"; break;
      case ThetaIssue::NoDivisorCubed: os << "m^3 does not divide n"; break;
      case ThetaIssue::NoAnchorJump: os << "no jump divisible by m"; break;
    }
  }
  return os.str();
}

ThetaValidity theta_validity(Int n, Int m, const JumpSet& r) {
  ThetaValidity out{n, m, {}};
  if (m <= 1) {
    out.issues.push_back(ThetaIssue::MTooSmall);
  } else if (!cube_divides(m, n)) {
    out.issues.push_back(ThetaIssue::NoDivisorCubed);
  }
  // m | n, so m | gcd(n, r) reduces to m | r
  const bool anchored =
      m > 1 && std::any_of(r.begin(), r.end(), [m](Int j) { return j % m == 0; });
  if (!anchored) out.issues.push_back(ThetaIssue::NoAnchorJump);
  return out;
}

std::vector<Int> admissible_moduli(const JumpSet& r) {
  std::vector<Int> out;
  const Int n = r.order();
  for (Int m = 2; m * m * m <= n; ++m) {
    if (theta_validity(n, m, r).valid()) out.push_back(m);
  }
  return out;
}

void require_admissible(Int n, Int m, const JumpSet& r) {
  const auto v = theta_validity(n, m, r);
  if (!v.valid()) throw Error(ErrorKind::InvalidThetaParams, v.describe());
}

Int theta_vertex(const ThetaParams& p, Int x) {
  const Int j = mod(x, p.m);
  return mod(x + j * p.t * p.m, p.n);
}

LabeledGraph theta_image(const ThetaParams& p, const CirculantGraph& g) {
  if (p.n != g.order()) {
    throw Error(ErrorKind::OrderMismatch, "theta order " + std::to_string(p.n) +
                                              " does not match " + g.to_string());
  }
  std::vector<Edge> edges = edge_set(g).edges();
  for (auto& [a, b] : edges) {
    a = theta_vertex(p, a);
    b = theta_vertex(p, b);
  }
  return LabeledGraph(p.n, std::move(edges));
}

LabeledGraph theta_image(const ThetaParams& p, const LabeledGraph& h) {
  if (p.n != h.order()) {
    throw Error(ErrorKind::OrderMismatch, "theta order does not match the graph order");
  }
  std::vector<Edge> edges = h.edges();
  for (auto& [a, b] : edges) {
    a = theta_vertex(p, a);
    b = theta_vertex(p, b);
  }
  return LabeledGraph(p.n, std::move(edges));
}

bool zero_neighborhood_symmetric(const LabeledGraph& h) {
  const auto nb = h.neighbors(0);
  return std::all_of(nb.begin(), nb.end(), [&](Int v) {
    return std::binary_search(nb.begin(), nb.end(), h.order() - v);
  });
}

std::optional<JumpSet> detect_circulant(const LabeledGraph& h) {
  const Int n = h.order();
  if (n < 3) return std::nullopt;
  const auto nb = h.neighbors(0);
  if (nb.empty()) return std::nullopt;
  for (Int v : nb) {
    if (!std::binary_search(nb.begin(), nb.end(), n - v)) return std::nullopt;
  }
  JumpSet s = JumpSet::reduce(n, nb);
  // h's edges are distinct, so equal counts plus every edge of h lying in
  // C_n(S) gives edge-set equality
  if (h.edge_count() != expected_edge_count(s)) return std::nullopt;
  for (const auto& [a, b] : h.edges()) {
    if (!s.contains(fold(b - a, n))) return std::nullopt;
  }
  return s;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NonCirculant: return "NonCirculant";
    case Verdict::Identity: return "Identity";
    case Verdict::Type1: return "Type1";
    case Verdict::Type2: return "Type2";
    case Verdict::Untyped: return "Untyped";
  }
  return "Unknown";
}

TClassification classify_transform(const ThetaParams& p, const CirculantGraph& g) {
  TClassification out;
  out.t = p.t;
  for (Int v : symmetric_closure(g).values) out.transformed.push_back(theta_vertex(p, v));

  const LabeledGraph image = theta_image(p, g);
  out.neighborhood_symmetric = zero_neighborhood_symmetric(image);
  out.image_fingerprint = fingerprint(image);
  out.image = detect_circulant(image);
  if (!out.image) {
    out.verdict = Verdict::NonCirculant;
    return out;
  }
  if (*out.image == g.jumps()) {
    out.verdict = Verdict::Identity;
    return out;
  }
  out.witnesses = type1_witnesses(g, CirculantGraph(*out.image));
  if (!out.witnesses.empty()) {
    out.verdict = Verdict::Type1;
  } else if (g.jumps().size() >= 3) {
    out.verdict = Verdict::Type2;
  } else {
    out.verdict = Verdict::Untyped;
  }
  return out;
}

TClassification classify_t(const ThetaParams& p, const CirculantGraph& g) {
  require_admissible(p.n, p.m, g.jumps());
  return classify_transform(p, g);
}

std::vector<TClassification> classification_table(Int n, Int m, const CirculantGraph& g,
                                                  unsigned threads) {
  require_admissible(n, m, g.jumps());
  if (n != g.order()) {
    throw Error(ErrorKind::OrderMismatch, "table order does not match " + g.to_string());
  }
  std::vector<TClassification> rows(static_cast<std::size_t>(n / m));
  detail::parallel_for(rows.size(), threads, [&](std::size_t t) {
    rows[t] = classify_transform(ThetaParams::make(n, m, static_cast<Int>(t)), g);
  });
  return rows;
}

}  // namespace circulant
