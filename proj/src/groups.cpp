#include "circulant/groups.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "circulant/parallel.hpp"

namespace circulant {

namespace {

// Assigns class ids to sweep rows in order of first appearance, so row 0
// (the base itself) always has class 0.
std::vector<std::size_t> classify_images(const std::vector<TClassification>& rows) {
  std::map<JumpSet, std::size_t> circulant_ids;
  std::map<std::uint64_t, std::size_t> other_ids;
  std::vector<std::size_t> ids;
  ids.reserve(rows.size());
  std::size_t next = 0;
  for (const auto& row : rows) {
    if (row.image) {
      auto [it, inserted] = circulant_ids.try_emplace(*row.image, next);
      if (inserted) ++next;
      ids.push_back(it->second);
    } else {
      auto [it, inserted] = other_ids.try_emplace(row.image_fingerprint, next);
      if (inserted) ++next;
      ids.push_back(it->second);
    }
  }
  return ids;
}

OrbitGroup build_orbit_group(Int modulus, std::vector<Int> indices,
                             const std::vector<std::size_t>& classes,
                             const std::vector<std::optional<JumpSet>>& images) {
  OrbitGroup grp;
  grp.modulus = modulus;
  grp.indices = std::move(indices);
  grp.generator = grp.indices.size() > 1 ? grp.indices[1] : 0;
  for (Int t : grp.indices) {
    const auto ti = static_cast<std::size_t>(t);
    grp.labels.push_back(images[ti]);
    grp.label_class.push_back(classes[ti]);
  }

  const std::size_t k = grp.indices.size();
  grp.table.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Int sum = mod(grp.indices[i] + grp.indices[j], modulus);
      const std::size_t pos = grp.position_of(sum);
      if (pos == k) {
        throw Error(ErrorKind::SubgroupViolation,
                    "index set not closed: " + std::to_string(grp.indices[i]) + " + " +
                        std::to_string(grp.indices[j]) + " = " + std::to_string(sum));
      }
      grp.table[i][j] = pos;
    }
  }
  if (auto bad = abelian_group_violation(grp.table, grp.position_of(0))) {
    throw Error(ErrorKind::VerificationFailure, "index group: " + *bad);
  }

  // The action on labels must factor through the quotient: the label of a+b
  // depends only on the labels of a and b.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto key = std::make_pair(grp.label_class[i], grp.label_class[j]);
      const std::size_t value = grp.label_class[grp.table[i][j]];
      auto [it, inserted] = product.try_emplace(key, value);
      if (!inserted && it->second != value) {
        throw Error(ErrorKind::VerificationFailure,
                    "label product is not well defined at indices " +
                        std::to_string(grp.indices[i]) + ", " + std::to_string(grp.indices[j]));
      }
    }
  }
  grp.stabilizer_order = static_cast<Int>(
      std::count(grp.label_class.begin(), grp.label_class.end(), classes[0]));
  return grp;
}

}  // namespace

std::size_t VSet::distinct_image_count() const {
  if (image_class.empty()) return 0;
  return *std::max_element(image_class.begin(), image_class.end()) + 1;
}

VSet v_set(Int n, Int m, const CirculantGraph& g, unsigned threads) {
  VSet v{g, m, 0, {}, {}, {}, 0};
  v.rows = classification_table(n, m, g, threads);
  v.modulus = n / m;
  v.image_class = classify_images(v.rows);
  v.graph_period = v.modulus;
  for (std::size_t t = 1; t < v.rows.size(); ++t) {
    if (v.image_class[t] == v.image_class[0]) {
      v.graph_period = static_cast<Int>(t);
      break;
    }
  }
  std::set<CirculantGraph> distinct;
  for (const auto& row : v.rows) {
    if (row.image) distinct.insert(CirculantGraph(*row.image));
  }
  v.distinct.assign(distinct.begin(), distinct.end());
  return v;
}

std::size_t OrbitGroup::position_of(Int t) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), t);
  if (it == indices.end() || *it != t) return indices.size();
  return static_cast<std::size_t>(it - indices.begin());
}

OrbitGroup v_group(const VSet& v) {
  std::vector<Int> indices(static_cast<std::size_t>(v.modulus));
  for (Int t = 0; t < v.modulus; ++t) indices[static_cast<std::size_t>(t)] = t;
  std::vector<std::optional<JumpSet>> images;
  for (const auto& row : v.rows) images.push_back(row.image);
  OrbitGroup grp = build_orbit_group(v.modulus, std::move(indices), v.image_class, images);
  if (static_cast<std::size_t>(grp.quotient_order()) != v.distinct_image_count()) {
    throw Error(ErrorKind::VerificationFailure, "orbit quotient order differs from image count");
  }
  return grp;
}

bool Type2Set::contains(const CirculantGraph& g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Type2Set t2_set(const VSet& v) {
  Type2Set s{v.base, v.m, v.modulus, v.graph_period, {}, {}, true, v.image_class, {}};
  std::set<CirculantGraph> members{v.base};
  for (const auto& row : v.rows) {
    s.images.push_back(row.image);
    if (row.verdict == Verdict::Identity || row.verdict == Verdict::Type2) {
      s.t2_indices.push_back(row.t);
      if (row.verdict == Verdict::Type2) members.insert(CirculantGraph(*row.image));
    } else {
      s.equals_v = false;
    }
  }
  s.members.assign(members.begin(), members.end());
  return s;
}

Type2Set t2_set(Int n, Int m, const CirculantGraph& g, unsigned threads) {
  return t2_set(v_set(n, m, g, threads));
}

OrbitGroup t2_group(const Type2Set& s) {
  if (s.t2_indices.empty() || s.t2_indices.front() != 0) {
    throw Error(ErrorKind::SubgroupViolation, "Type-2 index set does not contain 0");
  }
  OrbitGroup grp = build_orbit_group(s.modulus, s.t2_indices, s.image_class, s.images);
  if (grp.generator != 0) {
    for (std::size_t i = 0; i < grp.indices.size(); ++i) {
      if (grp.indices[i] != static_cast<Int>(i) * grp.generator) {
        throw Error(ErrorKind::SubgroupViolation, "Type-2 indices are not the multiples of " +
                                                      std::to_string(grp.generator));
      }
    }
  }
  if (static_cast<std::size_t>(grp.quotient_order()) != s.members.size()) {
    throw Error(ErrorKind::VerificationFailure,
                "Type-2 quotient order " + std::to_string(grp.quotient_order()) +
                    " differs from member count " + std::to_string(s.members.size()));
  }
  return grp;
}

bool t2_set_equality(const CirculantGraph& g, const CirculantGraph& h, Int m) {
  if (g.order() != h.order()) {
    throw Error(ErrorKind::OrderMismatch, g.to_string() + " vs " + h.to_string());
  }
  return t2_set(g.order(), m, g).contains(h);
}

bool orbit_law_holds(const CirculantGraph& g, Int m, Int t, Int t_prime) {
  const Int n = g.order();
  const auto outer = ThetaParams::make(n, m, t);
  const auto inner = ThetaParams::make(n, m, t_prime);
  const auto sum = ThetaParams::make(n, m, mod(t + t_prime, n / m));
  return theta_image(outer, theta_image(inner, g)) == theta_image(sum, g);
}

AppendedJumpReport appended_jump_check(Int n, Int m, Int r, const JumpSet& base) {
  AppendedJumpReport rep;
  if (base.order() != n) {
    throw Error(ErrorKind::OrderMismatch, "base set order differs from n");
  }
  auto inapplicable = [&](std::string why) {
    rep.reason = std::move(why);
    return rep;
  };
  if (m <= 1 || n % (m * m * m) != 0) return inapplicable("m must exceed 1 with m^3 | n");
  if (mod(r, m) != 0) return inapplicable("appended jump is not divisible by m");
  for (Int s : base) {
    if (mod(s, m) == 0) return inapplicable("base already has a jump divisible by m");
  }
  if (base.contains(fold(r, n))) return inapplicable("appended jump already in the base");

  std::vector<Int> extended(base.begin(), base.end());
  extended.push_back(r);
  const auto with_jump = make_circulant(n, extended);
  rep.t2_size_with_jump = t2_set(n, m, with_jump).size();
  if (rep.t2_size_with_jump < 2) return inapplicable("extended graph has no Type-2 partner");

  rep.applicable = true;
  const CirculantGraph g(base);
  rep.holds = true;
  for (Int t = 0; t < n / m; ++t) {
    rep.rows.push_back(classify_transform(ThetaParams::make(n, m, t), g));
    if (rep.rows.back().verdict == Verdict::Type2) rep.holds = false;
  }
  return rep;
}

std::uint64_t canonical_set_count(Int n, std::size_t k) {
  const auto pool = static_cast<std::uint64_t>(n / 2);
  if (k > pool) return 0;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  // C(pool, k) built as a running product; each step stays an integer.
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (pool - k + i) / i;
    if (value > cap) return cap;
  }
  return static_cast<std::uint64_t>(value);
}

CensusResult census(Int n, Int m, const CensusConfig& config,
                    const std::function<void(const CensusClass&)>& on_class) {
  if (n < 3) throw Error(ErrorKind::InvalidOrder, "census needs n >= 3");
  if (m <= 1 || n % (m * m * m) != 0) {
    throw Error(ErrorKind::InvalidThetaParams, "census needs m > 1 with m^3 | n");
  }
  CensusResult res;
  res.n = n;
  res.m = m;
  const auto pool = static_cast<std::size_t>(n / 2);
  const std::size_t max_size = std::min(config.max_size, pool);
  const std::size_t min_size = std::max<std::size_t>(config.min_size, 1);
  for (std::size_t k = min_size; k <= max_size; ++k) {
    const auto count = canonical_set_count(n, k);
    res.candidates_total = count > std::numeric_limits<std::uint64_t>::max() - res.candidates_total
                               ? std::numeric_limits<std::uint64_t>::max()
                               : res.candidates_total + count;
  }
  res.budget_exceeded = res.candidates_total > config.max_candidates;

  std::set<JumpSet> covered;
  constexpr std::size_t block_size = 1024;
  std::vector<JumpSet> block;
  auto flush = [&] {
    std::vector<std::optional<Type2Set>> sets(block.size());
    detail::parallel_for(block.size(), config.threads, [&](std::size_t i) {
      sets[i] = t2_set(n, m, CirculantGraph(block[i]));
    });
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (covered.count(block[i]) != 0) continue;
      const Type2Set& s = *sets[i];
      if (s.size() == 1) {
        ++res.singleton_count;
        continue;
      }
      CensusClass cls;
      cls.members = s.members;
      cls.t2_indices = s.t2_indices;
      cls.graph_period = s.graph_period;
      cls.group_order = static_cast<Int>(s.size());
      cls.equals_v = s.equals_v;
      for (const auto& g : s.members) covered.insert(g.jumps());
      if (cls.equals_v) ++res.equals_v_count;
      res.classes.push_back(std::move(cls));
    }
    block.clear();
  };

  bool stop = false;
  for (std::size_t k = min_size; k <= max_size && !stop; ++k) {
    std::vector<Int> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Int>(i + 1);
    while (true) {
      if (res.candidates_examined >= config.max_candidates) {
        stop = true;
        break;
      }
      ++res.candidates_examined;
      const bool anchored =
          std::any_of(combo.begin(), combo.end(), [&](Int v) { return v % m == 0; });
      if (anchored) {
        ++res.anchored;
        JumpSet r = JumpSet::reduce(n, combo);
        if ((!config.predicate || config.predicate(r)) && covered.count(r) == 0) {
          block.push_back(std::move(r));
          if (block.size() == block_size) flush();
        }
      }
      // Next k-subset of [1, pool] in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == static_cast<Int>(pool - k + i)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  flush();

  std::sort(res.classes.begin(), res.classes.end(),
            [](const CensusClass& a, const CensusClass& b) {
              return a.members.front() < b.members.front();
            });
  if (on_class) {
    for (const auto& cls : res.classes) on_class(cls);
  }
  return res;
}

}  // namespace circulant
