#include "circulant/type1.hpp"

#include <algorithm>
#include <map>

namespace circulant {

namespace {

void require_same_order(const CirculantGraph& g, const CirculantGraph& h) {
  if (g.order() != h.order()) {
    throw Error(ErrorKind::OrderMismatch, g.to_string() + " and " + h.to_string() +
                                              " have different orders");
  }
}

}  // namespace

bool UnitGroup::contains(Int x) const {
  return std::binary_search(elements.begin(), elements.end(), mod(x, order));
}

Int UnitGroup::inverse(Int x) const {
  for (Int y : elements) {
    if (mod(x * y, order) == 1 % order) return y;
  }
  throw Error(ErrorKind::NotAUnit, std::to_string(x) + " is not a unit mod " +
                                       std::to_string(order));
}

UnitGroup units(Int n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "units need n >= 2");
  UnitGroup out{n, {}};
  for (Int x = 1; x < n; ++x) {
    if (gcd(n, x) == 1) out.elements.push_back(x);
  }
  return out;
}

JumpSet phi_apply(Int n, Int x, const JumpSet& r) {
  if (gcd(n, mod(x, n)) != 1) {
    throw Error(ErrorKind::NotAUnit,
                std::to_string(x) + " is not a unit mod " + std::to_string(n));
  }
  std::vector<Int> raw;
  raw.reserve(r.size());
  for (Int s : r) raw.push_back(mod(x, n) * s % n);
  return JumpSet::reduce(n, raw);
}

std::size_t Type1Set::index_of(const CirculantGraph& g) const {
  const auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || !(*it == g)) return members.size();
  return static_cast<std::size_t>(it - members.begin());
}

Type1Set type1_set(const CirculantGraph& g) {
  const Int n = g.order();
  std::map<JumpSet, std::vector<Int>> images;
  for (Int x : units(n).elements) images[phi_apply(n, x, g.jumps())].push_back(x);

  Type1Set out{g, {}, {}};
  for (auto& [set, xs] : images) {
    out.members.emplace_back(set);
    out.witnesses.push_back(std::move(xs));
  }
  return out;
}

std::vector<Int> type1_witnesses(const CirculantGraph& g, const CirculantGraph& h) {
  require_same_order(g, h);
  if (g.jumps().size() != h.jumps().size()) return {};
  std::vector<Int> out;
  for (Int x : units(g.order()).elements) {
    if (phi_apply(g.order(), x, g.jumps()) == h.jumps()) out.push_back(x);
  }
  return out;
}

Type1Group type1_group(const CirculantGraph& g) {
  const Int n = g.order();
  Type1Group grp{type1_set(g), {}, {}, {}, 0};
  const auto& carrier = grp.carrier;
  const std::size_t k = carrier.size();

  std::map<Int, std::size_t> member_of;  // unit -> member index
  for (std::size_t i = 0; i < k; ++i) {
    grp.representatives.push_back(carrier.witnesses[i].front());
    for (Int x : carrier.witnesses[i]) member_of[x] = i;
  }
  grp.identity = carrier.base_index();
  grp.stabilizer = carrier.witnesses[grp.identity];

  grp.table.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t product =
          member_of.at(grp.representatives[i] * grp.representatives[j] % n);
      grp.table[i][j] = product;
      // every choice of representatives has to land on the same member
      for (Int x : carrier.witnesses[i]) {
        for (Int y : carrier.witnesses[j]) {
          if (member_of.at(x * y % n) != product) {
            throw Error(ErrorKind::VerificationFailure,
                        "Type-1 composition is not well defined for " + g.to_string());
          }
        }
      }
    }
  }
  if (auto bad = abelian_group_violation(grp.table, grp.identity)) {
    throw Error(ErrorKind::VerificationFailure, "Type-1 group of " + g.to_string() + ": " + *bad);
  }
  return grp;
}

bool type1_set_equality(const CirculantGraph& g, const CirculantGraph& h) {
  require_same_order(g, h);
  return !type1_witnesses(g, h).empty();
}

bool same_type1_carrier(const Type1Set& a, const Type1Set& b) {
  return a.members == b.members;
}

}  // namespace circulant
