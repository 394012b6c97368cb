#include "circulant/finite_group.hpp"

namespace circulant {

std::optional<std::string> abelian_group_violation(const CayleyTable& table,
                                                   std::size_t identity) {
  const std::size_t k = table.size();
  if (identity >= k) return "identity index out of range";
  for (std::size_t a = 0; a < k; ++a) {
    if (table[a].size() != k) return "table is not square";
    for (std::size_t b = 0; b < k; ++b) {
      if (table[a][b] >= k) {
        return "closure fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (table[identity][a] != a || table[a][identity] != a) {
      return "identity fails at " + std::to_string(a);
    }
    bool has_inverse = false;
    for (std::size_t b = 0; b < k && !has_inverse; ++b) {
      has_inverse = table[a][b] == identity;
    }
    if (!has_inverse) return "no inverse for " + std::to_string(a);
    for (std::size_t b = 0; b < k; ++b) {
      if (table[a][b] != table[b][a]) {
        return "not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t ab = table[a][b];
      for (std::size_t c = 0; c < k; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          return "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace circulant
