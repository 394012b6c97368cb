#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace circulant {

/// Cayley table over element indices 0..k-1: table[a][b] = a * b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Checks closure, identity, inverses, associativity and commutativity.
/// Returns a description of the first violated axiom, or nullopt.
std::optional<std::string> abelian_group_violation(const CayleyTable& table,
                                                   std::size_t identity);

}  // namespace circulant
