#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unrep/transformation.hpp"

namespace unrep {

// A finite group as an index table with a designated identity.
class GroupTable {
 public:
  // Throws InputError unless raw is a square table over its index range that
  // is associative, has `identity` as two-sided identity and has inverses.
  static GroupTable from_table(const std::vector<std::vector<index_t>>& raw,
                               index_t identity);

  std::size_t order() const noexcept { return order_; }
  index_t identity() const noexcept { return identity_; }
  index_t operator()(index_t a, index_t b) const noexcept {
    return cells_[static_cast<std::size_t>(a) * order_ + b];
  }
  index_t inverse(index_t a) const noexcept { return inverses_[a]; }
  std::size_t element_order(index_t a) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<std::vector<index_t>> rows() const;

 private:
  GroupTable() = default;
  std::size_t order_ = 0;
  index_t identity_ = 0;
  std::vector<index_t> cells_;
  std::vector<index_t> inverses_;
};

// Composition group of a set of permutations closed under composition;
// element i of the result is perms[i].
GroupTable composition_group(const std::vector<Transformation>& perms);

inline constexpr std::size_t isomorphism_order_limit = 64;

// A bijection iso with iso[g1 g2] = iso[g1] iso[g2], or nullopt. Throws
// CapacityError when either order exceeds isomorphism_order_limit.
std::optional<std::vector<index_t>> is_isomorphic(const GroupTable& g,
                                                  const GroupTable& h);

// action[g][u] = g . u. True iff this is a group action that is free and
// transitive, i.e. (g, u) -> (g . u, u) is a bijection G x U -> U x U.
bool torsor_check(const GroupTable& g,
                  const std::vector<std::vector<index_t>>& action);

}  // namespace unrep
