#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "unrep/error.hpp"
#include "unrep/semigroup.hpp"

namespace unrep {

// An abstract finite semigroup on {0, ..., n-1}: table(x, y) = x * y.
// Only validate_table creates one, so every MulTable is associative.
class MulTable {
 public:
  MulTable() = default;

  std::size_t order() const noexcept { return order_; }
  index_t operator()(index_t x, index_t y) const noexcept {
    return cells_[static_cast<std::size_t>(x) * order_ + y];
  }
  std::vector<std::vector<index_t>> rows() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Two-sided identity element, if any.
  std::optional<index_t> identity() const;

  friend bool operator==(const MulTable& a, const MulTable& b) {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }

 private:
  friend MulTable validate_table(const std::vector<std::vector<index_t>>&,
                                 std::vector<std::string>);
  std::size_t order_ = 0;
  std::vector<index_t> cells_;
  std::vector<std::string> labels_;
};

class NonAssociativeError : public InputError {
 public:
  explicit NonAssociativeError(std::array<index_t, 3> triple);
  // (x, y, z) with (x*y)*z != x*(y*z).
  const std::array<index_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<index_t, 3> triple_;
};

// Throws InputError for a ragged/empty grid, out-of-range entries or labels
// of the wrong length, and NonAssociativeError for the first failing triple
// in lexicographic order.
MulTable validate_table(const std::vector<std::vector<index_t>>& raw,
                        std::vector<std::string> labels = {});

// The abstract multiplication table of S (x * y = x o y on element indices).
MulTable table_of(const TransSemigroup& s);

struct RepresentationResult {
  TransSemigroup semigroup;
  // rep_map[x] = index of the left translation y -> x*y in semigroup.
  std::vector<index_t> rep_map;
  bool faithful = false;
};

RepresentationResult represent(const MulTable& t);

// Rows pairwise distinct.
bool is_faithful(const MulTable& t);

// Abstract-table classification helpers.
bool is_group_table(const MulTable& t);
bool is_inverse_table(const MulTable& t);

}  // namespace unrep
