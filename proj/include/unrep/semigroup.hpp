#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "unrep/transformation.hpp"

namespace unrep {

inline constexpr std::size_t default_closure_cap = 100000;

// Composition tables are materialised up to this many elements; larger
// semigroups compute products on demand through the element index.
inline constexpr std::size_t composition_table_limit = 4096;

// A composition-closed set of transformations of a common degree, stored in
// lexicographic order of image lists. Every element index used anywhere in
// the library refers to this order.
class TransSemigroup {
 public:
  // Throws InputError if the list is empty, degrees differ, or the set is not
  // closed under composition. Duplicates are merged.
  static TransSemigroup from_elements(std::vector<Transformation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }

  const std::vector<Transformation>& elements() const noexcept {
    return elements_;
  }
  const Transformation& element(index_t i) const { return elements_[i]; }

  // Indices of the generating set the semigroup was built from; empty when
  // it was built from a full element list.
  const std::vector<index_t>& generators() const noexcept {
    return generators_;
  }
  // Elements whose products generate S: the generators when known, all
  // elements otherwise.
  std::vector<index_t> generating_indices() const;

  // Index of elements[i] o elements[j].
  index_t product(index_t i, index_t j) const;
  bool has_table() const noexcept { return !table_.empty(); }

  point_t act(index_t s, point_t x) const noexcept { return elements_[s][x]; }

  std::optional<index_t> find(const Transformation& t) const;
  std::optional<index_t> identity() const;

  // Stable hash of the canonical element list; identifies S across objects.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const TransSemigroup& a, const TransSemigroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  friend TransSemigroup closure(std::span<const Transformation>, std::size_t);

  TransSemigroup() = default;
  // verify_closed = false skips the closure check for sets known closed;
  // the table is still built when small enough.
  void finalise(std::vector<Transformation> elements, bool verify_closed);

  std::size_t degree_ = 0;
  std::vector<Transformation> elements_;
  std::vector<index_t> generators_;
  std::vector<index_t> table_;
  std::unordered_map<Transformation, index_t, TransformationHash> lookup_;
  std::uint64_t fingerprint_ = 0;
};

// Smallest composition-closed set containing the generators. Throws
// InputError on an empty list or mixed degrees, CapacityError when the
// closure grows beyond cap elements.
TransSemigroup closure(std::span<const Transformation> generators,
                       std::size_t cap = default_closure_cap);

struct ClassificationReport {
  std::size_t size = 0;
  std::size_t degree = 0;
  bool size_matches_degree = false;

  std::optional<index_t> identity;
  bool is_monoid = false;
  bool is_group = false;
  bool is_regular = false;
  bool is_inverse = false;
  bool is_clifford = false;
  bool is_left_zero = false;
  bool idempotents_commute = false;

  // inverses[x] is the unique inverse of x; filled only when is_inverse.
  std::vector<index_t> inverses;
  std::vector<index_t> idempotents;
};

ClassificationReport classify(const TransSemigroup& s);

std::vector<index_t> idempotents(const TransSemigroup& s);

// Position of f relative to e in the natural partial order on idempotents.
enum class Ordering { equal, less, greater, incomparable };

// Throws InputError if e or f is not idempotent.
Ordering natural_order(const TransSemigroup& s, index_t e, index_t f);

// f <= e, i.e. e o f = f o e = f. No idempotency check.
bool natural_leq(const TransSemigroup& s, index_t f, index_t e);

const char* to_string(Ordering o) noexcept;

}  // namespace unrep
