#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unrep/cayley.hpp"
#include "unrep/engine.hpp"
#include "unrep/group.hpp"
#include "unrep/semigroup.hpp"

namespace unrep {

// A nonempty set of pairwise distinct unrepresentations of one semigroup.
class HeapCarrier {
 public:
  // Throws InputError if items is empty, has duplicates, or contains a map
  // that is not an unrepresentation of s.
  HeapCarrier(TransSemigroup s, std::vector<UnrepMap> items);

  const TransSemigroup& semigroup() const noexcept { return s_; }
  const std::vector<UnrepMap>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  const UnrepMap& operator[](std::size_t i) const { return items_[i]; }
  std::optional<std::size_t> find(const UnrepMap& m) const;

 private:
  TransSemigroup s_;
  std::vector<UnrepMap> items_;
};

// t(a, b, c) = a o b^-1 o c, pointwise x -> a(b^-1(c(x))). Throws InputError
// when the maps belong to different semigroups or b is not a bijection.
UnrepMap heap_op(const TransSemigroup& s, const UnrepMap& a, const UnrepMap& b,
                 const UnrepMap& c);

// t(x,x,y) = y = t(y,x,x) on all pairs and para-associativity on all
// quintuples; false also when the carrier is not closed under t.
bool heap_axioms_check(const HeapCarrier& h);

// Group on the carrier with x . y = t(x, e, y); element i is h[i].
// Throws TheoremViolation if the result is not a group.
GroupTable group_from_identity(const HeapCarrier& h, std::size_t e);

struct CentralizerSet {
  // Lexicographically sorted.
  std::vector<Transformation> all_elements;
  std::vector<Transformation> invertible;
};

enum class CentralizerMode { automatic, exhaustive, backtrack };

inline constexpr std::size_t exhaustive_centralizer_degree_limit = 6;

// Self-maps c with c o s = s o c for all s in S. Exhaustive mode scans all
// n^n maps and throws CapacityError above the degree limit; automatic picks
// exhaustive up to the limit and backtracking beyond. With invertible_only
// the backtracking search is restricted to permutations and all_elements
// holds only those.
CentralizerSet centralizer(const TransSemigroup& s,
                           CentralizerMode mode = CentralizerMode::automatic,
                           bool invertible_only = false);

struct CentralizerVerdict {
  GroupTable heap_group;
  GroupTable centralizer_group;
  // witness[i] = heap index matched with centralizer element i.
  std::optional<std::vector<index_t>> witness;
  // c -> e o c is an isomorphism from the invertible centralizer onto the
  // heap group with identity e.
  bool translation_is_isomorphism = false;

  bool holds() const noexcept {
    return witness.has_value() && translation_is_isomorphism;
  }
};

// Throws PreconditionError when S has no unrepresentations.
CentralizerVerdict theorem_centralizer_check(const TransSemigroup& s,
                                             const EnumerateOptions& opts = {});

struct Pseudounit {
  // alpha[x] = image of element x.
  std::vector<index_t> alpha;
  friend auto operator<=>(const Pseudounit&, const Pseudounit&) = default;
};

struct PseudounitGroup {
  std::vector<Pseudounit> elements;
  // Composition of functions: group(i, j) is elements[i] o elements[j].
  GroupTable group;
};

enum class PseudounitMethod {
  automatic,    // translations for monoids, backtracking otherwise
  translation,  // alpha_u(y) = y u over units u; InputError unless a monoid
  backtrack,    // direct search on alpha(x y) = x alpha(y)
};

PseudounitGroup pseudounits(const MulTable& t,
                            PseudounitMethod method = PseudounitMethod::automatic);

// Units of a monoid table, ascending.
std::vector<index_t> units(const MulTable& t);

struct DualityVerdict {
  std::size_t pseudounit_count = 0;
  std::size_t unit_count = 0;
  bool bijective = false;
  bool anti_homomorphism = false;
  std::size_t pairs_checked = 0;
  bool holds() const noexcept { return bijective && anti_homomorphism; }
};

// k(alpha) = alpha(1) against Inv(M). Pseudounits come from the backtracking
// search, not from translations. Throws InputError unless M is a monoid.
DualityVerdict pseudounit_duality_check(const MulTable& m);

// The heap group acting on its own carrier by x . y = t(x, e, y).
bool heap_torsor_check(const HeapCarrier& h, std::size_t e);

struct BetaVerdict {
  std::size_t pairs_checked = 0;
  bool actions_valid = false;
  bool square_commutes = false;
  bool holds() const noexcept { return actions_valid && square_commutes; }
};

// Units u act on unrepresentations by (u . phi)(x) = phi(x) o u^-1, and
// beta(phi) = phi^-1(1). Checks u . phi stays an unrepresentation and
// beta(u . phi) = u(beta(phi)). Throws InputError unless S is a monoid and
// PreconditionError when it has no unrepresentations.
BetaVerdict beta_square_check(const TransSemigroup& s);

struct GroupTorsorReport {
  bool torsor = false;
  // witness[k] = point matched with unrepresentation k (in sorted order),
  // intertwining the action above with evaluation.
  std::optional<std::vector<point_t>> witness;
};

// For a transformation group with unrepresentations: the action above is a
// torsor, and a bijection to X intertwining it with evaluation is searched
// by brute force. Throws InputError unless S is a group, PreconditionError
// when it has no unrepresentations.
GroupTorsorReport group_torsor_isomorphism(const TransSemigroup& s);

}  // namespace unrep
