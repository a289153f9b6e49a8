#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unrep/engine.hpp"
#include "unrep/semigroup.hpp"

namespace unrep {

// A Clifford semigroup as a semilattice of groups. Component groups are
// element-index sets of the ambient semigroup; their products come from it.
struct CliffordDecomposition {
  struct Connecting {
    index_t lower;  // f
    index_t upper;  // e, with f <= e
    // images[k] = f o components[upper][k].
    std::vector<index_t> images;
  };

  // Idempotents in ascending element order (the semilattice carrier).
  std::vector<index_t> idempotents;
  // (f, e) for every f <= e, including f == e.
  std::vector<std::pair<index_t, index_t>> order_pairs;
  // components[k] = F(idempotents[k]) = {x : x x^-1 = idempotents[k]}.
  std::vector<std::vector<index_t>> components;
  // component_of[x] = k with x in components[k].
  std::vector<std::size_t> component_of;
  std::vector<index_t> inverses;
  // One entry per order pair, in the same order.
  std::vector<Connecting> connecting;

  std::size_t position(index_t idempotent) const;
  const std::vector<index_t>& component(index_t idempotent) const {
    return components[position(idempotent)];
  }
};

// Throws InputError unless S is Clifford; TheoremViolation if the
// decomposition fails its own invariants.
CliffordDecomposition decompose(const TransSemigroup& s);

// Partition, group components and functorial connecting homomorphisms.
bool decomposition_invariants_hold(const TransSemigroup& s,
                                   const CliffordDecomposition& d);

// {s(y) : s in sub, y in Y} == Y.
bool is_action_closed(const TransSemigroup& s, std::span<const index_t> sub,
                      std::span<const point_t> y);

bool is_subsemigroup(const TransSemigroup& s, std::span<const index_t> sub);

// Restrictions of the elements of S to an action-closed Y, relabelled by
// position in carrier. Equal restrictions are merged.
struct Deflation {
  std::vector<point_t> carrier;
  TransSemigroup semigroup;
  // quotient[x] = index in semigroup of the restriction of element x.
  std::vector<index_t> quotient;
};

// Throws InputError unless Y is nonempty and action-closed under all of S.
Deflation deflate(const TransSemigroup& s, std::span<const point_t> y);

struct Underrepresentation {
  std::vector<point_t> carrier;       // Y, ascending
  std::vector<index_t> phi;           // phi[k] = image of carrier[k]
  std::vector<index_t> subsemigroup;  // S', ascending
  // induced[i][j] = position in carrier of phi(carrier[i])(carrier[j]).
  std::vector<std::vector<index_t>> induced;
};

// phi_y[k] is the image of y[k]. True iff phi_y is a bijection from the
// nonempty Y onto sub, sub acts on Y with image exactly Y, and
// phi_y(s(y)) = s o phi_y(y) for s in sub, y in Y.
bool verify_underrep(const TransSemigroup& s, std::span<const index_t> sub,
                     std::span<const point_t> y,
                     std::span<const index_t> phi_y);

// Domain restriction of an unrepresentation to phi^-1(sub). Throws
// InputError if sub is not closed or phi is not an unrepresentation, and
// TheoremViolation if the restriction is not an underrepresentation.
Underrepresentation restrict_unrep(const TransSemigroup& s, const UnrepMap& phi,
                                   std::span<const index_t> sub);

struct TheoremCVerdict {
  bool action_hom = false;         // phi is an unrepresentation
  bool compatible_family = false;  // underrepresentations + squares commute
  bool agree() const noexcept { return action_hom == compatible_family; }
};

// Evaluates both sides of the component-wise characterisation for a
// bijection phi: X -> S. Throws InputError unless S is Clifford with
// |S| == degree and phi is a bijection.
TheoremCVerdict theorem_c_check(const TransSemigroup& s,
                                std::span<const index_t> phi);
TheoremCVerdict theorem_c_check(const TransSemigroup& s,
                                const CliffordDecomposition& d,
                                std::span<const index_t> phi);

struct TheoremCSweep {
  bool exhaustive = false;
  std::size_t bijections_checked = 0;
  std::size_t unreps_found = 0;
  std::size_t disagreements = 0;
};

inline constexpr std::size_t theorem_c_exhaustive_degree_limit = 5;
inline constexpr std::size_t theorem_c_samples = 1000;

// Every bijection when degree <= exhaustive_limit, otherwise `samples`
// uniformly shuffled bijections from a seeded generator.
TheoremCSweep theorem_c_sweep(
    const TransSemigroup& s, std::uint64_t seed = 0,
    std::size_t exhaustive_limit = theorem_c_exhaustive_degree_limit,
    std::size_t samples = theorem_c_samples);

// Unrepresentations phi with phi^-1 = evaluation at y, over all points y.
// Throws InputError unless S is a Clifford monoid; TheoremViolation if the
// result differs from the backtracking enumeration.
std::vector<Unrepresentation> clifford_monoid_unreps(const TransSemigroup& s);

inline constexpr std::size_t component_search_degree_limit = 8;

struct ComponentExistence {
  std::vector<index_t> idempotents;
  // has_underrep[k]: F(idempotents[k]) has an underrepresentation on some Y.
  std::vector<bool> has_underrep;
  bool conjunction = false;
  bool unreps_exist = false;
  // unreps_exist implies conjunction.
  bool only_if_holds() const noexcept { return !unreps_exist || conjunction; }
  bool matches() const noexcept { return conjunction == unreps_exist; }
};

// Brute-force search over Y of size |F(e)| and bijections Y -> F(e). Throws
// InputError unless S is a Clifford monoid, CapacityError above the degree
// limit.
ComponentExistence component_underrep_existence(const TransSemigroup& s);

}  // namespace unrep
