#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unrep/cayley.hpp"
#include "unrep/semigroup.hpp"

namespace unrep {

// A map phi: X -> S, stored as element indices by point, tagged with the
// fingerprint of the semigroup its indices refer to. Construction only checks
// shape; verify_action_hom decides whether it is an unrepresentation.
class UnrepMap {
 public:
  // Throws InputError if phi has the wrong length or an out-of-range index.
  UnrepMap(const TransSemigroup& s, std::vector<index_t> phi);

  std::size_t degree() const noexcept { return phi_.size(); }
  index_t operator[](point_t x) const noexcept { return phi_[x]; }
  std::span<const index_t> phi() const noexcept { return phi_; }
  std::uint64_t semigroup_fingerprint() const noexcept { return fingerprint_; }

  // inverse()[s] = the point mapped to element s. Requires a bijection.
  std::vector<point_t> inverse() const;

  friend bool operator==(const UnrepMap& a, const UnrepMap& b) {
    return a.fingerprint_ == b.fingerprint_ && a.phi_ == b.phi_;
  }
  friend bool operator<(const UnrepMap& a, const UnrepMap& b) {
    return a.phi_ < b.phi_;
  }

 private:
  std::vector<index_t> phi_;
  std::uint64_t fingerprint_ = 0;
};

struct Unrepresentation {
  UnrepMap map;
  // induced(x, y) = phi(x)(y).
  MulTable induced;
};

// |S| == degree; necessary for any unrepresentation to exist.
bool existence_precheck(const TransSemigroup& s);

// phi is a bijection X -> S with phi(s(x)) = s o phi(x) for all s, x.
bool verify_action_hom(const TransSemigroup& s, std::span<const index_t> phi);

// Throws TheoremViolation if the induced table is not associative or does not
// represent back to (S, phi); InputError if phi fails verify_action_hom.
Unrepresentation induced_table(const TransSemigroup& s, const UnrepMap& phi);

enum class Strategy {
  automatic,   // monoid path for monoids, idempotent forcing for inverse
               // semigroups, backtracking otherwise
  backtrack,   // point-by-point with generator propagation
  monoid,      // evaluation at a candidate preimage of the identity
  idempotent,  // fix preimages of idempotents, force the rest
  bruteforce,  // all n! bijections
};

const char* to_string(Strategy s) noexcept;

inline constexpr std::size_t default_bruteforce_degree_limit = 8;

struct EnumerateOptions {
  Strategy strategy = Strategy::automatic;
  unsigned jobs = 1;
  std::size_t bruteforce_degree_limit = default_bruteforce_degree_limit;
};

// Strategy actually used by enumerate_* for S under these options.
Strategy resolve_strategy(const TransSemigroup& s, const EnumerateOptions& opts);

// All unrepresentation maps, sorted lexicographically by phi, no duplicates.
std::vector<UnrepMap> enumerate_unrep_maps(const TransSemigroup& s,
                                           const EnumerateOptions& opts = {});

std::vector<Unrepresentation> enumerate_unreps(
    const TransSemigroup& s, const EnumerateOptions& opts = {});

// Throws CapacityError when degree exceeds degree_limit.
std::vector<Unrepresentation> enumerate_unreps_bruteforce(
    const TransSemigroup& s,
    std::size_t degree_limit = default_bruteforce_degree_limit);

// Throws InputError unless S contains the identity map.
std::vector<Unrepresentation> monoid_unreps(const TransSemigroup& s);

// Throws InputError unless S is an inverse semigroup.
std::vector<Unrepresentation> idempotent_forced_unreps(const TransSemigroup& s);

// phi(p^k(z)) = p^k. Indices refer to closure({p}). Throws InputError unless
// p is a single cycle and z is in range.
UnrepMap cyclic_unrep(const Transformation& p, point_t z);

struct ForcingReport {
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  bool consistent() const noexcept { return disagreements == 0; }
};

// For an inverse semigroup and one of its unrepresentations, compares
// phi^-1(f) with f(phi^-1(e)) for every f and every idempotent e >= f^-1 f.
ForcingReport idempotent_forcing_check(const TransSemigroup& s,
                                       const UnrepMap& phi);

}  // namespace unrep
