#include "unrep/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "unrep/error.hpp"

namespace unrep {

namespace {

constexpr const char* kModule = "unrep-engine";
constexpr index_t kUnset = std::numeric_limits<index_t>::max();

bool is_bijection(std::span<const index_t> phi, std::size_t range) {
  if (phi.size() != range) {
    return false;
  }
  std::vector<bool> seen(range, false);
  for (index_t v : phi) {
    if (v >= range || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

// Point-by-point search. Assigning phi(x) = a forces phi(g(x)) = g o a for
// every generator g, so the assigned set stays closed under the action and
// the action-homomorphism law holds on it at every node.
class Backtracker {
 public:
  explicit Backtracker(const TransSemigroup& s)
      : s_(s),
        n_(static_cast<point_t>(s.degree())),
        gens_(s.generating_indices()),
        phi_(n_, kUnset),
        used_(n_, false) {
    // Points with large forward orbits first: one choice fixes many points.
    std::vector<std::size_t> orbit_size(n_);
    for (point_t x = 0; x < n_; ++x) {
      std::vector<bool> seen(n_, false);
      std::vector<point_t> stack{x};
      seen[x] = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        point_t y = stack.back();
        stack.pop_back();
        for (index_t g : gens_) {
          point_t z = s_.act(g, y);
          if (!seen[z]) {
            seen[z] = true;
            ++count;
            stack.push_back(z);
          }
        }
      }
      orbit_size[x] = count;
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](point_t a, point_t b) {
      return orbit_size[a] > orbit_size[b];
    });
  }

  point_t first_point() const { return order_.front(); }

  // Explores the subtree with phi(first_point()) = a.
  void run_branch(index_t a, std::vector<std::vector<index_t>>& out) {
    std::size_t mark = trail_.size();
    if (assign(order_.front(), a)) {
      search(1, out);
    }
    undo(mark);
  }

 private:
  bool assign(point_t x, index_t a) {
    if (used_[a]) {
      return false;
    }
    set(x, a);
    std::vector<point_t> queue{x};
    while (!queue.empty()) {
      point_t y = queue.back();
      queue.pop_back();
      for (index_t g : gens_) {
        point_t gy = s_.act(g, y);
        index_t value = s_.product(g, phi_[y]);
        if (phi_[gy] == kUnset) {
          if (used_[value]) {
            return false;
          }
          set(gy, value);
          queue.push_back(gy);
        } else if (phi_[gy] != value) {
          return false;
        }
      }
    }
    return true;
  }

  void set(point_t x, index_t a) {
    phi_[x] = a;
    used_[a] = true;
    trail_.push_back(x);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      point_t x = trail_.back();
      trail_.pop_back();
      used_[phi_[x]] = false;
      phi_[x] = kUnset;
    }
  }

  void search(std::size_t pos, std::vector<std::vector<index_t>>& out) {
    while (pos < n_ && phi_[order_[pos]] != kUnset) {
      ++pos;
    }
    if (pos == n_) {
      if (!verify_action_hom(s_, phi_)) {
        throw TheoremViolation(kModule,
                               "generator propagation produced a map that "
                               "fails the action-homomorphism law");
      }
      out.push_back(phi_);
      return;
    }
    point_t x = order_[pos];
    for (index_t a = 0; a < n_; ++a) {
      if (used_[a]) {
        continue;
      }
      std::size_t mark = trail_.size();
      if (assign(x, a)) {
        search(pos + 1, out);
      }
      undo(mark);
    }
  }

  const TransSemigroup& s_;
  point_t n_;
  std::vector<index_t> gens_;
  std::vector<point_t> order_;
  std::vector<index_t> phi_;
  std::vector<bool> used_;
  std::vector<point_t> trail_;
};

std::vector<std::vector<index_t>> backtrack_phis(const TransSemigroup& s,
                                                 unsigned jobs) {
  const auto n = static_cast<index_t>(s.degree());
  jobs = std::clamp<unsigned>(jobs, 1, n);
  std::vector<std::vector<std::vector<index_t>>> partial(jobs);
  auto worker = [&](unsigned id) {
    Backtracker bt(s);
    for (index_t a = id; a < n; a += jobs) {
      bt.run_branch(a, partial[id]);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned id = 0; id < jobs; ++id) {
      threads.emplace_back([&, id] {
        try {
          worker(id);
        } catch (...) {
          errors[id] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) {
      t.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }
  std::vector<std::vector<index_t>> out;
  for (auto& p : partial) {
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  }
  return out;
}

// phi with phi^-1(f) = f(z) for every f, if that is a valid unrepresentation.
bool evaluation_phi(const TransSemigroup& s, point_t z,
                    std::vector<index_t>& phi) {
  const std::size_t n = s.degree();
  phi.assign(n, kUnset);
  for (index_t f = 0; f < s.size(); ++f) {
    point_t y = s.act(f, z);
    if (phi[y] != kUnset) {
      return false;
    }
    phi[y] = f;
  }
  return verify_action_hom(s, phi);
}

std::vector<std::vector<index_t>> monoid_phis(const TransSemigroup& s) {
  if (!s.identity()) {
    throw InputError(kModule, "monoid path requires the identity map in S");
  }
  std::vector<std::vector<index_t>> out;
  if (!existence_precheck(s)) {
    return out;
  }
  std::vector<index_t> phi;
  for (point_t z = 0; z < s.degree(); ++z) {
    if (evaluation_phi(s, z, phi)) {
      out.push_back(phi);
    }
  }
  return out;
}

// Idempotent-forced search. The preimage of an idempotent e is fixed by e;
// below an assigned idempotent e' it is forced to e(phi^-1(e')); every other
// element f is forced to f(phi^-1(e)) for each idempotent e >= f^-1 f.
class IdempotentForcer {
 public:
  IdempotentForcer(const TransSemigroup& s, const ClassificationReport& c)
      : s_(s), inverses_(c.inverses), idems_(c.idempotents) {
    const std::size_t k = idems_.size();
    std::vector<std::size_t> below(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (natural_leq(s_, idems_[j], idems_[i])) {
          ++below[i];
        }
      }
    }
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return below[a] > below[b];
    });
    std::vector<index_t> sorted;
    for (std::size_t i : perm) {
      sorted.push_back(idems_[i]);
    }
    idems_ = std::move(sorted);
    preimage_.assign(s_.size(), kUnset);
    used_.assign(s_.degree(), false);
    // eligible_[f] = idempotents e with f^-1 f <= e.
    eligible_.resize(s_.size());
    for (index_t f = 0; f < s_.size(); ++f) {
      index_t base = s_.product(inverses_[f], f);
      for (index_t e : idems_) {
        if (natural_leq(s_, base, e)) {
          eligible_[f].push_back(e);
        }
      }
    }
  }

  std::vector<std::vector<index_t>> run() {
    std::vector<std::vector<index_t>> out;
    search(0, out);
    return out;
  }

 private:
  void search(std::size_t pos, std::vector<std::vector<index_t>>& out) {
    if (pos == idems_.size()) {
      extend(out);
      return;
    }
    index_t e = idems_[pos];
    std::optional<point_t> forced;
    for (std::size_t i = 0; i < pos; ++i) {
      index_t upper = idems_[i];
      if (upper != e && natural_leq(s_, e, upper)) {
        point_t y = s_.act(e, preimage_[upper]);
        if (forced && *forced != y) {
          return;
        }
        forced = y;
      }
    }
    for (point_t y = 0; y < s_.degree(); ++y) {
      if ((forced && y != *forced) || used_[y] || s_.act(e, y) != y) {
        continue;
      }
      preimage_[e] = y;
      used_[y] = true;
      search(pos + 1, out);
      used_[y] = false;
      preimage_[e] = kUnset;
    }
  }

  void extend(std::vector<std::vector<index_t>>& out) {
    const std::size_t n = s_.degree();
    std::vector<index_t> phi(n, kUnset);
    for (index_t f = 0; f < s_.size(); ++f) {
      std::optional<point_t> y;
      for (index_t e : eligible_[f]) {
        point_t candidate = s_.act(f, preimage_[e]);
        if (y && *y != candidate) {
          return;
        }
        y = candidate;
      }
      if (!y || phi[*y] != kUnset) {
        return;
      }
      phi[*y] = f;
    }
    if (verify_action_hom(s_, phi)) {
      out.push_back(std::move(phi));
    }
  }

  const TransSemigroup& s_;
  std::vector<index_t> inverses_;
  std::vector<index_t> idems_;
  std::vector<std::vector<index_t>> eligible_;
  std::vector<point_t> preimage_;
  std::vector<bool> used_;
};

std::vector<std::vector<index_t>> idempotent_phis(const TransSemigroup& s) {
  auto c = classify(s);
  if (!c.is_inverse) {
    throw InputError(kModule,
                     "idempotent forcing requires an inverse semigroup");
  }
  if (!existence_precheck(s)) {
    return {};
  }
  return IdempotentForcer(s, c).run();
}

std::vector<std::vector<index_t>> bruteforce_phis(const TransSemigroup& s,
                                                  std::size_t limit) {
  if (s.degree() > limit) {
    throw CapacityError(kModule, "brute-force enumeration limited to degree "
                                     + std::to_string(limit) + ", got "
                                     + std::to_string(s.degree()));
  }
  std::vector<std::vector<index_t>> out;
  if (!existence_precheck(s)) {
    return out;
  }
  std::vector<index_t> phi(s.degree());
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (verify_action_hom(s, phi)) {
      out.push_back(phi);
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

std::vector<UnrepMap> to_maps(const TransSemigroup& s,
                              std::vector<std::vector<index_t>> phis) {
  std::sort(phis.begin(), phis.end());
  phis.erase(std::unique(phis.begin(), phis.end()), phis.end());
  std::vector<UnrepMap> maps;
  maps.reserve(phis.size());
  for (auto& phi : phis) {
    maps.emplace_back(s, std::move(phi));
  }
  return maps;
}

std::vector<Unrepresentation> with_tables(const TransSemigroup& s,
                                          const std::vector<UnrepMap>& maps) {
  std::vector<Unrepresentation> out;
  out.reserve(maps.size());
  for (const auto& m : maps) {
    out.push_back(induced_table(s, m));
  }
  return out;
}

}  // namespace

UnrepMap::UnrepMap(const TransSemigroup& s, std::vector<index_t> phi)
    : phi_(std::move(phi)), fingerprint_(s.fingerprint()) {
  if (phi_.size() != s.degree()) {
    throw InputError(kModule, "map has " + std::to_string(phi_.size())
                                  + " entries, degree is "
                                  + std::to_string(s.degree()));
  }
  for (index_t v : phi_) {
    if (v >= s.size()) {
      throw InputError(kModule, "element index " + std::to_string(v)
                                    + " out of range");
    }
  }
}

std::vector<point_t> UnrepMap::inverse() const {
  if (!is_bijection(phi_, phi_.size())) {
    throw InputError(kModule, "map is not a bijection");
  }
  std::vector<point_t> inv(phi_.size());
  for (std::size_t x = 0; x < phi_.size(); ++x) {
    inv[phi_[x]] = static_cast<point_t>(x);
  }
  return inv;
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::automatic:
      return "automatic";
    case Strategy::backtrack:
      return "backtrack";
    case Strategy::monoid:
      return "monoid";
    case Strategy::idempotent:
      return "idempotent";
    case Strategy::bruteforce:
      return "bruteforce";
  }
  return "unknown";
}

bool existence_precheck(const TransSemigroup& s) {
  return s.size() == s.degree();
}

bool verify_action_hom(const TransSemigroup& s, std::span<const index_t> phi) {
  if (!existence_precheck(s) || !is_bijection(phi, s.degree())) {
    return false;
  }
  for (index_t f = 0; f < s.size(); ++f) {
    for (point_t x = 0; x < s.degree(); ++x) {
      if (phi[s.act(f, x)] != s.product(f, phi[x])) {
        return false;
      }
    }
  }
  return true;
}

Unrepresentation induced_table(const TransSemigroup& s, const UnrepMap& phi) {
  if (phi.semigroup_fingerprint() != s.fingerprint()) {
    throw InputError(kModule, "map belongs to a different semigroup");
  }
  if (!verify_action_hom(s, phi.phi())) {
    throw InputError(kModule, "map is not an action isomorphism");
  }
  const std::size_t n = s.degree();
  std::vector<std::vector<index_t>> raw(n, std::vector<index_t>(n));
  for (point_t x = 0; x < n; ++x) {
    for (point_t y = 0; y < n; ++y) {
      raw[x][y] = s.act(phi[x], y);
    }
  }
  MulTable t;
  try {
    t = validate_table(raw);
  } catch (const NonAssociativeError& e) {
    throw TheoremViolation(kModule, std::string("induced multiplication: ")
                                        + e.what());
  }
  auto rep = represent(t);
  if (!(rep.semigroup == s)
      || !std::equal(rep.rep_map.begin(), rep.rep_map.end(),
                     phi.phi().begin(), phi.phi().end())) {
    throw TheoremViolation(kModule,
                           "induced table does not represent back to (S, phi)");
  }
  return {phi, std::move(t)};
}

Strategy resolve_strategy(const TransSemigroup& s,
                          const EnumerateOptions& opts) {
  if (opts.strategy != Strategy::automatic) {
    return opts.strategy;
  }
  if (s.identity()) {
    return Strategy::monoid;
  }
  if (existence_precheck(s) && classify(s).is_inverse) {
    return Strategy::idempotent;
  }
  return Strategy::backtrack;
}

std::vector<UnrepMap> enumerate_unrep_maps(const TransSemigroup& s,
                                           const EnumerateOptions& opts) {
  Strategy strategy = resolve_strategy(s, opts);
  if (strategy == Strategy::bruteforce) {
    return to_maps(s, bruteforce_phis(s, opts.bruteforce_degree_limit));
  }
  if (!existence_precheck(s)) {
    return {};
  }
  switch (strategy) {
    case Strategy::monoid:
      return to_maps(s, monoid_phis(s));
    case Strategy::idempotent:
      return to_maps(s, idempotent_phis(s));
    default:
      return to_maps(s, backtrack_phis(s, opts.jobs));
  }
}

std::vector<Unrepresentation> enumerate_unreps(const TransSemigroup& s,
                                               const EnumerateOptions& opts) {
  return with_tables(s, enumerate_unrep_maps(s, opts));
}

std::vector<Unrepresentation> enumerate_unreps_bruteforce(
    const TransSemigroup& s, std::size_t degree_limit) {
  return with_tables(s, to_maps(s, bruteforce_phis(s, degree_limit)));
}

std::vector<Unrepresentation> monoid_unreps(const TransSemigroup& s) {
  return with_tables(s, to_maps(s, monoid_phis(s)));
}

std::vector<Unrepresentation> idempotent_forced_unreps(
    const TransSemigroup& s) {
  return with_tables(s, to_maps(s, idempotent_phis(s)));
}

UnrepMap cyclic_unrep(const Transformation& p, point_t z) {
  if (!is_single_cycle(p)) {
    throw InputError(kModule, to_string(p) + " is not a single cycle");
  }
  if (z >= p.degree()) {
    throw InputError(kModule, "base point " + std::to_string(z)
                                  + " out of range");
  }
  std::vector<Transformation> gens{p};
  TransSemigroup s = closure(gens);
  std::vector<index_t> phi(p.degree(), kUnset);
  Transformation power = p;
  point_t x = p[z];
  for (std::size_t k = 1; k <= p.degree(); ++k) {
    phi[x] = *s.find(power);
    power = compose(p, power);
    x = p[x];
  }
  return UnrepMap(s, std::move(phi));
}

ForcingReport idempotent_forcing_check(const TransSemigroup& s,
                                       const UnrepMap& phi) {
  auto c = classify(s);
  if (!c.is_inverse) {
    throw InputError(kModule, "forcing check requires an inverse semigroup");
  }
  if (phi.semigroup_fingerprint() != s.fingerprint()
      || !verify_action_hom(s, phi.phi())) {
    throw InputError(kModule, "map is not an unrepresentation of S");
  }
  auto pre = phi.inverse();
  ForcingReport r;
  for (index_t f = 0; f < s.size(); ++f) {
    index_t base = s.product(c.inverses[f], f);
    for (index_t e : c.idempotents) {
      if (!natural_leq(s, base, e)) {
        continue;
      }
      ++r.checks;
      if (s.act(f, pre[e]) != pre[f]) {
        ++r.disagreements;
      }
    }
  }
  return r;
}

}  // namespace unrep
