#include "unrep/heap.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "unrep/error.hpp"

namespace unrep {

namespace {

constexpr const char* kModule = "heap-torsor";
constexpr index_t kUnset = std::numeric_limits<index_t>::max();

void require_same(const TransSemigroup& s, const UnrepMap& m) {
  if (m.semigroup_fingerprint() != s.fingerprint()) {
    throw InputError(kModule, "maps belong to different semigroups");
  }
}

// The heap's ternary operation on carrier indices, tabulated. Entries are
// kUnset where the result falls outside the carrier.
std::vector<index_t> ternary_table(const HeapCarrier& h) {
  const std::size_t m = h.size();
  std::vector<index_t> t(m * m * m, kUnset);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        auto r = h.find(heap_op(h.semigroup(), h[a], h[b], h[c]));
        if (r) {
          t[(a * m + b) * m + c] = static_cast<index_t>(*r);
        }
      }
    }
  }
  return t;
}

}  // namespace

HeapCarrier::HeapCarrier(TransSemigroup s, std::vector<UnrepMap> items)
    : s_(std::move(s)), items_(std::move(items)) {
  if (items_.empty()) {
    throw InputError(kModule, "a heap carrier must be nonempty");
  }
  for (const auto& m : items_) {
    require_same(s_, m);
    if (!verify_action_hom(s_, m.phi())) {
      throw InputError(kModule, "carrier item is not an unrepresentation");
    }
  }
  auto sorted = items_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError(kModule, "carrier items are not distinct");
  }
}

std::optional<std::size_t> HeapCarrier::find(const UnrepMap& m) const {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] == m) {
      return i;
    }
  }
  return std::nullopt;
}

UnrepMap heap_op(const TransSemigroup& s, const UnrepMap& a, const UnrepMap& b,
                 const UnrepMap& c) {
  require_same(s, a);
  require_same(s, b);
  require_same(s, c);
  auto b_inv = b.inverse();
  std::vector<index_t> phi(a.degree());
  for (point_t x = 0; x < phi.size(); ++x) {
    phi[x] = a[b_inv[c[x]]];
  }
  return UnrepMap(s, std::move(phi));
}

bool heap_axioms_check(const HeapCarrier& h) {
  const std::size_t m = h.size();
  auto t = ternary_table(h);
  if (std::find(t.begin(), t.end(), kUnset) != t.end()) {
    return false;
  }
  auto op = [&](std::size_t a, std::size_t b, std::size_t c) {
    return static_cast<std::size_t>(t[(a * m + b) * m + c]);
  };
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (op(x, x, y) != y || op(y, x, x) != y) {
        return false;
      }
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = 0; w < m; ++w) {
      for (std::size_t x = 0; x < m; ++x) {
        std::size_t vwx = op(v, w, x);
        for (std::size_t y = 0; y < m; ++y) {
          for (std::size_t z = 0; z < m; ++z) {
            if (op(v, w, op(x, y, z)) != op(vwx, y, z)) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

GroupTable group_from_identity(const HeapCarrier& h, std::size_t e) {
  if (e >= h.size()) {
    throw InputError(kModule, "identity index " + std::to_string(e)
                                  + " out of range for heap of size "
                                  + std::to_string(h.size()));
  }
  const std::size_t m = h.size();
  std::vector<std::vector<index_t>> raw(m, std::vector<index_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto r = h.find(heap_op(h.semigroup(), h[i], h[e], h[j]));
      if (!r) {
        throw TheoremViolation(kModule, "heap carrier not closed under t");
      }
      raw[i][j] = static_cast<index_t>(*r);
    }
  }
  try {
    return GroupTable::from_table(raw, static_cast<index_t>(e));
  } catch (const InputError& err) {
    throw TheoremViolation(kModule,
                           std::string("heap group is not a group: ")
                               + err.what());
  }
}

namespace {

class CentralizerSearch {
 public:
  CentralizerSearch(const TransSemigroup& s, bool invertible_only)
      : s_(s),
        n_(static_cast<point_t>(s.degree())),
        gens_(s.generating_indices()),
        image_(n_, kUnset),
        used_(n_, false),
        invertible_only_(invertible_only) {}

  std::vector<Transformation> run() {
    std::vector<Transformation> out;
    search(0, out);
    return out;
  }

 private:
  bool assign(point_t x, point_t y) {
    if (!set(x, y)) {
      return false;
    }
    std::vector<point_t> queue{x};
    while (!queue.empty()) {
      point_t a = queue.back();
      queue.pop_back();
      for (index_t g : gens_) {
        point_t ga = s_.act(g, a);
        point_t value = s_.act(g, image_[a]);
        if (image_[ga] == kUnset) {
          if (!set(ga, value)) {
            return false;
          }
          queue.push_back(ga);
        } else if (image_[ga] != value) {
          return false;
        }
      }
    }
    return true;
  }

  bool set(point_t x, point_t y) {
    if (invertible_only_ && used_[y]) {
      return false;
    }
    image_[x] = y;
    used_[y] = true;
    trail_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      point_t x = trail_.back();
      trail_.pop_back();
      used_[image_[x]] = false;
      image_[x] = kUnset;
    }
    // used_ is only meaningful in invertible mode, where images are distinct.
  }

  void search(point_t x, std::vector<Transformation>& out) {
    while (x < n_ && image_[x] != kUnset) {
      ++x;
    }
    if (x == n_) {
      out.emplace_back(std::vector<point_t>(image_.begin(), image_.end()));
      return;
    }
    for (point_t y = 0; y < n_; ++y) {
      std::size_t mark = trail_.size();
      if (assign(x, y)) {
        search(x + 1, out);
      }
      undo(mark);
    }
  }

  const TransSemigroup& s_;
  point_t n_;
  std::vector<index_t> gens_;
  std::vector<point_t> image_;
  std::vector<bool> used_;
  std::vector<point_t> trail_;
  bool invertible_only_;
};

std::vector<Transformation> exhaustive_centralizer(const TransSemigroup& s) {
  const auto n = static_cast<point_t>(s.degree());
  auto gens = s.generating_indices();
  std::vector<point_t> c(n, 0);
  std::vector<Transformation> out;
  while (true) {
    bool commutes = true;
    for (index_t g : gens) {
      for (point_t x = 0; x < n && commutes; ++x) {
        commutes = c[s.act(g, x)] == s.act(g, c[x]);
      }
      if (!commutes) {
        break;
      }
    }
    if (commutes) {
      out.emplace_back(c);
    }
    // Odometer over all n^n maps, last position fastest.
    point_t pos = n;
    while (pos > 0) {
      --pos;
      if (++c[pos] < n) {
        break;
      }
      c[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
  }
}

}  // namespace

CentralizerSet centralizer(const TransSemigroup& s, CentralizerMode mode,
                           bool invertible_only) {
  if (mode == CentralizerMode::automatic) {
    mode = s.degree() <= exhaustive_centralizer_degree_limit
               ? CentralizerMode::exhaustive
               : CentralizerMode::backtrack;
  }
  CentralizerSet r;
  if (mode == CentralizerMode::exhaustive) {
    if (s.degree() > exhaustive_centralizer_degree_limit) {
      throw CapacityError(kModule,
                          "exhaustive centralizer scan limited to degree "
                              + std::to_string(
                                  exhaustive_centralizer_degree_limit));
    }
    r.all_elements = exhaustive_centralizer(s);
    if (invertible_only) {
      std::erase_if(r.all_elements,
                    [](const Transformation& t) { return !t.is_permutation(); });
    }
  } else {
    r.all_elements = CentralizerSearch(s, invertible_only).run();
  }
  std::sort(r.all_elements.begin(), r.all_elements.end());
  for (const auto& c : r.all_elements) {
    if (c.is_permutation()) {
      r.invertible.push_back(c);
    }
  }
  return r;
}

CentralizerVerdict theorem_centralizer_check(const TransSemigroup& s,
                                             const EnumerateOptions& opts) {
  auto maps = enumerate_unrep_maps(s, opts);
  if (maps.empty()) {
    throw PreconditionError(kModule,
                            "the centralizer theorem needs at least one "
                            "unrepresentation");
  }
  HeapCarrier heap(s, maps);
  const std::size_t e = 0;
  auto cent = centralizer(s, CentralizerMode::automatic, true);
  CentralizerVerdict v{group_from_identity(heap, e),
                       composition_group(cent.invertible), std::nullopt, false};
  v.witness = is_isomorphic(v.centralizer_group, v.heap_group);

  // c -> e o c.
  std::vector<index_t> translation;
  bool ok = true;
  for (const auto& c : cent.invertible) {
    std::vector<index_t> phi(s.degree());
    for (point_t x = 0; x < s.degree(); ++x) {
      phi[x] = heap[e][c[x]];
    }
    auto idx = heap.find(UnrepMap(s, std::move(phi)));
    if (!idx) {
      ok = false;
      break;
    }
    translation.push_back(static_cast<index_t>(*idx));
  }
  if (ok && translation.size() == heap.size()) {
    auto sorted = translation;
    std::sort(sorted.begin(), sorted.end());
    ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const auto& cg = v.centralizer_group;
    for (index_t a = 0; a < cg.order() && ok; ++a) {
      for (index_t b = 0; b < cg.order() && ok; ++b) {
        ok = translation[cg(a, b)]
             == v.heap_group(translation[a], translation[b]);
      }
    }
  } else {
    ok = false;
  }
  v.translation_is_isomorphism = ok;
  return v;
}

std::vector<index_t> units(const MulTable& t) {
  std::vector<index_t> out;
  auto one = t.identity();
  if (!one) {
    return out;
  }
  for (index_t u = 0; u < t.order(); ++u) {
    for (index_t v = 0; v < t.order(); ++v) {
      if (t(u, v) == *one && t(v, u) == *one) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

namespace {

// Bijections alpha with alpha(x y) = x alpha(y): assigning alpha(y) = v
// forces alpha(x y) = x v for every x.
class PseudounitSearch {
 public:
  explicit PseudounitSearch(const MulTable& t)
      : t_(t),
        n_(static_cast<index_t>(t.order())),
        alpha_(n_, kUnset),
        used_(n_, false) {}

  std::vector<Pseudounit> run() {
    std::vector<Pseudounit> out;
    search(0, out);
    return out;
  }

 private:
  bool assign(index_t y, index_t v) {
    if (!set(y, v)) {
      return false;
    }
    std::vector<index_t> queue{y};
    while (!queue.empty()) {
      index_t a = queue.back();
      queue.pop_back();
      for (index_t x = 0; x < n_; ++x) {
        index_t xa = t_(x, a);
        index_t value = t_(x, alpha_[a]);
        if (alpha_[xa] == kUnset) {
          if (!set(xa, value)) {
            return false;
          }
          queue.push_back(xa);
        } else if (alpha_[xa] != value) {
          return false;
        }
      }
    }
    return true;
  }

  bool set(index_t y, index_t v) {
    if (used_[v]) {
      return false;
    }
    alpha_[y] = v;
    used_[v] = true;
    trail_.push_back(y);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      index_t y = trail_.back();
      trail_.pop_back();
      used_[alpha_[y]] = false;
      alpha_[y] = kUnset;
    }
  }

  void search(index_t y, std::vector<Pseudounit>& out) {
    while (y < n_ && alpha_[y] != kUnset) {
      ++y;
    }
    if (y == n_) {
      out.push_back({alpha_});
      return;
    }
    for (index_t v = 0; v < n_; ++v) {
      std::size_t mark = trail_.size();
      if (assign(y, v)) {
        search(y + 1, out);
      }
      undo(mark);
    }
  }

  const MulTable& t_;
  index_t n_;
  std::vector<index_t> alpha_;
  std::vector<bool> used_;
  std::vector<index_t> trail_;
};

}  // namespace

PseudounitGroup pseudounits(const MulTable& t, PseudounitMethod method) {
  auto one = t.identity();
  if (method == PseudounitMethod::automatic) {
    method = one ? PseudounitMethod::translation : PseudounitMethod::backtrack;
  }
  std::vector<Pseudounit> elems;
  if (method == PseudounitMethod::translation) {
    if (!one) {
      throw InputError(kModule, "translation pseudounits require a monoid");
    }
    for (index_t u : units(t)) {
      Pseudounit p;
      for (index_t y = 0; y < t.order(); ++y) {
        p.alpha.push_back(t(y, u));
      }
      elems.push_back(std::move(p));
    }
  } else {
    elems = PseudounitSearch(t).run();
  }
  std::sort(elems.begin(), elems.end());

  const std::size_t m = elems.size();
  std::map<std::vector<index_t>, index_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    index.emplace(elems[i].alpha, static_cast<index_t>(i));
  }
  std::vector<index_t> id(t.order());
  for (index_t y = 0; y < t.order(); ++y) {
    id[y] = y;
  }
  auto id_it = index.find(id);
  if (id_it == index.end()) {
    throw TheoremViolation(kModule, "identity is missing from pseudounits");
  }
  std::vector<std::vector<index_t>> raw(m, std::vector<index_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<index_t> c(t.order());
      for (index_t y = 0; y < t.order(); ++y) {
        c[y] = elems[i].alpha[elems[j].alpha[y]];
      }
      auto it = index.find(c);
      if (it == index.end()) {
        throw TheoremViolation(kModule,
                               "pseudounits not closed under composition");
      }
      raw[i][j] = it->second;
    }
  }
  try {
    return {std::move(elems), GroupTable::from_table(raw, id_it->second)};
  } catch (const InputError& err) {
    throw TheoremViolation(kModule, std::string("pseudounits: ") + err.what());
  }
}

DualityVerdict pseudounit_duality_check(const MulTable& m) {
  auto one = m.identity();
  if (!one) {
    throw InputError(kModule, "duality check requires a monoid");
  }
  auto p = pseudounits(m, PseudounitMethod::backtrack);
  auto inv = units(m);
  DualityVerdict v;
  v.pseudounit_count = p.elements.size();
  v.unit_count = inv.size();

  std::vector<index_t> k;
  for (const auto& a : p.elements) {
    k.push_back(a.alpha[*one]);
  }
  auto sorted = k;
  std::sort(sorted.begin(), sorted.end());
  v.bijective = sorted == inv;

  v.anti_homomorphism = true;
  for (index_t i = 0; i < p.elements.size(); ++i) {
    for (index_t j = 0; j < p.elements.size(); ++j) {
      ++v.pairs_checked;
      if (k[p.group(i, j)] != m(k[j], k[i])) {
        v.anti_homomorphism = false;
      }
    }
  }
  return v;
}

bool heap_torsor_check(const HeapCarrier& h, std::size_t e) {
  auto g = group_from_identity(h, e);
  return torsor_check(g, g.rows());
}

namespace {

struct UnitAction {
  std::vector<index_t> units;
  std::vector<index_t> inverse;
};

UnitAction unit_action(const TransSemigroup& s) {
  auto one = *s.identity();
  UnitAction ua;
  for (index_t u = 0; u < s.size(); ++u) {
    for (index_t v = 0; v < s.size(); ++v) {
      if (s.product(u, v) == one && s.product(v, u) == one) {
        ua.units.push_back(u);
        ua.inverse.push_back(v);
        break;
      }
    }
  }
  return ua;
}

UnrepMap act_on_map(const TransSemigroup& s, index_t u_inverse,
                    const UnrepMap& phi) {
  std::vector<index_t> out(phi.degree());
  for (point_t x = 0; x < out.size(); ++x) {
    out[x] = s.product(phi[x], u_inverse);
  }
  return UnrepMap(s, std::move(out));
}

}  // namespace

BetaVerdict beta_square_check(const TransSemigroup& s) {
  auto one = s.identity();
  if (!one) {
    throw InputError(kModule, "beta square requires a transformation monoid");
  }
  auto maps = enumerate_unrep_maps(s);
  if (maps.empty()) {
    throw PreconditionError(kModule,
                            "beta square needs at least one unrepresentation");
  }
  auto ua = unit_action(s);
  BetaVerdict v;
  v.actions_valid = true;
  v.square_commutes = true;
  for (std::size_t k = 0; k < ua.units.size(); ++k) {
    for (const auto& phi : maps) {
      ++v.pairs_checked;
      auto moved = act_on_map(s, ua.inverse[k], phi);
      if (!verify_action_hom(s, moved.phi())) {
        v.actions_valid = false;
        v.square_commutes = false;
        continue;
      }
      point_t before = phi.inverse()[*one];
      point_t after = moved.inverse()[*one];
      if (after != s.act(ua.units[k], before)) {
        v.square_commutes = false;
      }
    }
  }
  return v;
}

GroupTorsorReport group_torsor_isomorphism(const TransSemigroup& s) {
  if (!classify(s).is_group) {
    throw InputError(kModule, "torsor comparison requires a group");
  }
  auto maps = enumerate_unrep_maps(s);
  if (maps.empty()) {
    throw PreconditionError(kModule,
                            "torsor comparison needs an unrepresentation");
  }
  auto ua = unit_action(s);
  auto group = composition_group(s.elements());

  // action[g][k]: element g of S moving map k.
  const std::size_t m = maps.size();
  std::vector<std::vector<index_t>> action(s.size(), std::vector<index_t>(m));
  for (index_t g = 0; g < s.size(); ++g) {
    for (std::size_t k = 0; k < m; ++k) {
      auto moved = act_on_map(s, ua.inverse[g], maps[k]);
      auto it = std::lower_bound(maps.begin(), maps.end(), moved);
      if (it == maps.end() || !(*it == moved)) {
        throw TheoremViolation(kModule, "unit action leaves the unrep set");
      }
      action[g][k] = static_cast<index_t>(it - maps.begin());
    }
  }
  GroupTorsorReport r;
  r.torsor = torsor_check(group, action);

  for (point_t x = 0; x < s.degree(); ++x) {
    std::vector<point_t> b(m, kUnset);
    bool ok = true;
    for (index_t g = 0; g < s.size() && ok; ++g) {
      index_t k = action[g][0];
      point_t y = s.act(g, x);
      if (b[k] == kUnset) {
        b[k] = y;
      } else {
        ok = b[k] == y;
      }
    }
    if (!ok || std::find(b.begin(), b.end(), kUnset) != b.end()) {
      continue;
    }
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      continue;
    }
    for (index_t g = 0; g < s.size() && ok; ++g) {
      for (std::size_t k = 0; k < m && ok; ++k) {
        ok = b[action[g][k]] == s.act(g, b[k]);
      }
    }
    if (ok) {
      r.witness = std::move(b);
      break;
    }
  }
  return r;
}

}  // namespace unrep
