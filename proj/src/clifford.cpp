#include "unrep/clifford.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "unrep/error.hpp"

namespace unrep {

namespace {

constexpr const char* kModule = "clifford";
constexpr index_t kUnset = std::numeric_limits<index_t>::max();

template <typename T>
std::vector<T> sorted_unique(std::span<const T> in) {
  std::vector<T> out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const ClassificationReport& require_clifford(const ClassificationReport& c) {
  if (!c.is_clifford) {
    throw InputError(kModule, "semigroup is not Clifford");
  }
  return c;
}

}  // namespace

std::size_t CliffordDecomposition::position(index_t idempotent) const {
  auto it = std::lower_bound(idempotents.begin(), idempotents.end(), idempotent);
  if (it == idempotents.end() || *it != idempotent) {
    throw InputError(kModule, "index " + std::to_string(idempotent)
                                  + " is not an idempotent");
  }
  return static_cast<std::size_t>(it - idempotents.begin());
}

CliffordDecomposition decompose(const TransSemigroup& s) {
  auto c = classify(s);
  require_clifford(c);
  CliffordDecomposition d;
  d.idempotents = c.idempotents;
  d.inverses = c.inverses;
  d.components.resize(d.idempotents.size());
  d.component_of.resize(s.size());
  for (index_t x = 0; x < s.size(); ++x) {
    index_t e = s.product(x, d.inverses[x]);
    std::size_t k = d.position(e);
    d.components[k].push_back(x);
    d.component_of[x] = k;
  }
  for (index_t f : d.idempotents) {
    for (index_t e : d.idempotents) {
      if (natural_leq(s, f, e)) {
        d.order_pairs.emplace_back(f, e);
        CliffordDecomposition::Connecting conn{f, e, {}};
        for (index_t x : d.component(e)) {
          conn.images.push_back(s.product(f, x));
        }
        d.connecting.push_back(std::move(conn));
      }
    }
  }
  if (!decomposition_invariants_hold(s, d)) {
    throw TheoremViolation(kModule, "Clifford decomposition is inconsistent");
  }
  return d;
}

bool decomposition_invariants_hold(const TransSemigroup& s,
                                   const CliffordDecomposition& d) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const auto& comp = d.components[k];
    index_t e = d.idempotents[k];
    total += comp.size();
    if (!std::binary_search(comp.begin(), comp.end(), e)) {
      return false;
    }
    for (index_t x : comp) {
      if (d.component_of[x] != k || s.product(e, x) != x
          || s.product(x, e) != x) {
        return false;
      }
      bool has_inverse = false;
      for (index_t y : comp) {
        if (!std::binary_search(comp.begin(), comp.end(), s.product(x, y))) {
          return false;
        }
        has_inverse = has_inverse
                      || (s.product(x, y) == e && s.product(y, x) == e);
      }
      if (!has_inverse) {
        return false;
      }
    }
  }
  if (total != s.size()) {
    return false;
  }

  auto find_conn = [&](index_t f, index_t e) -> const CliffordDecomposition::Connecting* {
    for (const auto& c : d.connecting) {
      if (c.lower == f && c.upper == e) {
        return &c;
      }
    }
    return nullptr;
  };
  for (const auto& conn : d.connecting) {
    const auto& upper = d.component(conn.upper);
    const auto& lower = d.component(conn.lower);
    auto image = [&](index_t x) {
      auto pos = std::lower_bound(upper.begin(), upper.end(), x) - upper.begin();
      return conn.images[static_cast<std::size_t>(pos)];
    };
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (!std::binary_search(lower.begin(), lower.end(), conn.images[i])) {
        return false;
      }
      for (index_t y : upper) {
        if (image(s.product(upper[i], y))
            != s.product(conn.images[i], image(y))) {
          return false;
        }
      }
    }
    // Functoriality: connect(g <= f) o connect(f <= e) = connect(g <= e).
    for (const auto& inner : d.connecting) {
      if (inner.upper != conn.lower) {
        continue;
      }
      const auto* direct = find_conn(inner.lower, conn.upper);
      if (direct == nullptr) {
        return false;
      }
      const auto& mid = d.component(conn.lower);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        auto pos = std::lower_bound(mid.begin(), mid.end(), conn.images[i])
                   - mid.begin();
        if (inner.images[static_cast<std::size_t>(pos)] != direct->images[i]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_action_closed(const TransSemigroup& s, std::span<const index_t> sub,
                      std::span<const point_t> y) {
  auto ys = sorted_unique(y);
  std::vector<point_t> image;
  for (index_t f : sub) {
    if (f >= s.size()) {
      return false;
    }
    for (point_t p : ys) {
      if (p >= s.degree()) {
        return false;
      }
      image.push_back(s.act(f, p));
    }
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image == ys;
}

bool is_subsemigroup(const TransSemigroup& s, std::span<const index_t> sub) {
  auto set = sorted_unique(sub);
  if (set.empty() || set.back() >= s.size()) {
    return false;
  }
  for (index_t a : set) {
    for (index_t b : set) {
      if (!std::binary_search(set.begin(), set.end(), s.product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

Deflation deflate(const TransSemigroup& s, std::span<const point_t> y) {
  auto ys = sorted_unique(y);
  std::vector<index_t> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  if (ys.empty() || !is_action_closed(s, all, ys)) {
    throw InputError(kModule, "deflation needs a nonempty action-closed Y");
  }
  auto position = [&](point_t p) {
    return static_cast<point_t>(std::lower_bound(ys.begin(), ys.end(), p)
                                - ys.begin());
  };
  std::vector<Transformation> restricted;
  restricted.reserve(s.size());
  for (index_t f = 0; f < s.size(); ++f) {
    std::vector<point_t> im;
    for (point_t p : ys) {
      im.push_back(position(s.act(f, p)));
    }
    restricted.emplace_back(std::move(im));
  }
  auto sub = TransSemigroup::from_elements(restricted);
  Deflation d{ys, sub, {}};
  for (const auto& r : restricted) {
    d.quotient.push_back(*d.semigroup.find(r));
  }
  for (index_t a = 0; a < s.size(); ++a) {
    for (index_t b = 0; b < s.size(); ++b) {
      if (d.semigroup.product(d.quotient[a], d.quotient[b])
          != d.quotient[s.product(a, b)]) {
        throw TheoremViolation(kModule, "restriction is not a homomorphism");
      }
    }
  }
  return d;
}

bool verify_underrep(const TransSemigroup& s, std::span<const index_t> sub,
                     std::span<const point_t> y,
                     std::span<const index_t> phi_y) {
  if (y.empty() || phi_y.size() != y.size()) {
    return false;
  }
  auto ys = sorted_unique(y);
  auto subs = sorted_unique(sub);
  if (ys.size() != y.size() || ys.back() >= s.degree()) {
    return false;
  }
  auto images = sorted_unique(phi_y);
  if (images.size() != phi_y.size() || images != subs) {
    return false;
  }
  if (!is_action_closed(s, subs, ys)) {
    return false;
  }
  std::vector<index_t> phi(s.degree(), kUnset);
  for (std::size_t k = 0; k < y.size(); ++k) {
    phi[y[k]] = phi_y[k];
  }
  for (index_t f : subs) {
    for (point_t p : ys) {
      if (phi[s.act(f, p)] != s.product(f, phi[p])) {
        return false;
      }
    }
  }
  return true;
}

Underrepresentation restrict_unrep(const TransSemigroup& s, const UnrepMap& phi,
                                   std::span<const index_t> sub) {
  if (!is_subsemigroup(s, sub)) {
    throw InputError(kModule, "element set is not a subsemigroup");
  }
  if (phi.semigroup_fingerprint() != s.fingerprint()
      || !verify_action_hom(s, phi.phi())) {
    throw InputError(kModule, "map is not an unrepresentation of S");
  }
  Underrepresentation u;
  u.subsemigroup = sorted_unique(sub);
  for (point_t x = 0; x < s.degree(); ++x) {
    if (std::binary_search(u.subsemigroup.begin(), u.subsemigroup.end(),
                           phi[x])) {
      u.carrier.push_back(x);
      u.phi.push_back(phi[x]);
    }
  }
  if (!verify_underrep(s, u.subsemigroup, u.carrier, u.phi)) {
    throw TheoremViolation(kModule,
                           "restriction of an unrepresentation to a "
                           "subsemigroup is not an underrepresentation");
  }
  const std::size_t m = u.carrier.size();
  u.induced.assign(m, std::vector<index_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      point_t p = s.act(u.phi[i], u.carrier[j]);
      u.induced[i][j] = static_cast<index_t>(
          std::lower_bound(u.carrier.begin(), u.carrier.end(), p)
          - u.carrier.begin());
    }
  }
  return u;
}

TheoremCVerdict theorem_c_check(const TransSemigroup& s,
                                std::span<const index_t> phi) {
  return theorem_c_check(s, decompose(s), phi);
}

TheoremCVerdict theorem_c_check(const TransSemigroup& s,
                                const CliffordDecomposition& d,
                                std::span<const index_t> phi) {
  if (!existence_precheck(s)) {
    throw InputError(kModule, "component check needs |S| == degree");
  }
  if (phi.size() != s.degree() || sorted_unique(phi).size() != phi.size()
      || *std::max_element(phi.begin(), phi.end()) >= s.size()) {
    throw InputError(kModule, "component check needs a bijection X -> S");
  }
  TheoremCVerdict v;
  v.action_hom = verify_action_hom(s, phi);

  bool family = true;
  for (std::size_t k = 0; k < d.idempotents.size() && family; ++k) {
    const auto& comp = d.components[k];
    std::vector<point_t> y;
    std::vector<index_t> phi_y;
    for (point_t x = 0; x < s.degree(); ++x) {
      if (d.component_of[phi[x]] == k) {
        y.push_back(x);
        phi_y.push_back(phi[x]);
      }
    }
    family = verify_underrep(s, comp, y, phi_y);
  }
  for (std::size_t p = 0; p < d.order_pairs.size() && family; ++p) {
    auto [f, e] = d.order_pairs[p];
    std::size_t ke = d.position(e);
    for (point_t x = 0; x < s.degree() && family; ++x) {
      if (d.component_of[phi[x]] != ke) {
        continue;
      }
      auto pos = std::lower_bound(d.components[ke].begin(),
                                  d.components[ke].end(), phi[x])
                 - d.components[ke].begin();
      family = phi[s.act(f, x)]
               == d.connecting[p].images[static_cast<std::size_t>(pos)];
    }
  }
  v.compatible_family = family;
  return v;
}

TheoremCSweep theorem_c_sweep(const TransSemigroup& s, std::uint64_t seed,
                              std::size_t exhaustive_limit,
                              std::size_t samples) {
  auto d = decompose(s);
  if (!existence_precheck(s)) {
    throw InputError(kModule, "component check needs |S| == degree");
  }
  TheoremCSweep r;
  std::vector<index_t> phi(s.degree());
  std::iota(phi.begin(), phi.end(), 0);
  auto check = [&] {
    auto v = theorem_c_check(s, d, phi);
    ++r.bijections_checked;
    r.unreps_found += v.action_hom ? 1 : 0;
    r.disagreements += v.agree() ? 0 : 1;
  };
  if (s.degree() <= exhaustive_limit) {
    r.exhaustive = true;
    do {
      check();
    } while (std::next_permutation(phi.begin(), phi.end()));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      std::shuffle(phi.begin(), phi.end(), rng);
      check();
    }
  }
  return r;
}

std::vector<Unrepresentation> clifford_monoid_unreps(const TransSemigroup& s) {
  auto c = classify(s);
  require_clifford(c);
  if (!c.is_monoid) {
    throw InputError(kModule, "semigroup is not a transformation monoid");
  }
  std::vector<UnrepMap> maps;
  if (existence_precheck(s)) {
    for (point_t y = 0; y < s.degree(); ++y) {
      std::vector<index_t> phi(s.degree(), kUnset);
      bool bijective = true;
      for (index_t f = 0; f < s.size() && bijective; ++f) {
        point_t p = s.act(f, y);
        bijective = phi[p] == kUnset;
        phi[p] = f;
      }
      if (bijective && verify_action_hom(s, phi)) {
        maps.emplace_back(s, std::move(phi));
      }
    }
  }
  std::sort(maps.begin(), maps.end());
  EnumerateOptions opts;
  opts.strategy = Strategy::backtrack;
  if (maps != enumerate_unrep_maps(s, opts)) {
    throw TheoremViolation(kModule,
                           "evaluation maps differ from the full enumeration");
  }
  std::vector<Unrepresentation> out;
  for (const auto& m : maps) {
    out.push_back(induced_table(s, m));
  }
  return out;
}

namespace {

// Injective assignment of points to the members of comp, checked against
// the underrepresentation conditions once complete.
bool component_has_underrep(const TransSemigroup& s,
                            const std::vector<index_t>& comp) {
  const std::size_t n = s.degree();
  const std::size_t k = comp.size();
  std::vector<point_t> y(k);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == k) {
      return verify_underrep(s, comp, y, comp);
    }
    for (point_t p = 0; p < n; ++p) {
      if (used[p]) {
        continue;
      }
      used[p] = true;
      y[pos] = p;
      bool found = self(self, pos + 1);
      used[p] = false;
      if (found) {
        return true;
      }
    }
    return false;
  };
  return k <= n && search(search, 0);
}

}  // namespace

ComponentExistence component_underrep_existence(const TransSemigroup& s) {
  auto c = classify(s);
  require_clifford(c);
  if (!c.is_monoid) {
    throw InputError(kModule, "semigroup is not a transformation monoid");
  }
  if (s.degree() > component_search_degree_limit) {
    throw CapacityError(kModule, "component search limited to degree "
                                     + std::to_string(
                                         component_search_degree_limit));
  }
  auto d = decompose(s);
  ComponentExistence r;
  r.idempotents = d.idempotents;
  r.conjunction = true;
  for (const auto& comp : d.components) {
    bool ok = component_has_underrep(s, comp);
    r.has_underrep.push_back(ok);
    r.conjunction = r.conjunction && ok;
  }
  r.unreps_exist = !enumerate_unrep_maps(s).empty();
  return r;
}

}  // namespace unrep
