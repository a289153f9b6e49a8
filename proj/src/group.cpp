#include "unrep/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "unrep/error.hpp"

namespace unrep {

namespace {
constexpr const char* kModule = "heap-torsor";
constexpr index_t kUnset = std::numeric_limits<index_t>::max();
}  // namespace

GroupTable GroupTable::from_table(const std::vector<std::vector<index_t>>& raw,
                                  index_t identity) {
  const std::size_t n = raw.size();
  if (n == 0 || identity >= n) {
    throw InputError(kModule, "group table needs a valid identity index");
  }
  GroupTable g;
  g.order_ = n;
  g.identity_ = identity;
  for (const auto& row : raw) {
    if (row.size() != n) {
      throw InputError(kModule, "group table is not square");
    }
    for (index_t v : row) {
      if (v >= n) {
        throw InputError(kModule, "group table entry out of range");
      }
      g.cells_.push_back(v);
    }
  }
  for (index_t a = 0; a < n; ++a) {
    if (g(identity, a) != a || g(a, identity) != a) {
      throw InputError(kModule, "identity law fails at " + std::to_string(a));
    }
    for (index_t b = 0; b < n; ++b) {
      for (index_t c = 0; c < n; ++c) {
        if (g(g(a, b), c) != g(a, g(b, c))) {
          throw InputError(kModule, "group table is not associative");
        }
      }
    }
  }
  g.inverses_.assign(n, kUnset);
  for (index_t a = 0; a < n; ++a) {
    for (index_t b = 0; b < n; ++b) {
      if (g(a, b) == identity && g(b, a) == identity) {
        g.inverses_[a] = b;
        break;
      }
    }
    if (g.inverses_[a] == kUnset) {
      throw InputError(kModule, "element " + std::to_string(a)
                                    + " has no inverse");
    }
  }
  return g;
}

std::size_t GroupTable::element_order(index_t a) const {
  std::size_t k = 1;
  for (index_t x = a; x != identity_; x = (*this)(x, a)) {
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (index_t a = 0; a < order_; ++a) {
    for (index_t b = a + 1; b < order_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool GroupTable::is_cyclic() const {
  for (index_t a = 0; a < order_; ++a) {
    if (element_order(a) == order_) {
      return true;
    }
  }
  return false;
}

std::vector<std::vector<index_t>> GroupTable::rows() const {
  std::vector<std::vector<index_t>> out(order_, std::vector<index_t>(order_));
  for (index_t a = 0; a < order_; ++a) {
    for (index_t b = 0; b < order_; ++b) {
      out[a][b] = (*this)(a, b);
    }
  }
  return out;
}

GroupTable composition_group(const std::vector<Transformation>& perms) {
  if (perms.empty()) {
    throw InputError(kModule, "empty permutation set");
  }
  std::map<Transformation, index_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<index_t>(i));
  }
  std::vector<std::vector<index_t>> raw(perms.size(),
                                        std::vector<index_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      auto it = index.find(compose(perms[i], perms[j]));
      if (it == index.end()) {
        throw InputError(kModule, "permutation set is not closed");
      }
      raw[i][j] = it->second;
    }
  }
  auto id = index.find(Transformation::identity(perms.front().degree()));
  if (id == index.end()) {
    throw InputError(kModule, "permutation set lacks the identity");
  }
  return GroupTable::from_table(raw, id->second);
}

namespace {

// Generating set chosen greedily by descending element order.
std::vector<index_t> generating_set(const GroupTable& g) {
  std::vector<index_t> by_order(g.order());
  for (index_t a = 0; a < g.order(); ++a) {
    by_order[a] = a;
  }
  std::stable_sort(by_order.begin(), by_order.end(), [&](index_t a, index_t b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<bool> in_subgroup(g.order(), false);
  in_subgroup[g.identity()] = true;
  std::vector<index_t> gens;
  for (index_t a : by_order) {
    if (in_subgroup[a]) {
      continue;
    }
    gens.push_back(a);
    std::vector<index_t> members;
    for (index_t x = 0; x < g.order(); ++x) {
      if (in_subgroup[x]) {
        members.push_back(x);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (index_t s : gens) {
        index_t y = g(members[i], s);
        if (!in_subgroup[y]) {
          in_subgroup[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const GroupTable& g, const GroupTable& h)
      : g_(g), h_(h), gens_(generating_set(g)) {}

  std::optional<std::vector<index_t>> run() {
    std::vector<index_t> map(g_.order(), kUnset);
    std::vector<bool> used(h_.order(), false);
    map[g_.identity()] = h_.identity();
    used[h_.identity()] = true;
    if (search(0, map, used)) {
      return map;
    }
    return std::nullopt;
  }

 private:
  // Extends map along right multiplication by the first `count` generators.
  bool extend(std::size_t count, std::vector<index_t>& map,
              std::vector<bool>& used) const {
    std::vector<index_t> queue;
    for (index_t x = 0; x < g_.order(); ++x) {
      if (map[x] != kUnset) {
        queue.push_back(x);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      index_t x = queue[i];
      for (std::size_t k = 0; k < count; ++k) {
        index_t gx = g_(x, gens_[k]);
        index_t hx = h_(map[x], map[gens_[k]]);
        if (map[gx] == kUnset) {
          if (used[hx]) {
            return false;
          }
          map[gx] = hx;
          used[hx] = true;
          queue.push_back(gx);
        } else if (map[gx] != hx) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t k, std::vector<index_t>& map,
              std::vector<bool>& used) const {
    if (k == gens_.size()) {
      return verify(map);
    }
    index_t gen = gens_[k];
    std::size_t want = g_.element_order(gen);
    if (map[gen] != kUnset) {
      auto m = map;
      auto u = used;
      if (extend(k + 1, m, u) && search(k + 1, m, u)) {
        map = std::move(m);
        return true;
      }
      return false;
    }
    for (index_t image = 0; image < h_.order(); ++image) {
      if (used[image] || h_.element_order(image) != want) {
        continue;
      }
      auto m = map;
      auto u = used;
      m[gen] = image;
      u[image] = true;
      if (extend(k + 1, m, u) && search(k + 1, m, u)) {
        map = std::move(m);
        return true;
      }
    }
    return false;
  }

  bool verify(const std::vector<index_t>& map) const {
    std::vector<bool> hit(h_.order(), false);
    for (index_t v : map) {
      if (v == kUnset || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    for (index_t a = 0; a < g_.order(); ++a) {
      for (index_t b = 0; b < g_.order(); ++b) {
        if (map[g_(a, b)] != h_(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  const GroupTable& g_;
  const GroupTable& h_;
  std::vector<index_t> gens_;
};

}  // namespace

std::optional<std::vector<index_t>> is_isomorphic(const GroupTable& g,
                                                  const GroupTable& h) {
  if (g.order() > isomorphism_order_limit
      || h.order() > isomorphism_order_limit) {
    throw CapacityError(kModule, "isomorphism search limited to order "
                                     + std::to_string(isomorphism_order_limit));
  }
  if (g.order() != h.order()) {
    return std::nullopt;
  }
  std::vector<std::size_t> og, oh;
  for (index_t a = 0; a < g.order(); ++a) {
    og.push_back(g.element_order(a));
    oh.push_back(h.element_order(a));
  }
  std::sort(og.begin(), og.end());
  std::sort(oh.begin(), oh.end());
  if (og != oh) {
    return std::nullopt;
  }
  return IsoSearch(g, h).run();
}

bool torsor_check(const GroupTable& g,
                  const std::vector<std::vector<index_t>>& action) {
  if (action.size() != g.order()) {
    return false;
  }
  const std::size_t m = action.front().size();
  if (m == 0) {
    return false;
  }
  for (const auto& row : action) {
    if (row.size() != m) {
      return false;
    }
    for (index_t u : row) {
      if (u >= m) {
        return false;
      }
    }
  }
  // Action laws.
  for (index_t u = 0; u < m; ++u) {
    if (action[g.identity()][u] != u) {
      return false;
    }
    for (index_t a = 0; a < g.order(); ++a) {
      for (index_t b = 0; b < g.order(); ++b) {
        if (action[g(a, b)][u] != action[a][action[b][u]]) {
          return false;
        }
      }
    }
  }
  if (g.order() * m != m * m) {
    return false;
  }
  std::vector<bool> hit(m * m, false);
  for (index_t a = 0; a < g.order(); ++a) {
    for (index_t u = 0; u < m; ++u) {
      std::size_t key = static_cast<std::size_t>(action[a][u]) * m + u;
      if (hit[key]) {
        return false;
      }
      hit[key] = true;
    }
  }
  return true;
}

}  // namespace unrep
