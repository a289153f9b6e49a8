#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace corpus {

namespace {

TransSemigroup gen(std::vector<Transformation> g) { return unrep::closure(g); }

// Backtracking over cells in row-major order; every triple whose four
// products are known is checked as soon as it becomes decidable.
class TableEnumerator {
 public:
  explicit TableEnumerator(std::size_t n) : n_(n), cells_(n * n, kUnset) {}

  void run() {
    perms_.clear();
    std::vector<index_t> p(n_);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    fill(0);
  }

  std::vector<Grid> classes;
  std::size_t labelled = 0;

 private:
  static constexpr index_t kUnset = ~index_t{0};

  index_t at(index_t x, index_t y) const { return cells_[x * n_ + y]; }

  bool consistent() const {
    for (index_t x = 0; x < n_; ++x) {
      for (index_t y = 0; y < n_; ++y) {
        index_t xy = at(x, y);
        if (xy == kUnset) continue;
        for (index_t z = 0; z < n_; ++z) {
          index_t yz = at(y, z);
          if (yz == kUnset) continue;
          index_t l = at(xy, z);
          index_t r = at(x, yz);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    }
    return true;
  }

  bool least_labelling() const {
    for (const auto& p : perms_) {
      // Compare relabelled table q[p[x]][p[y]] = p[t[x][y]] with t.
      std::vector<index_t> q(n_ * n_);
      for (index_t x = 0; x < n_; ++x) {
        for (index_t y = 0; y < n_; ++y) {
          q[p[x] * n_ + p[y]] = p[at(x, y)];
        }
      }
      if (q < cells_) return false;
    }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == cells_.size()) {
      ++labelled;
      if (least_labelling()) {
        Grid g(n_);
        for (index_t x = 0; x < n_; ++x) {
          g[x].assign(cells_.begin() + x * n_, cells_.begin() + (x + 1) * n_);
        }
        classes.push_back(std::move(g));
      }
      return;
    }
    for (index_t v = 0; v < n_; ++v) {
      cells_[cell] = v;
      if (consistent()) fill(cell + 1);
    }
    cells_[cell] = kUnset;
  }

  std::size_t n_;
  std::vector<index_t> cells_;
  std::vector<std::vector<index_t>> perms_;
};

struct Enumerated {
  std::vector<Grid> classes;
  std::size_t labelled = 0;
};

const Enumerated& enumerated(std::size_t n) {
  static std::map<std::size_t, Enumerated> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    TableEnumerator e(n);
    e.run();
    it = cache.emplace(n, Enumerated{std::move(e.classes), e.labelled}).first;
  }
  return it->second;
}

Transformation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<unrep::point_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Transformation(std::move(p));
}

}  // namespace

TransSemigroup lz4() {
  return TransSemigroup::from_elements(
      {{0, 0, 2, 2}, {1, 1, 2, 2}, {0, 0, 3, 3}, {1, 1, 3, 3}});
}

TransSemigroup const3() { return constants(3); }

TransSemigroup cyc4() { return cyclic(4); }

TransSemigroup cliff4() { return gen({{1, 0, 3, 2}, {2, 3, 2, 3}}); }

TransSemigroup reg_s3() { return regular_representation(s3_table()); }

TransSemigroup cyclic(std::size_t n) {
  std::vector<unrep::point_t> p(n);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<unrep::point_t>((x + 1) % n);
  return gen({Transformation(std::move(p))});
}

TransSemigroup constants(std::size_t n) {
  std::vector<Transformation> c;
  for (std::size_t k = 0; k < n; ++k) {
    c.emplace_back(std::vector<unrep::point_t>(n, static_cast<unrep::point_t>(k)));
  }
  return TransSemigroup::from_elements(std::move(c));
}

TransSemigroup semilattice3() {
  return TransSemigroup::from_elements({{0, 1, 2}, {0, 0, 2}, {0, 0, 0}});
}

TransSemigroup v4_with_zero() {
  return gen({{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}, {4, 4, 4, 4, 4}});
}

TransSemigroup cliff6() {
  return gen({{1, 2, 0, 4, 5, 3}, {3, 4, 5, 3, 4, 5}, {0, 1, 2, 3, 4, 5}});
}

Grid left_zero_table(std::size_t n) {
  Grid g(n, std::vector<index_t>(n));
  for (index_t x = 0; x < n; ++x) std::fill(g[x].begin(), g[x].end(), x);
  return g;
}

TransSemigroup regular_representation(const Grid& group) {
  std::vector<Transformation> rows;
  for (const auto& r : group) rows.emplace_back(std::vector<unrep::point_t>(r.begin(), r.end()));
  return TransSemigroup::from_elements(std::move(rows));
}

Grid cyclic_group_table(std::size_t n) {
  Grid g(n, std::vector<index_t>(n));
  for (index_t x = 0; x < n; ++x) {
    for (index_t y = 0; y < n; ++y) g[x][y] = static_cast<index_t>((x + y) % n);
  }
  return g;
}

Grid klein_group_table() {
  Grid g(4, std::vector<index_t>(4));
  for (index_t x = 0; x < 4; ++x) {
    for (index_t y = 0; y < 4; ++y) g[x][y] = x ^ y;
  }
  return g;
}

Grid s3_table() {
  // Elements are the permutations of {0,1,2} in lexicographic order; the
  // product is composition.
  std::vector<std::array<index_t, 3>> perms;
  std::array<index_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Grid g(6, std::vector<index_t>(6));
  for (index_t a = 0; a < 6; ++a) {
    for (index_t b = 0; b < 6; ++b) {
      std::array<index_t, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g[a][b] = static_cast<index_t>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

const std::vector<Grid>& semigroup_tables(std::size_t n) {
  return enumerated(n).classes;
}

std::size_t labelled_semigroup_count(std::size_t n) {
  return enumerated(n).labelled;
}

std::vector<TransSemigroup> left_zero_bands(std::size_t n) {
  // Candidates: idempotents of the full transformation monoid.
  std::vector<Transformation> idem;
  std::vector<unrep::point_t> im(n, 0);
  while (true) {
    Transformation t(im);
    if (unrep::compose(t, t) == t) idem.push_back(t);
    std::size_t k = 0;
    while (k < n && ++im[k] == n) im[k++] = 0;
    if (k == n) break;
  }
  const std::size_t m = idem.size();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ok[i][j] = unrep::compose(idem[i], idem[j]) == idem[i]
                 && unrep::compose(idem[j], idem[i]) == idem[j];
    }
  }
  std::vector<TransSemigroup> out;
  std::vector<std::size_t> pick;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == n) {
      std::vector<Transformation> e;
      for (auto i : pick) e.push_back(idem[i]);
      out.push_back(TransSemigroup::from_elements(std::move(e)));
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      bool fits = true;
      for (auto j : pick) fits = fits && ok[i][j];
      if (!fits) continue;
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

TransSemigroup conjugate(const TransSemigroup& s, const Transformation& sigma) {
  auto inv = sigma.inverse();
  std::vector<Transformation> e;
  for (const auto& t : s.elements()) e.push_back(unrep::compose(sigma, unrep::compose(t, inv)));
  return TransSemigroup::from_elements(std::move(e));
}

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> v;
    v.push_back({"LZ4", lz4()});
    v.push_back({"CONST3", const3()});
    v.push_back({"CYC4", cyc4()});
    v.push_back({"CLIFF4", cliff4()});
    v.push_back({"REG_S3", reg_s3()});
    v.push_back({"SEMILATTICE3", semilattice3()});
    v.push_back({"V4_ZERO", v4_with_zero()});
    v.push_back({"CLIFF6", cliff6()});
    for (std::size_t n = 1; n <= 7; ++n) {
      v.push_back({"CYCLIC" + std::to_string(n), cyclic(n)});
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      v.push_back({"CONST" + std::to_string(n), constants(n)});
    }
    v.push_back({"REG_V4", regular_representation(klein_group_table())});
    v.push_back({"REG_C6", regular_representation(cyclic_group_table(6))});
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto& tables = semigroup_tables(n);
      for (std::size_t k = 0; k < tables.size(); ++k) {
        auto t = table(tables[k]);
        if (n == 5 && !unrep::is_faithful(t)) continue;
        v.push_back({"T" + std::to_string(n) + "_" + std::to_string(k),
                     unrep::represent(t).semigroup});
      }
    }
    std::mt19937_64 rng(20261016);
    const std::size_t named = 8;
    for (std::size_t i = 0; i < named; ++i) {
      const auto& base = v[i].semigroup;
      auto sigma = random_permutation(base.degree(), rng);
      v.push_back({v[i].name + "_CONJ", conjugate(base, sigma)});
    }
    return v;
  }();
  return all;
}

MulTable table(const Grid& g) { return unrep::validate_table(g); }

}  // namespace corpus
