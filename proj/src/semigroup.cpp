#include "unrep/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "unrep/error.hpp"

namespace unrep {

namespace {

constexpr const char* kModule = "semigroup-core";

void check_degrees(std::span<const Transformation> ts) {
  if (ts.empty()) {
    throw InputError(kModule, "empty generator list");
  }
  for (const auto& t : ts) {
    if (t.degree() == 0) {
      throw InputError(kModule, "degree 0 is not supported");
    }
    if (t.degree() != ts.front().degree()) {
      throw InputError(kModule, "generators of different degrees: "
                                    + std::to_string(ts.front().degree())
                                    + " and " + std::to_string(t.degree()));
    }
  }
}

}  // namespace

void TransSemigroup::finalise(std::vector<Transformation> elements,
                              bool verify_closed) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  degree_ = elements.front().degree();
  elements_ = std::move(elements);

  lookup_.clear();
  lookup_.reserve(elements_.size());
  std::uint64_t h = 0xcbf29ce484222325ULL ^ degree_;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    lookup_.emplace(elements_[i], static_cast<index_t>(i));
    for (point_t y : elements_[i].images()) {
      h ^= y + 1;
      h *= 1099511628211ULL;
    }
    h ^= 0x9e3779b97f4a7c15ULL;
  }
  fingerprint_ = h;

  table_.clear();
  std::size_t n = elements_.size();
  if (n <= composition_table_limit) {
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = lookup_.find(compose(elements_[i], elements_[j]));
        if (it == lookup_.end()) {
          throw InputError(kModule, "element set is not closed: "
                                        + to_string(elements_[i]) + " o "
                                        + to_string(elements_[j])
                                        + " is missing");
        }
        table_[i * n + j] = it->second;
      }
    }
  } else if (verify_closed) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!lookup_.contains(compose(elements_[i], elements_[j]))) {
          throw InputError(kModule, "element set is not closed");
        }
      }
    }
  }
}

TransSemigroup TransSemigroup::from_elements(
    std::vector<Transformation> elements) {
  check_degrees(elements);
  TransSemigroup s;
  s.finalise(std::move(elements), true);
  return s;
}

std::vector<index_t> TransSemigroup::generating_indices() const {
  if (!generators_.empty()) {
    return generators_;
  }
  std::vector<index_t> all(elements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<index_t>(i);
  }
  return all;
}

index_t TransSemigroup::product(index_t i, index_t j) const {
  if (!table_.empty()) {
    return table_[static_cast<std::size_t>(i) * elements_.size() + j];
  }
  return lookup_.at(compose(elements_[i], elements_[j]));
}

std::optional<index_t> TransSemigroup::find(const Transformation& t) const {
  auto it = lookup_.find(t);
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<index_t> TransSemigroup::identity() const {
  return find(Transformation::identity(degree_));
}

TransSemigroup closure(std::span<const Transformation> generators,
                       std::size_t cap) {
  check_degrees(generators);
  if (cap == 0) {
    throw InputError(kModule, "closure cap must be at least 1");
  }
  std::unordered_set<Transformation, TransformationHash> seen;
  std::vector<Transformation> gens;
  std::deque<Transformation> queue;
  for (const auto& g : generators) {
    if (seen.insert(g).second) {
      gens.push_back(g);
      queue.push_back(g);
    }
  }
  auto overflow = [&] {
    return CapacityError(kModule, "closure exceeds cap of "
                                      + std::to_string(cap) + " elements");
  };
  if (seen.size() > cap) {
    throw overflow();
  }
  while (!queue.empty()) {
    Transformation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      for (auto&& y : {compose(x, g), compose(g, x)}) {
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw overflow();
          }
          queue.push_back(y);
        }
      }
    }
  }
  TransSemigroup s;
  s.finalise(std::vector<Transformation>(seen.begin(), seen.end()), false);
  for (const auto& g : gens) {
    s.generators_.push_back(*s.find(g));
  }
  return s;
}

ClassificationReport classify(const TransSemigroup& s) {
  ClassificationReport r;
  const auto n = static_cast<index_t>(s.size());
  r.size = n;
  r.degree = s.degree();
  r.size_matches_degree = (r.size == r.degree);
  r.identity = s.identity();
  r.is_monoid = r.identity.has_value();
  r.idempotents = idempotents(s);

  r.is_left_zero = true;
  for (index_t i = 0; i < n && r.is_left_zero; ++i) {
    for (index_t j = 0; j < n; ++j) {
      if (s.product(i, j) != i) {
        r.is_left_zero = false;
        break;
      }
    }
  }

  r.is_group = r.is_monoid;
  r.is_regular = true;
  bool unique_inverses = true;
  std::vector<index_t> inv(n, 0);
  for (index_t x = 0; x < n; ++x) {
    bool regular = false;
    bool unit = false;
    std::size_t inverse_count = 0;
    for (index_t y = 0; y < n; ++y) {
      index_t xy = s.product(x, y);
      index_t yx = s.product(y, x);
      if (s.product(xy, x) == x) {
        regular = true;
        if (s.product(yx, y) == y) {
          ++inverse_count;
          inv[x] = y;
        }
      }
      if (r.is_monoid && xy == *r.identity && yx == *r.identity) {
        unit = true;
      }
    }
    r.is_regular = r.is_regular && regular;
    unique_inverses = unique_inverses && inverse_count == 1;
    r.is_group = r.is_group && unit;
  }
  r.is_inverse = unique_inverses;
  if (r.is_inverse) {
    r.inverses = std::move(inv);
  }

  r.idempotents_commute = true;
  for (index_t e : r.idempotents) {
    for (index_t f : r.idempotents) {
      if (s.product(e, f) != s.product(f, e)) {
        r.idempotents_commute = false;
      }
    }
  }

  r.is_clifford = r.is_inverse;
  for (index_t e : r.idempotents) {
    for (index_t x = 0; x < n && r.is_clifford; ++x) {
      if (s.product(e, x) != s.product(x, e)) {
        r.is_clifford = false;
      }
    }
  }

  // A regular semigroup is inverse iff its idempotents commute.
  if (r.is_inverse != (r.is_regular && r.idempotents_commute)) {
    throw TheoremViolation(kModule,
                           "unique-inverse test disagrees with the "
                           "idempotent-commutation characterisation");
  }
  return r;
}

std::vector<index_t> idempotents(const TransSemigroup& s) {
  std::vector<index_t> out;
  for (index_t i = 0; i < s.size(); ++i) {
    if (s.product(i, i) == i) {
      out.push_back(i);
    }
  }
  return out;
}

bool natural_leq(const TransSemigroup& s, index_t f, index_t e) {
  return s.product(e, f) == f && s.product(f, e) == f;
}

Ordering natural_order(const TransSemigroup& s, index_t e, index_t f) {
  for (index_t i : {e, f}) {
    if (i >= s.size() || s.product(i, i) != i) {
      throw InputError(kModule, "index " + std::to_string(i)
                                    + " is not an idempotent");
    }
  }
  if (e == f) {
    return Ordering::equal;
  }
  if (natural_leq(s, f, e)) {
    return Ordering::less;
  }
  if (natural_leq(s, e, f)) {
    return Ordering::greater;
  }
  return Ordering::incomparable;
}

const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::equal:
      return "equal";
    case Ordering::less:
      return "less";
    case Ordering::greater:
      return "greater";
    case Ordering::incomparable:
      return "incomparable";
  }
  return "unknown";
}

}  // namespace unrep
