#include "unrep/cayley.hpp"

#include <set>
#include <string>

namespace unrep {

namespace {
constexpr const char* kModule = "cayley";

std::string triple_string(const std::array<index_t, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ","
         + std::to_string(t[2]) + ")";
}
}  // namespace

NonAssociativeError::NonAssociativeError(std::array<index_t, 3> triple)
    : InputError(kModule, "table is not associative at triple "
                              + triple_string(triple)),
      triple_(triple) {}

std::vector<std::vector<index_t>> MulTable::rows() const {
  std::vector<std::vector<index_t>> out(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    out[x].assign(cells_.begin() + static_cast<std::ptrdiff_t>(x * order_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((x + 1) * order_));
  }
  return out;
}

std::optional<index_t> MulTable::identity() const {
  for (index_t u = 0; u < order_; ++u) {
    bool ok = true;
    for (index_t y = 0; y < order_ && ok; ++y) {
      ok = (*this)(u, y) == y && (*this)(y, u) == y;
    }
    if (ok) {
      return u;
    }
  }
  return std::nullopt;
}

MulTable validate_table(const std::vector<std::vector<index_t>>& raw,
                        std::vector<std::string> labels) {
  const std::size_t n = raw.size();
  if (n == 0) {
    throw InputError(kModule, "empty table");
  }
  MulTable t;
  t.order_ = n;
  t.cells_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x].size() != n) {
      throw InputError(kModule, "row " + std::to_string(x) + " has length "
                                    + std::to_string(raw[x].size())
                                    + ", expected " + std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (raw[x][y] >= n) {
        throw InputError(kModule, "entry (" + std::to_string(x) + ","
                                      + std::to_string(y) + ") = "
                                      + std::to_string(raw[x][y])
                                      + " out of range");
      }
      t.cells_.push_back(raw[x][y]);
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw InputError(kModule, "expected " + std::to_string(n) + " labels, got "
                                  + std::to_string(labels.size()));
  }
  t.labels_ = std::move(labels);
  for (index_t x = 0; x < n; ++x) {
    for (index_t y = 0; y < n; ++y) {
      for (index_t z = 0; z < n; ++z) {
        if (t(t(x, y), z) != t(x, t(y, z))) {
          throw NonAssociativeError({x, y, z});
        }
      }
    }
  }
  return t;
}

MulTable table_of(const TransSemigroup& s) {
  std::vector<std::vector<index_t>> raw(s.size(), std::vector<index_t>(s.size()));
  for (index_t i = 0; i < s.size(); ++i) {
    for (index_t j = 0; j < s.size(); ++j) {
      raw[i][j] = s.product(i, j);
    }
  }
  return validate_table(raw);
}

RepresentationResult represent(const MulTable& t) {
  const auto n = static_cast<index_t>(t.order());
  std::vector<Transformation> rows;
  rows.reserve(n);
  for (index_t x = 0; x < n; ++x) {
    std::vector<point_t> im(n);
    for (index_t y = 0; y < n; ++y) {
      im[y] = t(x, y);
    }
    rows.emplace_back(std::move(im));
  }
  // The image of a homomorphism is closed; from_elements re-checks it.
  RepresentationResult r{TransSemigroup::from_elements(rows), {}, false};
  r.rep_map.reserve(n);
  for (const auto& row : rows) {
    r.rep_map.push_back(*r.semigroup.find(row));
  }
  r.faithful = r.semigroup.size() == n;
  return r;
}

bool is_faithful(const MulTable& t) {
  std::set<std::vector<index_t>> distinct;
  for (auto& row : t.rows()) {
    distinct.insert(std::move(row));
  }
  return distinct.size() == t.order();
}

bool is_group_table(const MulTable& t) {
  auto u = t.identity();
  if (!u) {
    return false;
  }
  for (index_t x = 0; x < t.order(); ++x) {
    bool unit = false;
    for (index_t y = 0; y < t.order() && !unit; ++y) {
      unit = t(x, y) == *u && t(y, x) == *u;
    }
    if (!unit) {
      return false;
    }
  }
  return true;
}

bool is_inverse_table(const MulTable& t) {
  for (index_t x = 0; x < t.order(); ++x) {
    std::size_t count = 0;
    for (index_t y = 0; y < t.order(); ++y) {
      if (t(t(x, y), x) == x && t(t(y, x), y) == y) {
        ++count;
      }
    }
    if (count != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace unrep
