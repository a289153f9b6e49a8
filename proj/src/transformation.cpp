#include "unrep/transformation.hpp"

#include <algorithm>

#include "unrep/error.hpp"

namespace unrep {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::input:
      return "input";
    case ErrorCode::capacity:
      return "capacity";
    case ErrorCode::theorem_violation:
      return "theorem_violation";
    case ErrorCode::internal:
      return "internal";
  }
  return "unknown";
}

Transformation::Transformation(std::vector<point_t> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw InputError("semigroup-core", "transformation of degree 0");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= images_.size()) {
      throw InputError("semigroup-core",
                       "image " + std::to_string(images_[i]) + " at position "
                           + std::to_string(i) + " out of range for degree "
                           + std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(std::size_t degree) {
  std::vector<point_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    im[i] = static_cast<point_t>(i);
  }
  return Transformation(std::move(im));
}

bool Transformation::is_permutation() const {
  std::vector<bool> seen(images_.size(), false);
  for (point_t y : images_) {
    if (seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

bool Transformation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) {
    throw InputError("semigroup-core",
                     "inverse of non-permutation " + unrep::to_string(*this));
  }
  std::vector<point_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<point_t>(i);
  }
  return Transformation(std::move(inv));
}

std::size_t Transformation::rank() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t r = 0;
  for (point_t y : images_) {
    if (!seen[y]) {
      seen[y] = true;
      ++r;
    }
  }
  return r;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw InputError("semigroup-core",
                     "degree mismatch in composition: "
                         + std::to_string(f.degree()) + " vs "
                         + std::to_string(g.degree()));
  }
  std::vector<point_t> im(f.degree());
  for (std::size_t x = 0; x < im.size(); ++x) {
    im[x] = f[g[static_cast<point_t>(x)]];
  }
  return Transformation(std::move(im));
}

bool is_single_cycle(const Transformation& p) {
  if (p.degree() == 0 || !p.is_permutation()) {
    return false;
  }
  std::size_t length = 0;
  point_t x = 0;
  do {
    x = p[x];
    ++length;
  } while (x != 0);
  return length == p.degree();
}

std::string to_string(const Transformation& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.degree(); ++i) {
    if (i != 0) {
      out += ",";
    }
    out += std::to_string(t[static_cast<point_t>(i)]);
  }
  return out + "]";
}

std::size_t TransformationHash::operator()(
    const Transformation& t) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (point_t y : t.images()) {
    h ^= y;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace unrep
