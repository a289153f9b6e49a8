#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace unrep {

using point_t = std::uint32_t;
using index_t = std::uint32_t;

// A total self-map of {0, ..., n-1}, stored as its image list.
class Transformation {
 public:
  Transformation() = default;
  // Throws InputError for degree 0 or an out-of-range image.
  explicit Transformation(std::vector<point_t> images);
  Transformation(std::initializer_list<point_t> images)
      : Transformation(std::vector<point_t>(images)) {}

  static Transformation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator[](point_t x) const noexcept { return images_[x]; }
  point_t operator()(point_t x) const noexcept { return images_[x]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_permutation() const;
  bool is_identity() const;
  // Throws InputError unless this is a permutation.
  Transformation inverse() const;
  std::size_t rank() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<point_t> images_;
};

// (f o g)(x) = f(g(x)).
Transformation compose(const Transformation& f, const Transformation& g);

// True iff p is a permutation consisting of one cycle through every point.
bool is_single_cycle(const Transformation& p);

std::string to_string(const Transformation& t);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

}  // namespace unrep
