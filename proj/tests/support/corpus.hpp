#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unrep/cayley.hpp"
#include "unrep/semigroup.hpp"

namespace corpus {

using unrep::index_t;
using unrep::MulTable;
using unrep::Transformation;
using unrep::TransSemigroup;
using Grid = std::vector<std::vector<index_t>>;

struct Instance {
  std::string name;
  TransSemigroup semigroup;
};

TransSemigroup lz4();
TransSemigroup const3();
TransSemigroup cyc4();
TransSemigroup cliff4();
TransSemigroup reg_s3();
// Closure of the n-cycle x -> x+1 mod n.
TransSemigroup cyclic(std::size_t n);
// All constant maps on n points.
TransSemigroup constants(std::size_t n);
// {id, [0,0,2], [0,0,0]}: every component has an underrepresentation, no
// unrepresentation exists.
TransSemigroup semilattice3();
// <(0 1), (2 3)> plus the constant map onto 4, on 5 points.
TransSemigroup v4_with_zero();
// C3 x {1 > e} on 6 points: id, p = (0 1 2)(3 4 5), e = [3,4,5,3,4,5].
TransSemigroup cliff6();

Grid left_zero_table(std::size_t n);
// Left-regular representation of a group table.
TransSemigroup regular_representation(const Grid& group);
// Cyclic group of order n as an index table.
Grid cyclic_group_table(std::size_t n);
Grid klein_group_table();
Grid s3_table();

// One representative per isomorphism class of semigroups of order n, each
// the lexicographically least labelling of its class. n <= 5.
const std::vector<Grid>& semigroup_tables(std::size_t n);
// Number of labelled tables seen while enumerating order n.
std::size_t labelled_semigroup_count(std::size_t n);

// All left-zero bands of transformations of {0..n-1} with exactly n elements.
std::vector<TransSemigroup> left_zero_bands(std::size_t n);

// sigma o s o sigma^-1 for every element.
TransSemigroup conjugate(const TransSemigroup& s, const Transformation& sigma);

// The shared instance corpus: named instances, representations of every
// semigroup of order <= 4 and every faithful one of order 5, group
// representations, and seeded random conjugates.
const std::vector<Instance>& instances();

MulTable table(const Grid& g);

}  // namespace corpus
