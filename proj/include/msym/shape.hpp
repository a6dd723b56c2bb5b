#ifndef MSYM_SHAPE_HPP
#define MSYM_SHAPE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

/// Strictly increasing spacetime indices in [0, D-1].
using Block = std::vector<int>;
/// One block per slot.
using BlockTuple = std::vector<Block>;

/// Dimension D plus the slot degrees (p_1, ..., p_N). Degrees are Young
/// column heights; rows of the diagram are the symmetrized direction.
struct Shape {
  int D = 0;
  std::vector<int> signature;

  Shape() = default;
  Shape(int dim, std::vector<int> sig) : D(dim), signature(std::move(sig)) {}

  int N() const { return static_cast<int>(signature.size()); }
  int degree(int slot) const { return signature.at(static_cast<std::size_t>(slot)); }
  int boxes() const;
  /// Throws ValidationError unless D >= 1, N >= 1 and 0 <= p_i <= D.
  void validate() const;
  bool weakly_decreasing() const;
  /// Throws ShapeError when no Young diagram has these column heights.
  void require_young() const;
  /// prod_i C(D, p_i)
  std::size_t tuple_count() const;
  std::string str() const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.D == b.D && a.signature == b.signature;
  }
  friend bool operator<(const Shape& a, const Shape& b) {
    return a.D != b.D ? a.D < b.D : a.signature < b.signature;
  }
};

/// Sorts `block` in place and returns the permutation sign, or 0 when an
/// index repeats. Throws DomainError for indices outside [0, D-1].
int canonicalize_block(Block& block, int D);

struct CanonicalTerm {
  BlockTuple blocks;
  int sign = 0;  // 0 means the term vanishes
};

/// Sorts every block and multiplies the per-block signs.
CanonicalTerm canonicalize(BlockTuple raw, int D);

/// All strictly increasing blocks of length p, in lexicographic order.
std::vector<Block> enumerate_blocks(int D, int p);

/// Canonical block tuples of a shape in lexicographic order, with lookup.
struct TupleBasis {
  Shape shape;
  std::vector<BlockTuple> tuples;
  std::map<BlockTuple, std::size_t> index;
};

/// Cached; safe to call concurrently.
const TupleBasis& tuple_basis(const Shape& shape);

Integer binomial(int n, int k);

/// Row lengths of the Young diagram with the shape's column heights.
std::vector<int> young_rows(const Shape& shape);

/// GL(D) irrep dimension by the hook-content product. Requires a Young label.
Integer hook_content_dimension(const Shape& shape);

/// Signature with every entry shifted by `delta` on slots [first, last).
Shape shifted(const Shape& shape, int delta, int first, int last);

}  // namespace msym

#endif  // MSYM_SHAPE_HPP
