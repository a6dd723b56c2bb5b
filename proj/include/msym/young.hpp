#ifndef MSYM_YOUNG_HPP
#define MSYM_YOUNG_HPP

#include <string>
#include <vector>

#include "msym/linalg.hpp"
#include "msym/multiform.hpp"

namespace msym {

/// Exact idempotent on the canonical block-tuple basis of a shape.
struct ProjectorMatrix {
  Shape shape;
  SparseMatrix matrix;  // columns indexed like tuple_basis(shape).tuples
  std::size_t rank = 0;
  std::string method;  // "sandwich" or "equivariant"
};

/// Normalized column-antisymmetrizer * row-symmetrizer * column-antisymmetrizer,
/// scaled so that P^2 = P. Cost grows with |columns group| * |rows group|.
ProjectorMatrix sandwich_projector(const Shape& shape);

/// Orthogonal projector onto the joint kernel of the column-exchange maps
/// (antisymmetrizing column i together with one index of column j > i),
/// assembled weight space by weight space.
ProjectorMatrix equivariant_projector(const Shape& shape);

/// Cached projector: sandwich when affordable, otherwise equivariant (the two
/// agree exactly). Throws ShapeError for non-weakly-decreasing signatures.
const ProjectorMatrix& young_projector(const Shape& shape);

/// Basis of the projector image: pivot columns of P, plus the reduced rows
/// that recover the coordinates of any image vector in that basis.
struct PrincipalBasis {
  Shape shape;
  std::vector<std::size_t> pivots;
  std::vector<SparseVec> vectors;  // P e_pivot
  std::vector<SparseVec> coords;   // y_a = coords[a] . T for T in the image
  std::size_t dimension() const { return pivots.size(); }
};
const PrincipalBasis& principal_basis(const Shape& shape);

/// Coefficient-wise application of P. Throws DomainError on shape mismatch.
MultiForm project(const MultiForm& t, const ProjectorMatrix& p);
/// Projection onto the principal subspace of the form's own signature.
MultiForm project(const MultiForm& t);
/// P * T == T
bool is_principal(const MultiForm& t);

/// Brute-force projector rank for small shapes, hook-content otherwise.
Integer irrep_dimension(const Shape& shape);

/// Ensures P^2 = P exactly; throws ConsistencyError otherwise.
void check_idempotent(const ProjectorMatrix& p);

}  // namespace msym

#endif  // MSYM_YOUNG_HPP
