#ifndef MSYM_OPERATORS_HPP
#define MSYM_OPERATORS_HPP

#include <vector>

#include "msym/linalg.hpp"
#include "msym/multiform.hpp"

namespace msym {

/// Matrix of delta^(arity) restricted to principal(src) (x) src_modes.
///
/// Column a * |src_modes| + m is the image of (principal vector a) * phi_m.
/// Rows are either full coordinates (tuple * |tgt_modes| + mode) or principal
/// coordinates (principal index * |tgt_modes| + mode) of the target shape.
/// On the torus every entry carries the common factor i^arity, which is
/// divided out so the stored matrix is rational.
struct DeltaMatrix {
  Shape source;
  Shape target;
  int arity = 0;
  int phase = 0;  // stored matrix times i^phase is the operator
  bool top_degree = false;
  SparseMatrix matrix;
};

DeltaMatrix delta_matrix(const Shape& source, int arity, CoefficientKind kind,
                         const std::vector<Mode>& source_modes, const std::vector<Mode>& target_modes,
                         bool principal_rows);

/// Element of principal(shape) (x) modes with the given coordinates.
MultiForm principal_element(const Shape& shape, CoefficientKind kind, int cap,
                            const std::vector<Mode>& modes, const SparseVec& coords);

/// Full coordinates (tuple * |modes| + mode) of a form; modes outside the
/// list raise ConsistencyError. `phase` divides every amplitude by i^phase.
SparseVec full_coordinates(const MultiForm& t, const std::vector<Mode>& modes, int phase = 0);

}  // namespace msym

#endif  // MSYM_OPERATORS_HPP
