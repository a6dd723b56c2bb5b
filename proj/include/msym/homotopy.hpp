#ifndef MSYM_HOMOTOPY_HPP
#define MSYM_HOMOTOPY_HPP

#include <string>

#include "msym/errors.hpp"
#include "msym/multiform.hpp"

namespace msym {

/// delta_N(potential) == target, exactly.
struct HomotopyWitness {
  MultiForm potential;
  MultiForm target;
  /// "descent" when the iterated-integral descent alone produced the
  /// potential, "descent+graded-solve" when the remainder needed an exact
  /// degree-by-degree solve.
  std::string route;
  int descent_steps = 0;
};

class NotClosedError : public PreconditionError {
 public:
  NotClosedError(const std::string& what, MultiForm residual)
      : PreconditionError(what), residual_(std::move(residual)) {}
  const MultiForm& residual() const { return residual_; }

 private:
  MultiForm residual_;
};

/// Potential S with delta_N(S) = T for closed T with polynomial coefficients
/// on a box containing the origin and all slot degrees >= 1.
///
/// Errors: NotClosedError (carrying delta_N(T)); DomainError for
/// non-polynomial coefficients; PreconditionError for zero slot degrees or a
/// closed form with no polynomial potential.
HomotopyWitness poincare_homotopy(const MultiForm& t);

/// The descent alone: returns the accumulated potential and leaves the
/// unresolved remainder in *remainder (zero when the descent succeeded).
MultiForm homotopy_descent(const MultiForm& t, MultiForm* remainder, int* steps);

/// Exact solve of delta_N(S) = T degree by degree with S principal.
/// Returns false when no polynomial potential exists.
bool graded_potential(const MultiForm& t, MultiForm* potential);

}  // namespace msym

#endif  // MSYM_HOMOTOPY_HPP
