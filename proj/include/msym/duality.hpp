#ifndef MSYM_DUALITY_HPP
#define MSYM_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msym/calculus.hpp"
#include "msym/linalg.hpp"

namespace msym {

/// lambda_i replaces p_1..p_i by D-2-p_j. The list stops at the first label
/// that is not weakly decreasing. Throws PreconditionError unless every
/// p_k <= floor((D-2)/2).
std::vector<Shape> dual_signatures(const Shape& shape);

/// [Q; selected coordinate rows], square and invertible.
struct EncodingMap {
  DenseMatrix stack;
  std::vector<std::size_t> selected;  // indices into the candidate rows
};

/// Greedy: keep candidate rows in order whenever they are independent of the
/// rows already stacked under Q. Throws PreconditionError when Q vanishes
/// (degenerate charge) and ConsistencyError when the candidates do not span.
EncodingMap build_encoding(const std::vector<Rational>& charge_row,
                           const std::vector<std::vector<Rational>>& candidate_rows);
/// Candidates are the canonical coordinates of a dim-dimensional space.
EncodingMap build_encoding(const std::vector<Rational>& charge_row, std::size_t dim);

/// Lower-triangular form of f by column operations that never touch the
/// first column. Requires the first row to be (eta, 0, ..., 0).
DenseMatrix triangularize(const DenseMatrix& f);

struct DualityOptions {
  int degree_cap = -1;  // gauge-field polynomial degree cap; -1 means N
  Metric metric;
  std::optional<MultiForm> epsilon0;   // constant, shape p+1
  std::vector<MultiForm> epsilon_duals;  // constant, shapes lambda_i+1
  /// When set (one entry per dual), epsilon_i = c_i * (star epsilon_0) + zeta_i
  /// with zeta_i orthogonal to the charges of every dual field strength.
  std::vector<Rational> charge_scales;
  int test_fields = 20;
  std::uint64_t seed = 7;
};

struct DualDescription {
  Shape shape;
  std::size_t gauge_as_dimension = 0;
  DenseMatrix conjugated_hodge;  // W coordinates -> gauge AS coordinates
  EncodingMap encoding;
  DenseMatrix f;
  DenseMatrix f_triangular;
  Rational eta;
  bool commutes = false;           // residual matrix exactly zero
  bool independent_route = false;  // conjugation via form operations agrees
  bool eta_field_independent = false;
  bool restriction_unique = false;
  bool inverse_roundtrip = false;
  std::vector<Rational> sample_q0;  // charges on the test fields
  std::vector<Rational> sample_qi;
};

struct DualityReport {
  Shape shape;
  int degree_cap = 0;
  std::string metric;
  std::size_t gauge_as_dimension = 0;
  std::size_t field_strength_dimension = 0;
  std::size_t n = 0;  // dimension of the dualizable subspace W
  EncodingMap encoding0;
  std::vector<DualDescription> duals;
  std::vector<std::string> certificates;
};

/// Box-domain construction of f_i = pi_i o star_conj o pi_0^{-1} on the
/// subspace W of gauge AS fields whose partial Hodge duals are exact in every
/// dual description. Charges pair the constant part of the field strength
/// with epsilon. Throws PreconditionError for incompatible charges or an
/// empty W and ConsistencyError when the diagram fails to commute.
DualityReport build_duality_maps(const Shape& shape, const DualityOptions& options);

/// Deterministic generic constant reference parameter for a field strength.
MultiForm default_epsilon(const Shape& field_strength_shape);

}  // namespace msym

#endif  // MSYM_DUALITY_HPP
