#ifndef MSYM_COMPLEXES_HPP
#define MSYM_COMPLEXES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "msym/operators.hpp"

namespace msym {

/// Cochain complex Omega^{0 (x) ... (x) 0} -> ... of length D. Edge e maps
/// nodes[e] to nodes[e+1] by delta^(edges[e]).
struct ComplexSpec {
  int D = 0;
  int N = 0;
  std::vector<int> augmentation;  // k_1 .. k_{N-1}
  std::vector<Shape> nodes;
  std::vector<int> edges;
};

/// Prefix: the first k_1+...+k_{N-1} steps of the (N-1)-slot complex with
/// augmentation (k_1..k_{N-2}), padded with a zero slot; then spine steps
/// delta^(N). Throws PreconditionError when the augmentation exceeds D.
ComplexSpec build_complex(int D, int N, const std::vector<int>& augmentation);

/// Finite slice of the coefficient space. Torus: all frequencies with
/// |k_j| <= cap, one block per frequency. Box: homogeneous polynomial degrees
/// 0..cap at every node, one block per degree; a map into a node at degree e
/// is fed from the source at degree e + arity, so every block is a finite
/// graded piece of the full complex.
struct Truncation {
  CoefficientKind kind = CoefficientKind::trig_torus;
  int cap = 1;
  std::size_t max_dimension = 250000;
  bool include_zero_mode = true;

  static Truncation torus(int K) { return {CoefficientKind::trig_torus, K, 250000, true}; }
  static Truncation box(int degree_cap) { return {CoefficientKind::poly_box, degree_cap, 250000, true}; }
  std::string describe() const;
};

/// Throws ResourceError when sum over nodes of principal dimension times the
/// number of coefficient modes exceeds trunc.max_dimension.
std::size_t truncated_dimension(const ComplexSpec& spec, const Truncation& trunc);

/// Matrix of edge `edge` on the whole truncation, in principal coordinates.
/// Box: source degrees 0..cap, target degrees 0..cap.
DeltaMatrix assemble_operator(const ComplexSpec& spec, std::size_t edge, const Truncation& trunc);

struct BlockDims {
  std::string label;  // frequency vector or "degree e"
  bool zero_mode = false;
  std::size_t dim = 0;
  std::size_t kernel = 0;
  std::size_t image = 0;
  long h = 0;
};

struct PositionReport {
  std::size_t position = 0;
  Shape shape;
  int closure_arity = 0;   // delta used for the cocycles
  int exactness_arity = 0; // delta used for the coboundaries (0: none)
  std::size_t dim = 0;
  std::size_t kernel = 0;
  std::size_t image = 0;
  long h = 0;
  long zero_mode_h = 0;
  long nonzero_h = 0;
  std::vector<BlockDims> blocks;
};

struct CohomologyReport {
  ComplexSpec spec;
  Truncation trunc;
  std::vector<PositionReport> positions;
  std::vector<long> h() const;
};

/// Z at a node with i leading nonzero degrees is the kernel of
/// delta^(min(i+1, N)); B is the image of delta^(i) from the shape with the
/// first i degrees lowered by one (B = 0 when i = 0).
CohomologyReport cohomology(const ComplexSpec& spec, const Truncation& trunc);
PositionReport position_cohomology(const ComplexSpec& spec, std::size_t position, const Truncation& trunc);

/// Torus only: the same dimensions from the full assembled matrices (no block
/// splitting). Used to cross-check block independence.
std::vector<long> cohomology_unsplit(const ComplexSpec& spec, const Truncation& trunc);

/// h of the one-slot complex at the same truncation.
std::vector<long> de_rham_reference(int D, const Truncation& trunc);

struct GateCheck {
  std::string group;
  std::string block;
  long h = 0;
};

struct ASReport {
  std::size_t position = 0;
  Shape source;
  Shape target;
  int arity = 0;
  std::vector<GateCheck> gate;
  std::size_t source_dimension = 0;  // dim Omega_AS at the gauge node
  std::size_t target_dimension = 0;  // dim Omega_AS at the field-strength node
  std::size_t rank = 0;
  bool bijection = false;
  /// (principal index, mode label) of every AS gauge basis element
  std::vector<std::string> source_basis;
};

/// Requires vanishing cohomology at `position` and `position + 1` in every
/// block of the truncation (the zero mode is skipped when
/// trunc.include_zero_mode is false); throws PreconditionError naming the
/// first offending group and block otherwise.
ASReport as_reduction(const ComplexSpec& spec, std::size_t position, const Truncation& trunc);

std::string mode_label(const Mode& m);

}  // namespace msym

#endif  // MSYM_COMPLEXES_HPP
