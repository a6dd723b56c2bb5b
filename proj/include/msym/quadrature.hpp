#ifndef MSYM_QUADRATURE_HPP
#define MSYM_QUADRATURE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace msym {

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> values);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Exact area of the unit sphere S^m embedded in R^{m+1}.
double sphere_area(int m);

/// Product rule on S^m: Gauss-Legendre in the m-1 polar angles, trapezoid in
/// the azimuth. `angles` holds (a_0, ..., a_{m-1}) per node, the last being
/// the azimuth. `coordinate_weights` integrate in the angle chart (da);
/// `weights` include the surface Jacobian.
struct SphereQuadrature {
  int m = 0;
  int resolution = 0;
  std::vector<std::vector<double>> angles;
  std::vector<std::vector<double>> points;
  std::vector<double> coordinate_weights;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

SphereQuadrature sphere_quadrature(int m, int resolution = 24);

/// Embedding of the hyperspherical chart and its angle derivatives.
std::vector<double> sphere_point(const std::vector<double>& angles);
std::vector<std::vector<double>> sphere_tangents(const std::vector<double>& angles);

/// Determinant of a small dense matrix (partial pivoting).
double determinant(std::vector<std::vector<double>> a);

}  // namespace msym

#endif  // MSYM_QUADRATURE_HPP
