#ifndef MSYM_CHARGES_HPP
#define MSYM_CHARGES_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "msym/quadrature.hpp"

namespace msym {

/// Tensor-valued function on the sphere S^{D-2}, components in an
/// orthonormal angular frame.
using AngularField = std::function<std::vector<double>(const std::vector<double>& x)>;

/// Samples of the leading radiative coefficient N(u, x) on a product grid.
/// `news[j][a][c]` is component c at time u[j] and sphere node a; `field_initial`
/// and `field_final` hold the leading field H at u.front() and u.back().
struct NewsProfile {
  int D = 4;
  std::vector<double> u;
  SphereQuadrature sphere;
  int components = 0;
  std::vector<std::vector<std::vector<double>>> news;
  std::vector<std::vector<double>> field_initial;
  std::vector<std::vector<double>> field_final;
  double falloff() const { return (D - 2) / 2.0; }
  void validate() const;
};

/// Synthetic Gaussian burst: H(u,x) = A(x) (1 + erf((u-u0)/sigma)) / 2 and
/// N = dH/du, with A = (x0^2 - x1^2, 2 x0 x1) scaled by `amplitude`.
struct GaussianBurst {
  int D = 4;
  double u0 = 0.0;
  double sigma = 1.0;
  double amplitude = 1.0;
  double window = 12.0;
  std::vector<double> pattern(const std::vector<double>& x) const;
  std::vector<double> field(double u, const std::vector<double>& x) const;
  std::vector<double> news(double u, const std::vector<double>& x) const;
  double u_initial() const { return u0 - window * sigma; }
  double u_final() const { return u0 + window * sigma; }
};

NewsProfile sample_burst(const GaussianBurst& burst, int time_steps, int resolution);

/// Default reference parameter on S^{D-2} with two components.
AngularField default_memory_epsilon();

/// Q = sum_a w_a <eps(x_a), H_a>, full contraction, pairwise summed.
double charge_at(const SphereQuadrature& sphere, const std::vector<std::vector<double>>& field,
                 const AngularField& eps);

/// Composite Simpson rule on a uniform grid with an even number of intervals.
double simpson(const std::vector<double>& u, const std::vector<double>& f);

struct RefinementRow {
  int time_steps = 0;
  double delta_direct = 0.0;
  double delta_news = 0.0;
  double residual = 0.0;
};

struct MemoryReport {
  double delta_direct = 0.0;
  double delta_news = 0.0;
  double residual = 0.0;
  std::vector<RefinementRow> refinement;
  double slope = 0.0;
  std::vector<double> eta;
  std::vector<double> dual_direct;
  std::vector<double> dual_news;
};

/// Both sides of the balance law from sampled data.
MemoryReport memory_balance(const NewsProfile& news, const AngularField& eps);

/// Balance law for a synthetic burst with a log-log refinement study over
/// `refinement_steps` (time subdivisions); dual channels transported by `eta`.
MemoryReport memory_balance(const GaussianBurst& burst, const AngularField& eps, int time_steps = 2000,
                            int resolution = 24, std::vector<int> refinement_steps = {16, 32, 64},
                            std::vector<double> eta = {});

/// (1/2pi) times the integral over S^{k-1} of H = 2 pi n vol / area, pulled
/// back through the angle chart.
double flux_quantization(int n, int k, int resolution = 24, double radius = 1.0);

struct FractonGrid {
  int n = 64;
  double half_width = 1.0;
  /// E[c][idx] for c in (xx, xy, xz, yy, yz, zz), idx = (i*n + j)*n + k.
  std::array<std::vector<double>, 6> E;
  double spacing() const { return 2.0 * half_width / (n - 1); }
  double coordinate(int i) const { return -half_width + i * spacing(); }
};

/// E^{ij} = bump(|x - c| / radius) (delta^{ij} + anisotropy M^{ij}).
FractonGrid fracton_bump(int n, double radius = 0.5, std::array<double, 3> center = {0.1, -0.05, 0.02},
                         double anisotropy = 0.3, double half_width = 1.0);

struct FractonReport {
  double charge = 0.0;
  std::array<double, 3> dipole{};
  double norm = 0.0;
  bool boundary_warning = false;
  std::string status;
};

/// rho = d_i d_j E^{ij} by central differences; Riemann-sum moments.
FractonReport fracton_moments(const FractonGrid& grid);

}  // namespace msym

#endif  // MSYM_CHARGES_HPP
