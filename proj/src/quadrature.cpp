#include "msym/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "msym/errors.hpp"

namespace msym {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs n >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const std::size_t j = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[j] = 0.5 * (b - a) * x + 0.5 * (a + b);
    rule.weights[j] = (b - a) / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double sphere_area(int m) {
  if (m < 0) throw DomainError("sphere dimension must be nonnegative");
  const double k = (m + 1) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, k) / std::tgamma(k);
}

std::vector<double> sphere_point(const std::vector<double>& a) {
  const std::size_t m = a.size();
  std::vector<double> x(m + 1);
  double s = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = s * std::cos(a[i]);
    s *= std::sin(a[i]);
  }
  x[m] = s;
  return x;
}

std::vector<std::vector<double>> sphere_tangents(const std::vector<double>& a) {
  // x_i = (prod_{l<i} sin a_l) cos a_i for i < m, x_m = prod_{l<m} sin a_l
  const std::size_t m = a.size();
  std::vector<std::vector<double>> t(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = j; i <= m; ++i) {
      double v = 1.0;
      for (std::size_t l = 0; l < std::min(i, m); ++l) v *= (l == j) ? std::cos(a[l]) : std::sin(a[l]);
      if (i < m) v *= (i == j) ? -std::sin(a[i]) : std::cos(a[i]);
      t[j][i] = v;
    }
  }
  return t;
}

double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (a[p][c] == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

SphereQuadrature sphere_quadrature(int m, int resolution) {
  if (m < 1) throw DomainError("sphere quadrature needs m >= 1, got " + std::to_string(m));
  if (resolution < 2) throw ValidationError("quadrature resolution must be at least 2");
  SphereQuadrature q;
  q.m = m;
  q.resolution = resolution;
  const GaussRule polar = gauss_legendre(resolution, 0.0, std::numbers::pi);
  const int nphi = 2 * resolution;
  const double dphi = 2.0 * std::numbers::pi / nphi;
  const std::size_t npolar = static_cast<std::size_t>(m - 1);
  std::vector<std::size_t> idx(npolar, 0);
  while (true) {
    for (int k = 0; k < nphi; ++k) {
      std::vector<double> a(static_cast<std::size_t>(m));
      double cw = dphi;
      double jac = 1.0;
      for (std::size_t l = 0; l < npolar; ++l) {
        a[l] = polar.nodes[idx[l]];
        cw *= polar.weights[idx[l]];
        jac *= std::pow(std::sin(a[l]), static_cast<double>(m - 1 - static_cast<int>(l)));
      }
      a[npolar] = k * dphi;
      q.points.push_back(sphere_point(a));
      q.angles.push_back(std::move(a));
      q.coordinate_weights.push_back(cw);
      q.weights.push_back(cw * jac);
    }
    std::size_t l = 0;
    while (l < npolar && ++idx[l] == polar.nodes.size()) idx[l++] = 0;
    if (l == npolar) break;
  }
  return q;
}

}  // namespace msym
