#include <doctest.h>

#include <cmath>
#include <numbers>

#include "msym/charges.hpp"
#include "msym/errors.hpp"

using namespace msym;

TEST_SUITE("charges") {

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const GaussRule g = gauss_legendre(6, 0.0, 2.0);
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 11);
  CHECK(s == doctest::Approx(std::pow(2.0, 12) / 12.0).epsilon(1e-13));
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(1) == doctest::Approx(2 * std::numbers::pi));
  CHECK(sphere_area(2) == doctest::Approx(4 * std::numbers::pi));
  CHECK(sphere_area(3) == doctest::Approx(2 * std::numbers::pi * std::numbers::pi));
  for (int m = 1; m <= 3; ++m) {
    const SphereQuadrature q = sphere_quadrature(m);
    double s = 0.0;
    for (double w : q.weights) s += w;
    CHECK(std::abs(s / sphere_area(m) - 1.0) <= 1e-10);
  }
  CHECK_THROWS_AS(sphere_quadrature(0), DomainError);
}

TEST_CASE("sphere second moments") {
  // integral of x0^2 over S^m is area / (m + 1)
  for (int m = 1; m <= 3; ++m) {
    const SphereQuadrature q = sphere_quadrature(m);
    double s = 0.0;
    for (std::size_t a = 0; a < q.size(); ++a) s += q.weights[a] * q.points[a][0] * q.points[a][0];
    CHECK(s == doctest::Approx(sphere_area(m) / (m + 1)).epsilon(1e-12));
  }
}

TEST_CASE("flux quantization") {
  CHECK(std::abs(flux_quantization(3, 2) - 3.0) <= 1e-10);
  CHECK(std::abs(flux_quantization(0, 3)) <= 1e-12);
  CHECK(std::abs(flux_quantization(-2, 3) + 2.0) <= 1e-9);
  CHECK(std::abs(flux_quantization(5, 4, 24, 2.5) - 5.0) <= 1e-9);
  CHECK_THROWS_AS(flux_quantization(1, 1), DomainError);
}

TEST_CASE("memory balance of a Gaussian burst matches the analytic value") {
  // with the default pattern and reference parameter, Delta Q = 16 pi / 15 on S^2
  const MemoryReport r = memory_balance(GaussianBurst{}, default_memory_epsilon());
  CHECK(r.delta_direct == doctest::Approx(16.0 * std::numbers::pi / 15.0).epsilon(1e-10));
  CHECK(std::abs(r.residual) <= 1e-8 * std::max(std::abs(r.delta_direct), 1.0));
  CHECK(r.slope >= 2.0);
}

TEST_CASE("zero news and orthogonal reference parameters") {
  GaussianBurst b;
  b.amplitude = 0.0;
  const MemoryReport z = memory_balance(b, default_memory_epsilon(), 200, 12);
  CHECK(z.delta_direct == 0.0);
  CHECK(z.delta_news == 0.0);
  CHECK(z.residual == 0.0);
  // eps = (A_2, -A_1) is pointwise orthogonal to the burst pattern
  const AngularField orth = [](const std::vector<double>& x) {
    return std::vector<double>{2 * x[0] * x[1], -(x[0] * x[0] - x[1] * x[1])};
  };
  const MemoryReport o = memory_balance(GaussianBurst{}, orth, 200, 12);
  CHECK(std::abs(o.delta_direct) <= 1e-14);
  CHECK(std::abs(o.delta_news) <= 1e-14);
}

TEST_CASE("linearity in the news and in the reference parameter") {
  GaussianBurst b;
  const MemoryReport base = memory_balance(b, default_memory_epsilon(), 400, 12);
  b.amplitude = 3.0;
  const MemoryReport scaled = memory_balance(b, default_memory_epsilon(), 400, 12);
  CHECK(scaled.delta_news == doctest::Approx(3.0 * base.delta_news).epsilon(1e-14));
  const AngularField eps = default_memory_epsilon();
  const AngularField twice = [eps](const std::vector<double>& x) {
    auto v = eps(x);
    for (auto& e : v) e *= -2.0;
    return v;
  };
  const MemoryReport neg = memory_balance(GaussianBurst{}, twice, 400, 12);
  CHECK(neg.delta_direct == doctest::Approx(-2.0 * base.delta_direct).epsilon(1e-14));
}

TEST_CASE("dual channel transport") {
  const MemoryReport r = memory_balance(GaussianBurst{}, default_memory_epsilon(), 400, 12, {16, 32, 64}, {1.0, -0.5});
  REQUIRE(r.dual_direct.size() == 2);
  CHECK(r.dual_direct[1] == -0.5 * r.delta_direct);
  CHECK(r.dual_news[0] == r.delta_news);
}

TEST_CASE("profile validation") {
  NewsProfile p = sample_burst(GaussianBurst{}, 20, 6);
  CHECK_NOTHROW(p.validate());
  p.news.pop_back();
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(charge_at(sphere_quadrature(2, 4), {{1.0, 2.0}}, default_memory_epsilon()), DomainError);
}

TEST_CASE("fracton moments vanish for compact support") {
  const FractonReport r = fracton_moments(fracton_bump(32));
  CHECK_FALSE(r.boundary_warning);
  CHECK(std::abs(r.charge) <= 1e-5);
  for (double d : r.dipole) CHECK(std::abs(d) <= 1e-5);
  FractonGrid zero = fracton_bump(16, 0.5, {0, 0, 0}, 0.0);
  for (auto& c : zero.E) std::fill(c.begin(), c.end(), 0.0);
  const FractonReport z = fracton_moments(zero);
  CHECK(z.charge == 0.0);
  CHECK(z.norm == 0.0);
}

TEST_CASE("fracton support at the boundary warns") {
  const FractonReport r = fracton_moments(fracton_bump(32, 0.95, {0.1, 0.0, 0.0}));
  CHECK(r.boundary_warning);
  CHECK(r.status.find("warning") != std::string::npos);
}

}
