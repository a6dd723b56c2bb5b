#include "msym/charges.hpp"

#include <cmath>
#include <numbers>

#include "msym/errors.hpp"
#include "msym/parallel.hpp"

namespace msym {

void NewsProfile::validate() const {
  if (D < 3) throw DomainError("news profiles need D >= 3, got " + std::to_string(D));
  if (sphere.m != D - 2) throw DomainError("angular grid is not on S^{D-2}");
  if (u.size() < 3) throw DomainError("retarded-time grid needs at least 3 points");
  if (news.size() != u.size()) throw DomainError("news samples do not match the retarded-time grid");
  auto check = [&](const std::vector<std::vector<double>>& slice, const char* what) {
    if (slice.size() != sphere.size()) throw DomainError(std::string(what) + " does not match the angular grid");
    for (const auto& v : slice) {
      if (static_cast<int>(v.size()) != components) throw DomainError(std::string(what) + " has the wrong component count");
      for (double x : v) {
        if (!std::isfinite(x)) throw ValidationError(std::string(what) + " contains a non-finite sample");
      }
    }
  };
  for (const auto& s : news) check(s, "news slice");
  check(field_initial, "initial field");
  check(field_final, "final field");
}

std::vector<double> GaussianBurst::pattern(const std::vector<double>& x) const {
  return {amplitude * (x[0] * x[0] - x[1] * x[1]), amplitude * 2.0 * x[0] * x[1]};
}

std::vector<double> GaussianBurst::field(double u, const std::vector<double>& x) const {
  auto a = pattern(x);
  const double s = 0.5 * (1.0 + std::erf((u - u0) / sigma));
  for (auto& v : a) v *= s;
  return a;
}

std::vector<double> GaussianBurst::news(double u, const std::vector<double>& x) const {
  auto a = pattern(x);
  const double t = (u - u0) / sigma;
  const double s = std::exp(-t * t) / (sigma * std::sqrt(std::numbers::pi));
  for (auto& v : a) v *= s;
  return a;
}

NewsProfile sample_burst(const GaussianBurst& burst, int time_steps, int resolution) {
  if (burst.D < 3) throw DomainError("bursts need D >= 3");
  if (time_steps < 2 || time_steps % 2) throw ValidationError("time steps must be a positive even number");
  if (!(burst.sigma > 0.0)) throw ValidationError("burst width must be positive");
  NewsProfile p;
  p.D = burst.D;
  p.sphere = sphere_quadrature(burst.D - 2, resolution);
  p.components = 2;
  const double a = burst.u_initial();
  const double h = (burst.u_final() - a) / time_steps;
  for (int j = 0; j <= time_steps; ++j) p.u.push_back(a + j * h);
  p.news = parallel_map(p.u.size(), [&](std::size_t j) {
    std::vector<std::vector<double>> slice;
    for (const auto& x : p.sphere.points) slice.push_back(burst.news(p.u[j], x));
    return slice;
  });
  for (const auto& x : p.sphere.points) {
    p.field_initial.push_back(burst.field(p.u.front(), x));
    p.field_final.push_back(burst.field(p.u.back(), x));
  }
  return p;
}

AngularField default_memory_epsilon() {
  return [](const std::vector<double>& x) {
    return std::vector<double>{x[0] * x[0] + 0.5, x[0] * x[1] + 0.25 * x.back()};
  };
}

namespace {

double pair(const std::vector<double>& e, const std::vector<double>& h) {
  if (e.size() != h.size()) throw DomainError("reference parameter and field have different component counts");
  double s = 0.0;
  for (std::size_t c = 0; c < e.size(); ++c) s += e[c] * h[c];
  return s;
}

}  // namespace

double charge_at(const SphereQuadrature& sphere, const std::vector<std::vector<double>>& field,
                 const AngularField& eps) {
  if (field.size() != sphere.size()) throw DomainError("field samples do not match the angular grid");
  const auto terms = parallel_map(sphere.size(), [&](std::size_t a) {
    return sphere.weights[a] * pair(eps(sphere.points[a]), field[a]);
  });
  return pairwise_sum(terms);
}

double simpson(const std::vector<double>& u, const std::vector<double>& f) {
  const std::size_t n = u.size();
  if (n < 3 || n % 2 == 0) throw DomainError("Simpson rule needs an even number of intervals");
  if (f.size() != n) throw DomainError("Simpson samples do not match the grid");
  const double h = (u.back() - u.front()) / static_cast<double>(n - 1);
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j == n - 1) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    terms[j] = w * f[j];
  }
  return pairwise_sum(terms) * h / 3.0;
}

MemoryReport memory_balance(const NewsProfile& news, const AngularField& eps) {
  news.validate();
  MemoryReport rep;
  rep.delta_direct = charge_at(news.sphere, news.field_final, eps) - charge_at(news.sphere, news.field_initial, eps);
  const auto terms = parallel_map(news.sphere.size(), [&](std::size_t a) {
    std::vector<double> integrated(static_cast<std::size_t>(news.components));
    std::vector<double> series(news.u.size());
    for (int c = 0; c < news.components; ++c) {
      for (std::size_t j = 0; j < news.u.size(); ++j) series[j] = news.news[j][a][static_cast<std::size_t>(c)];
      integrated[static_cast<std::size_t>(c)] = simpson(news.u, series);
    }
    return news.sphere.weights[a] * pair(eps(news.sphere.points[a]), integrated);
  });
  rep.delta_news = pairwise_sum(terms);
  rep.residual = rep.delta_direct - rep.delta_news;
  return rep;
}

MemoryReport memory_balance(const GaussianBurst& burst, const AngularField& eps, int time_steps, int resolution,
                            std::vector<int> refinement_steps, std::vector<double> eta) {
  MemoryReport rep = memory_balance(sample_burst(burst, time_steps, resolution), eps);
  std::vector<double> lx, ly;
  for (int steps : refinement_steps) {
    const MemoryReport r = memory_balance(sample_burst(burst, steps, resolution), eps);
    rep.refinement.push_back({steps, r.delta_direct, r.delta_news, r.residual});
    if (r.residual != 0.0) {
      lx.push_back(std::log((burst.u_final() - burst.u_initial()) / steps));
      ly.push_back(std::log(std::abs(r.residual)));
    }
  }
  if (lx.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      mx += lx[i];
      my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(lx.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    rep.slope = sxy / sxx;
  }
  rep.eta = std::move(eta);
  for (double e : rep.eta) {
    rep.dual_direct.push_back(e * rep.delta_direct);
    rep.dual_news.push_back(e * rep.delta_news);
  }
  return rep;
}

double flux_quantization(int n, int k, int resolution, double radius) {
  if (k < 2) throw DomainError("flux quantization needs codimension k >= 2, got " + std::to_string(k));
  if (!(radius > 0.0)) throw ValidationError("sphere radius must be positive");
  const SphereQuadrature q = sphere_quadrature(k - 1, resolution);
  const double c = 2.0 * std::numbers::pi * n / sphere_area(k - 1);
  const auto terms = parallel_map(q.size(), [&](std::size_t a) {
    // H = c |x|^{-k} sum_i (-1)^i x_i dx^0..^i..dx^{k-1}, evaluated on (x, tangents)
    std::vector<std::vector<double>> m;
    std::vector<double> x = sphere_point(q.angles[a]);
    double r2 = 0.0;
    for (auto& v : x) {
      v *= radius;
      r2 += v * v;
    }
    m.push_back(x);
    for (auto t : sphere_tangents(q.angles[a])) {
      for (auto& v : t) v *= radius;
      m.push_back(std::move(t));
    }
    return q.coordinate_weights[a] * c * determinant(std::move(m)) / std::pow(r2, 0.5 * k);
  });
  return pairwise_sum(terms) / (2.0 * std::numbers::pi);
}

FractonGrid fracton_bump(int n, double radius, std::array<double, 3> center, double anisotropy, double half_width) {
  if (n < 5) throw ValidationError("fracton grid needs n >= 5");
  if (!(radius > 0.0) || !(half_width > 0.0)) throw ValidationError("bump radius and box size must be positive");
  FractonGrid g;
  g.n = n;
  g.half_width = half_width;
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  for (auto& c : g.E) c.assign(total, 0.0);
  // fixed symmetric anisotropy pattern (xx, xy, xz, yy, yz, zz)
  const std::array<double, 6> aniso{0.5, 0.7, -0.2, -0.3, 0.4, 0.1};
  const std::array<double, 6> delta{1, 0, 0, 1, 0, 1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double dx = g.coordinate(i) - center[0], dy = g.coordinate(j) - center[1], dz = g.coordinate(k) - center[2];
        const double s2 = (dx * dx + dy * dy + dz * dz) / (radius * radius);
        if (s2 >= 1.0) continue;
        const double b = std::exp(1.0 - 1.0 / (1.0 - s2));
        const std::size_t idx = (static_cast<std::size_t>(i) * n + j) * n + k;
        for (std::size_t c = 0; c < 6; ++c) g.E[c][idx] = b * (delta[c] + anisotropy * aniso[c]);
      }
    }
  }
  return g;
}

FractonReport fracton_moments(const FractonGrid& g) {
  const int n = g.n;
  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  for (const auto& c : g.E) {
    if (c.size() != total) throw DomainError("fracton samples do not match the grid size");
  }
  const double h = g.spacing();
  auto at = [&](std::size_t c, int i, int j, int k) { return g.E[c][(static_cast<std::size_t>(i) * n + j) * n + k]; };
  // component index of E^{ab}
  const int comp[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  FractonReport rep;
  for (const auto& c : g.E) {
    for (double v : c) rep.norm = std::max(rep.norm, std::abs(v));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const bool edge = std::min({i, j, k}) < 2 || std::max({i, j, k}) > n - 3;
        if (!edge) continue;
        for (std::size_t c = 0; c < 6; ++c) rep.boundary_warning = rep.boundary_warning || at(c, i, j, k) != 0.0;
      }
    }
  }
  // rho at interior points; slabs in i evaluated in parallel
  const auto slabs = parallel_map(static_cast<std::size_t>(n - 2), [&](std::size_t s) {
    const int i = static_cast<int>(s) + 1;
    std::array<std::vector<double>, 4> acc;
    for (int j = 1; j < n - 1; ++j) {
      for (int k = 1; k < n - 1; ++k) {
        const int p[3] = {i, j, k};
        double rho = 0.0;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            const std::size_t c = static_cast<std::size_t>(comp[a][b]);
            auto shifted = [&](int da, int db) {
              int q[3] = {p[0], p[1], p[2]};
              q[a] += da;
              q[b] += db;
              return at(c, q[0], q[1], q[2]);
            };
            if (a == b) {
              rho += (shifted(1, 0) - 2.0 * at(c, i, j, k) + shifted(-1, 0)) / (h * h);
            } else {
              rho += (shifted(1, 1) - shifted(1, -1) - shifted(-1, 1) + shifted(-1, -1)) / (4.0 * h * h);
            }
          }
        }
        const double w = rho * h * h * h;
        acc[0].push_back(w);
        acc[1].push_back(g.coordinate(i) * w);
        acc[2].push_back(g.coordinate(j) * w);
        acc[3].push_back(g.coordinate(k) * w);
      }
    }
    std::array<double, 4> out{};
    for (std::size_t m = 0; m < 4; ++m) out[m] = pairwise_sum(acc[m]);
    return out;
  });
  std::array<std::vector<double>, 4> cols;
  for (const auto& s : slabs) {
    for (std::size_t m = 0; m < 4; ++m) cols[m].push_back(s[m]);
  }
  rep.charge = pairwise_sum(cols[0]);
  for (std::size_t m = 0; m < 3; ++m) rep.dipole[m] = pairwise_sum(cols[m + 1]);
  rep.status = rep.boundary_warning ? "warning: support reaches the grid boundary; moment identities not guaranteed"
                                    : "ok";
  return rep;
}

}  // namespace msym
