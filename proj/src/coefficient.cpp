#include "msym/coefficient.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "msym/errors.hpp"

namespace msym {

std::string kind_name(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::rational: return "rational";
    case CoefficientKind::poly_box: return "poly_box";
    case CoefficientKind::trig_torus: return "trig_torus";
  }
  return "rational";
}

CoefficientKind parse_kind(const std::string& name) {
  if (name == "rational") return CoefficientKind::rational;
  if (name == "poly_box") return CoefficientKind::poly_box;
  if (name == "trig_torus") return CoefficientKind::trig_torus;
  throw ValidationError("unknown coefficient kind \"" + name + "\"");
}

Coefficient Coefficient::constant(int D, const GaussianRational& c) {
  return mode(Mode(static_cast<std::size_t>(D), 0), c);
}

Coefficient Coefficient::mode(const Mode& m, const GaussianRational& c) {
  Coefficient out;
  out.add(m, c);
  return out;
}

void Coefficient::add(const Mode& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = modes_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) modes_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [m, c] : o.modes_) add(m, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [m, c] : o.modes_) add(m, -c);
  return *this;
}

Coefficient& Coefficient::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    modes_.clear();
    return *this;
  }
  for (auto& [m, c] : modes_) c *= s;
  return *this;
}

Coefficient Coefficient::derivative(int j, CoefficientKind kind) const {
  Coefficient out;
  const auto jj = static_cast<std::size_t>(j);
  switch (kind) {
    case CoefficientKind::rational:
      break;
    case CoefficientKind::poly_box:
      for (const auto& [m, c] : modes_) {
        if (m[jj] == 0) continue;
        Mode n = m;
        --n[jj];
        out.add(n, c * Rational(m[jj]));
      }
      break;
    case CoefficientKind::trig_torus:
      for (const auto& [m, c] : modes_) {
        if (m[jj] == 0) continue;
        out.add(m, c * GaussianRational(Rational(0), Rational(m[jj])));
      }
      break;
  }
  return out;
}

Coefficient Coefficient::integral_from_zero(int j) const {
  Coefficient out;
  const auto jj = static_cast<std::size_t>(j);
  for (const auto& [m, c] : modes_) {
    Mode n = m;
    ++n[jj];
    out.add(n, c * Rational(1, n[jj]));
  }
  return out;
}

int Coefficient::max_degree(CoefficientKind kind) const {
  int best = 0;
  for (const auto& [m, c] : modes_) {
    int d = 0;
    for (int e : m) d = kind == CoefficientKind::trig_torus ? std::max(d, std::abs(e)) : d + e;
    best = std::max(best, d);
  }
  return best;
}

GaussianRational Coefficient::constant_part(int D) const {
  auto it = modes_.find(Mode(static_cast<std::size_t>(D), 0));
  return it == modes_.end() ? GaussianRational() : it->second;
}

Coefficient Coefficient::homogeneous_part(int degree) const {
  Coefficient out;
  for (const auto& [m, c] : modes_) {
    if (std::accumulate(m.begin(), m.end(), 0) == degree) out.modes_.emplace(m, c);
  }
  return out;
}

void Coefficient::validate(const CoefficientDomain& domain) const {
  for (const auto& [m, c] : modes_) {
    if (static_cast<int>(m.size()) != domain.D) {
      throw ValidationError("mode vector length differs from D");
    }
    switch (domain.kind) {
      case CoefficientKind::rational:
        if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; })) {
          throw ValidationError("rational coefficients cannot carry modes");
        }
        if (sgn(c.im) != 0) throw ValidationError("rational coefficient with imaginary part");
        break;
      case CoefficientKind::poly_box:
        if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) {
          throw ValidationError("negative exponent");
        }
        if (std::accumulate(m.begin(), m.end(), 0) > domain.cap) {
          throw ValidationError("monomial degree exceeds degree_cap");
        }
        if (sgn(c.im) != 0) throw ValidationError("polynomial coefficient with imaginary part");
        break;
      case CoefficientKind::trig_torus:
        if (std::any_of(m.begin(), m.end(), [&](int e) { return std::abs(e) > domain.cap; })) {
          throw ValidationError("frequency exceeds freq_cap");
        }
        break;
    }
  }
}

std::vector<Mode> monomials_of_degree(int D, int degree) {
  std::vector<Mode> out;
  if (degree < 0) return out;
  Mode m(static_cast<std::size_t>(D), 0);
  // recursive fill, x_0 exponent descending
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == D - 1) {
      m[static_cast<std::size_t>(var)] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
  };
  if (D == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<Mode> frequencies(int D, int K) {
  std::vector<Mode> out;
  Mode k(static_cast<std::size_t>(D), -K);
  while (true) {
    out.push_back(k);
    int i = D - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == K) {
      k[static_cast<std::size_t>(i)] = -K;
      --i;
    }
    if (i < 0) break;
    ++k[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace msym
