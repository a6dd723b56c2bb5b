#ifndef MSYM_COEFFICIENT_HPP
#define MSYM_COEFFICIENT_HPP

#include <map>
#include <string>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

enum class CoefficientKind { rational, poly_box, trig_torus };

std::string kind_name(CoefficientKind kind);
/// Throws ValidationError for unknown names.
CoefficientKind parse_kind(const std::string& name);

/// Which scalar fields the coefficients range over. `cap` is the total degree
/// bound (poly_box) or the frequency bound K (trig_torus); unused for
/// rational constants.
struct CoefficientDomain {
  CoefficientKind kind = CoefficientKind::rational;
  int D = 0;
  int cap = 0;

  friend bool operator==(const CoefficientDomain& a, const CoefficientDomain& b) {
    return a.kind == b.kind && a.D == b.D && a.cap == b.cap;
  }
};

/// Exponent vector (poly_box), frequency vector (trig_torus) or the zero
/// vector (rational).
using Mode = std::vector<int>;

/// Finite expansion sum_m c_m phi_m, with phi_m = x^m (poly_box),
/// exp(i k.x) (trig_torus) or 1 (rational). Zero amplitudes are never stored.
/// Amplitudes of poly_box and rational coefficients have zero imaginary part.
class Coefficient {
 public:
  Coefficient() = default;
  static Coefficient constant(int D, const GaussianRational& c);
  static Coefficient mode(const Mode& m, const GaussianRational& c);

  const std::map<Mode, GaussianRational>& modes() const { return modes_; }
  bool is_zero() const { return modes_.empty(); }
  void add(const Mode& m, const GaussianRational& c);
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const GaussianRational& s);
  friend Coefficient operator*(Coefficient a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.modes_ == b.modes_; }

  /// Partial derivative along coordinate j.
  Coefficient derivative(int j, CoefficientKind kind) const;
  /// x_j -> integral from 0 to x_j (poly_box only).
  Coefficient integral_from_zero(int j) const;
  /// Largest total degree (poly_box) or largest |k_j| (trig_torus).
  int max_degree(CoefficientKind kind) const;
  /// Component along the constant function.
  GaussianRational constant_part(int D) const;
  /// Restriction to modes of one total degree.
  Coefficient homogeneous_part(int degree) const;
  /// Throws ValidationError when a mode is outside the domain.
  void validate(const CoefficientDomain& domain) const;

 private:
  std::map<Mode, GaussianRational> modes_;
};

/// Exponent vectors of total degree exactly `degree` in D variables,
/// lexicographically descending (x_0-heavy first).
std::vector<Mode> monomials_of_degree(int D, int degree);
/// Frequency vectors with every |k_j| <= K.
std::vector<Mode> frequencies(int D, int K);

}  // namespace msym

#endif  // MSYM_COEFFICIENT_HPP
