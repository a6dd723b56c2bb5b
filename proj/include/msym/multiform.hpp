#ifndef MSYM_MULTIFORM_HPP
#define MSYM_MULTIFORM_HPP

#include <cstdint>
#include <map>
#include <random>

#include "msym/coefficient.hpp"
#include "msym/shape.hpp"

namespace msym {

/// Element of Omega^{p_1 (x) ... (x) p_N}: sum over canonical block tuples
/// of coefficient * dx^{B_1} (x) ... (x) dx^{B_N}.
class MultiForm {
 public:
  MultiForm() = default;
  /// Validates the shape and that the domain dimension matches.
  MultiForm(Shape shape, CoefficientDomain domain);

  const Shape& shape() const { return shape_; }
  const CoefficientDomain& domain() const { return domain_; }
  const std::map<BlockTuple, Coefficient>& terms() const { return terms_; }

  /// Canonicalizes the blocks (antisymmetry sign, repeated index -> no-op).
  /// Throws DomainError for wrong block lengths or out-of-range indices.
  void add_term(BlockTuple blocks, const Coefficient& c);
  /// `blocks` must already be canonical.
  void add_canonical(const BlockTuple& blocks, const Coefficient& c);
  Coefficient coefficient(const BlockTuple& blocks) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  MultiForm& operator+=(const MultiForm& o);
  MultiForm& operator-=(const MultiForm& o);
  MultiForm& operator*=(const GaussianRational& s);
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator*(MultiForm a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const MultiForm& a, const MultiForm& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  /// Throws DomainError unless shapes and coefficient kinds agree.
  void require_same_space(const MultiForm& o) const;
  /// Same form viewed in another shape/domain (used by operators that change
  /// the signature). Terms are dropped.
  MultiForm empty_like(const Shape& shape) const;
  MultiForm homogeneous_part(int degree) const;
  int max_degree() const;
  /// Throws ValidationError if a coefficient leaves the domain.
  void validate() const;

 private:
  Shape shape_;
  CoefficientDomain domain_;
  std::map<BlockTuple, Coefficient> terms_;
};

/// Random element with small integer-ratio amplitudes. Polynomial degrees stay
/// within the domain cap, frequencies within the frequency cap.
MultiForm random_multiform(const Shape& shape, const CoefficientDomain& domain, std::mt19937_64& rng,
                           int max_terms = 6, int max_modes = 3);

}  // namespace msym

#endif  // MSYM_MULTIFORM_HPP
