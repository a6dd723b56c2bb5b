#include "msym/multiform.hpp"

#include <algorithm>

#include "msym/errors.hpp"

namespace msym {

MultiForm::MultiForm(Shape shape, CoefficientDomain domain)
    : shape_(std::move(shape)), domain_(domain) {
  shape_.validate();
  if (domain_.D != shape_.D) throw DomainError("coefficient domain dimension differs from D");
}

void MultiForm::add_term(BlockTuple blocks, const Coefficient& c) {
  if (blocks.size() != shape_.signature.size()) {
    throw DomainError("term has " + std::to_string(blocks.size()) + " blocks, shape has " +
                      std::to_string(shape_.N()));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (static_cast<int>(blocks[i].size()) != shape_.signature[i]) {
      throw DomainError("block " + std::to_string(i + 1) + " has length " +
                        std::to_string(blocks[i].size()) + ", expected " +
                        std::to_string(shape_.signature[i]));
    }
  }
  CanonicalTerm t = canonicalize(std::move(blocks), shape_.D);
  if (t.sign == 0) return;
  add_canonical(t.blocks, t.sign > 0 ? c : c * GaussianRational(Rational(-1)));
}

void MultiForm::add_canonical(const BlockTuple& blocks, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(blocks, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient MultiForm::coefficient(const BlockTuple& blocks) const {
  auto it = terms_.find(blocks);
  return it == terms_.end() ? Coefficient() : it->second;
}

void MultiForm::require_same_space(const MultiForm& o) const {
  if (!(shape_ == o.shape_)) {
    throw DomainError("shape mismatch: " + shape_.str() + " vs " + o.shape_.str());
  }
  if (domain_.kind != o.domain_.kind || domain_.D != o.domain_.D) {
    throw DomainError("coefficient domain mismatch");
  }
}

MultiForm& MultiForm::operator+=(const MultiForm& o) {
  require_same_space(o);
  domain_.cap = std::max(domain_.cap, o.domain_.cap);
  for (const auto& [b, c] : o.terms_) add_canonical(b, c);
  return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& o) {
  require_same_space(o);
  domain_.cap = std::max(domain_.cap, o.domain_.cap);
  for (const auto& [b, c] : o.terms_) add_canonical(b, c * GaussianRational(Rational(-1)));
  return *this;
}

MultiForm& MultiForm::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

MultiForm MultiForm::empty_like(const Shape& shape) const { return MultiForm(shape, domain_); }

MultiForm MultiForm::homogeneous_part(int degree) const {
  MultiForm out(shape_, domain_);
  for (const auto& [b, c] : terms_) out.add_canonical(b, c.homogeneous_part(degree));
  return out;
}

int MultiForm::max_degree() const {
  int d = 0;
  for (const auto& [b, c] : terms_) d = std::max(d, c.max_degree(domain_.kind));
  return d;
}

void MultiForm::validate() const {
  shape_.validate();
  for (const auto& [b, c] : terms_) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      Block copy = b[i];
      if (canonicalize_block(copy, shape_.D) != 1 || static_cast<int>(b[i].size()) != shape_.signature[i]) {
        throw ValidationError("non-canonical block in stored term");
      }
    }
    c.validate(domain_);
  }
}

MultiForm random_multiform(const Shape& shape, const CoefficientDomain& domain, std::mt19937_64& rng,
                           int max_terms, int max_modes) {
  MultiForm out(shape, domain);
  const auto& basis = tuple_basis(shape);
  std::uniform_int_distribution<std::size_t> pick_tuple(0, basis.tuples.size() - 1);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> nmodes(1, max_modes);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> var(0, shape.D - 1);
  std::uniform_int_distribution<int> freq(-domain.cap, domain.cap);
  std::uniform_int_distribution<int> total(0, std::max(domain.cap, 0));
  auto amplitude = [&]() {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Coefficient c;
    const int modes = domain.kind == CoefficientKind::rational ? 1 : nmodes(rng);
    for (int m = 0; m < modes; ++m) {
      Mode mode(static_cast<std::size_t>(shape.D), 0);
      switch (domain.kind) {
        case CoefficientKind::rational:
          c.add(mode, GaussianRational(amplitude()));
          break;
        case CoefficientKind::poly_box: {
          const int deg = total(rng);
          for (int k = 0; k < deg; ++k) ++mode[static_cast<std::size_t>(var(rng))];
          c.add(mode, GaussianRational(amplitude()));
          break;
        }
        case CoefficientKind::trig_torus:
          for (auto& k : mode) k = freq(rng);
          c.add(mode, GaussianRational(amplitude(), amplitude()));
          break;
      }
    }
    out.add_canonical(basis.tuples[pick_tuple(rng)], c);
  }
  return out;
}

}  // namespace msym
