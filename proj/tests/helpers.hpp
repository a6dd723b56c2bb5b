#ifndef MSYM_TEST_HELPERS_HPP
#define MSYM_TEST_HELPERS_HPP

#include <random>

#include "msym/multiform.hpp"

namespace testing_util {

inline msym::GaussianRational q(long n, long d = 1) {
  msym::Rational r(n, d);
  r.canonicalize();
  return msym::GaussianRational(r);
}

inline msym::CoefficientDomain rational(int D) { return {msym::CoefficientKind::rational, D, 0}; }
inline msym::CoefficientDomain box(int D, int cap) { return {msym::CoefficientKind::poly_box, D, cap}; }
inline msym::CoefficientDomain torus(int D, int K) { return {msym::CoefficientKind::trig_torus, D, K}; }

inline msym::Coefficient constant(int D, long n, long d = 1) { return msym::Coefficient::constant(D, q(n, d)); }

inline msym::Coefficient monomial(std::vector<int> exp, long n, long d = 1) {
  return msym::Coefficient::mode(exp, q(n, d));
}

}  // namespace testing_util

#endif  // MSYM_TEST_HELPERS_HPP
