#include "msym/homotopy.hpp"

#include <algorithm>
#include <set>

#include "msym/calculus.hpp"
#include "msym/linalg.hpp"
#include "msym/operators.hpp"

namespace msym {

namespace {

bool within(const MultiForm& t, int m) {
  for (const auto& [blocks, c] : t.terms()) {
    for (const auto& b : blocks) {
      if (!b.empty() && b.back() >= m) return false;
    }
  }
  return true;
}

}  // namespace

MultiForm homotopy_descent(const MultiForm& t, MultiForm* remainder, int* steps) {
  const Shape& sh = t.shape();
  const int N = sh.N();
  MultiForm potential = t.empty_like(shifted(sh, -1, 0, N));
  MultiForm r = t;
  int done = 0;
  for (int m = sh.D; m >= 1 && !r.is_zero(); --m) {
    const int top = m - 1;
    MultiForm c = potential.empty_like(potential.shape());
    for (const auto& [blocks, coeff] : r.terms()) {
      bool all = true;
      for (const auto& b : blocks) all = all && !b.empty() && b.back() == top;
      if (!all) continue;
      BlockTuple reduced = blocks;
      int sign = 1;
      Coefficient integrated = coeff;
      for (auto& b : reduced) {
        b.pop_back();
        if (b.size() % 2 != 0) sign = -sign;
        integrated = integrated.integral_from_zero(top);
      }
      c.add_canonical(reduced, sign > 0 ? integrated : integrated * GaussianRational(Rational(-1)));
    }
    if (!c.is_zero()) {
      r -= delta_N(c);
      potential += c;
    }
    if (!within(r, top)) break;
    ++done;
  }
  if (remainder) *remainder = r;
  if (steps) *steps = done;
  return potential;
}

bool graded_potential(const MultiForm& t, MultiForm* potential) {
  const Shape& sh = t.shape();
  const int N = sh.N();
  const Shape src = shifted(sh, -1, 0, N);
  MultiForm s = t.empty_like(src);
  std::set<int> degrees;
  for (const auto& [b, c] : t.terms()) {
    for (const auto& [m, a] : c.modes()) {
      int d = 0;
      for (int e : m) d += e;
      degrees.insert(d);
    }
  }
  for (int e : degrees) {
    const MultiForm te = t.homogeneous_part(e);
    const auto src_modes = monomials_of_degree(sh.D, e + N);
    const auto tgt_modes = monomials_of_degree(sh.D, e);
    const DeltaMatrix dm = delta_matrix(src, N, CoefficientKind::poly_box, src_modes, tgt_modes, false);
    const auto x = solve(dm.matrix, full_coordinates(te, tgt_modes));
    if (!x) return false;
    s += principal_element(src, CoefficientKind::poly_box, e + N, src_modes, *x);
  }
  *potential = s;
  return true;
}

HomotopyWitness poincare_homotopy(const MultiForm& t) {
  if (t.domain().kind != CoefficientKind::poly_box) {
    throw DomainError("unsupported domain: the homotopy needs polynomial coefficients on a box");
  }
  const Shape& sh = t.shape();
  sh.require_young();
  if (std::any_of(sh.signature.begin(), sh.signature.end(), [](int p) { return p < 1; })) {
    throw PreconditionError("homotopy needs every slot degree >= 1, got " + sh.str());
  }
  const MultiForm residual = delta_N(t);
  if (!residual.is_zero()) {
    throw NotClosedError("form is not closed: delta_N(T) has " + std::to_string(residual.size()) +
                             " nonzero terms",
                         residual);
  }
  HomotopyWitness w;
  w.target = t;
  MultiForm remainder;
  w.potential = homotopy_descent(t, &remainder, &w.descent_steps);
  w.route = "descent";
  if (!remainder.is_zero()) {
    MultiForm extra;
    if (!graded_potential(remainder, &extra)) {
      throw PreconditionError("closed form has no polynomial potential (nonvanishing cohomology)");
    }
    w.potential += extra;
    w.route = "descent+graded-solve";
  }
  w.potential = MultiForm(w.potential.shape(),
                          CoefficientDomain{CoefficientKind::poly_box, sh.D,
                                            std::max(t.domain().cap + sh.N(), w.potential.max_degree())}) +
                w.potential;
  if (!(delta_N(w.potential) == t)) throw ConsistencyError("homotopy witness does not reproduce T");
  return w;
}

}  // namespace msym
