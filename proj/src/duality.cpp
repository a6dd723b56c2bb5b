#include "msym/duality.hpp"

#include <numeric>
#include <random>

#include "msym/errors.hpp"
#include "msym/operators.hpp"
#include "msym/young.hpp"

namespace msym {

namespace {

MultiForm form_from_full(const Shape& shape, int cap, const std::vector<Mode>& modes, const SparseVec& v) {
  const auto& basis = tuple_basis(shape);
  MultiForm out(shape, CoefficientDomain{CoefficientKind::poly_box, shape.D, cap});
  for (const auto& [k, a] : v) {
    out.add_canonical(basis.tuples[k / modes.size()], Coefficient::mode(modes[k % modes.size()], GaussianRational(a)));
  }
  return out;
}

// Constant-mode pairing of a full-coordinate vector with a constant form.
Rational pair_constant(const std::vector<Rational>& eps, const SparseVec& v, std::size_t nmodes) {
  Rational q = 0;
  for (const auto& [k, a] : v) {
    if (k % nmodes == 0) q += eps[k / nmodes] * a;
  }
  return q;
}

Rational pair_constant(const std::vector<Rational>& eps, const MultiForm& h) {
  const auto& basis = tuple_basis(h.shape());
  Rational q = 0;
  for (const auto& [b, c] : h.terms()) q += eps[basis.index.at(b)] * c.constant_part(h.shape().D).re;
  return q;
}

std::vector<Rational> constant_vector(const MultiForm& eps, const Shape& shape) {
  if (!(eps.shape() == shape)) throw DomainError("reference parameter shape " + eps.shape().str() + " should be " + shape.str());
  const auto& basis = tuple_basis(shape);
  std::vector<Rational> out(basis.tuples.size());
  for (const auto& [b, c] : eps.terms()) {
    for (const auto& [m, a] : c.modes()) {
      if (std::any_of(m.begin(), m.end(), [](int e) { return e != 0; }) || sgn(a.im) != 0) {
        throw ValidationError("reference parameter must be a real constant");
      }
    }
    out[basis.index.at(b)] = c.constant_part(shape.D).re;
  }
  return out;
}

SparseVec combine(const std::vector<SparseVec>& cols, const DenseMatrix& x, std::size_t k) {
  std::map<std::size_t, Rational> acc;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (sgn(x(j, k)) == 0) continue;
    for (const auto& [i, v] : cols[j]) acc[i] += x(j, k) * v;
  }
  return to_sparse(acc);
}

std::vector<int> first_slots(int i) {
  std::vector<int> s(static_cast<std::size_t>(i));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

std::vector<Shape> dual_signatures(const Shape& shape) {
  shape.require_young();
  const int bound = (shape.D - 2) / 2;
  for (int p : shape.signature) {
    if (shape.D < 2 || p > bound) {
      throw PreconditionError("duality needs p_k <= floor((D-2)/2) = " + std::to_string(std::max(bound, 0)) +
                              "; got " + shape.str());
    }
  }
  std::vector<Shape> out;
  for (int i = 1; i <= shape.N(); ++i) {
    Shape s = shape;
    for (int j = 0; j < i; ++j) s.signature[static_cast<std::size_t>(j)] = shape.D - 2 - shape.signature[static_cast<std::size_t>(j)];
    if (!s.weakly_decreasing()) break;
    out.push_back(std::move(s));
  }
  return out;
}

EncodingMap build_encoding(const std::vector<Rational>& charge_row,
                           const std::vector<std::vector<Rational>>& candidate_rows) {
  const std::size_t n = charge_row.size();
  auto sparse = [](const std::vector<Rational>& r) {
    std::map<std::size_t, Rational> m;
    for (std::size_t i = 0; i < r.size(); ++i) m[i] = r[i];
    return to_sparse(m);
  };
  Echelon ech(n);
  if (!ech.insert(sparse(charge_row))) {
    throw PreconditionError("degenerate charge: Q vanishes identically on the space");
  }
  EncodingMap enc;
  enc.stack = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) enc.stack(0, j) = charge_row[j];
  std::size_t row = 1;
  for (std::size_t c = 0; c < candidate_rows.size() && row < n; ++c) {
    if (candidate_rows[c].size() != n) throw DomainError("candidate row length differs from the charge row");
    if (!ech.insert(sparse(candidate_rows[c]))) continue;
    for (std::size_t j = 0; j < n; ++j) enc.stack(row, j) = candidate_rows[c][j];
    enc.selected.push_back(c);
    ++row;
  }
  if (row != n) throw ConsistencyError("coordinate functionals do not complete the charge to a basis");
  return enc;
}

EncodingMap build_encoding(const std::vector<Rational>& charge_row, std::size_t dim) {
  std::vector<std::vector<Rational>> units(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) units[i][i] = 1;
  return build_encoding(charge_row, units);
}

DenseMatrix triangularize(const DenseMatrix& f) {
  const std::size_t n = f.rows;
  if (f.cols != n || n == 0) throw DomainError("triangularize needs a nonempty square matrix");
  for (std::size_t j = 1; j < n; ++j) {
    if (sgn(f(0, j)) != 0) throw PreconditionError("first row is not (eta, 0, ..., 0)");
  }
  DenseMatrix t = f;
  for (std::size_t r = 1; r < n; ++r) {
    std::size_t piv = r;
    while (piv < n && sgn(t(r, piv)) == 0) ++piv;
    if (piv == n) throw ConsistencyError("duality map is singular");
    if (piv != r) {
      for (std::size_t i = 0; i < n; ++i) std::swap(t(i, r), t(i, piv));
    }
    for (std::size_t c = r + 1; c < n; ++c) {
      if (sgn(t(r, c)) == 0) continue;
      const Rational factor = t(r, c) / t(r, r);
      for (std::size_t i = 0; i < n; ++i) t(i, c) -= factor * t(i, r);
    }
  }
  return t;
}

MultiForm default_epsilon(const Shape& shape) {
  MultiForm eps(shape, CoefficientDomain{CoefficientKind::rational, shape.D, 0});
  const auto& basis = tuple_basis(shape);
  for (std::size_t t = 0; t < basis.tuples.size(); ++t) {
    const long tt = static_cast<long>(t);
    Rational v(tt * tt + 1, 2 * tt + 3);
    v.canonicalize();
    if (t % 2) v = -v;
    eps.add_canonical(basis.tuples[t], Coefficient::constant(shape.D, GaussianRational(v)));
  }
  return eps;
}

DualityReport build_duality_maps(const Shape& shape, const DualityOptions& options) {
  const std::vector<Shape> duals = dual_signatures(shape);
  const int N = shape.N();
  const int D = shape.D;
  const int cap = options.degree_cap < 0 ? N : options.degree_cap;
  if (cap < N) throw ValidationError("degree cap must be at least N = " + std::to_string(N));
  const Metric g = options.metric.D == D ? options.metric : Metric::euclidean(D);

  std::vector<Mode> gauge_modes, field_modes;
  for (int e = N; e <= cap; ++e) {
    for (auto& m : monomials_of_degree(D, e)) gauge_modes.push_back(std::move(m));
  }
  for (int e = 0; e <= cap - N; ++e) {
    for (auto& m : monomials_of_degree(D, e)) field_modes.push_back(std::move(m));
  }
  const std::size_t nfm = field_modes.size();

  DualityReport rep;
  rep.shape = shape;
  rep.degree_cap = cap;
  rep.metric = g.name();

  // gauge AS bases: pivot columns of the full-coordinate delta matrices
  std::vector<Shape> descriptions{shape};
  descriptions.insert(descriptions.end(), duals.begin(), duals.end());
  std::vector<DeltaMatrix> dms;
  std::vector<std::vector<std::size_t>> pivots;
  std::vector<SparseMatrix> as_cols;
  for (const auto& s : descriptions) {
    dms.push_back(delta_matrix(s, N, CoefficientKind::poly_box, gauge_modes, field_modes, false));
    pivots.push_back(independent_columns(dms.back().matrix));
    SparseMatrix a(dms.back().matrix.rows, pivots.back().size());
    for (std::size_t k = 0; k < pivots.back().size(); ++k) a.columns[k] = dms.back().matrix.columns[pivots.back()[k]];
    if (bareiss_rank(a) != a.cols) throw ConsistencyError("AS restriction is not injective for " + s.str());
    rep.certificates.push_back("AS " + s.str() + ": delta_N injective on " + std::to_string(a.cols) +
                               " gauge-fixed fields (gauge degrees " + std::to_string(N) + ".." +
                               std::to_string(cap) + ")");
    as_cols.push_back(std::move(a));
  }
  const SparseMatrix& h0 = as_cols[0];
  const std::size_t g0 = h0.cols;
  rep.gauge_as_dimension = g0;
  rep.field_strength_dimension = g0;

  // starred field strengths S_i = *_{1..i} H0
  std::vector<std::vector<SparseVec>> starred(duals.size());
  for (std::size_t i = 0; i < duals.size(); ++i) {
    const auto slots = first_slots(static_cast<int>(i) + 1);
    for (std::size_t k = 0; k < g0; ++k) {
      const MultiForm h = form_from_full(dms[0].target, cap, field_modes, h0.columns[k]);
      starred[i].push_back(full_coordinates(hodge_slots(h, slots, g), field_modes));
    }
  }

  // stacked kernel of [S_i | -A_i] over all duals
  std::vector<std::size_t> row_offset{0}, col_offset{g0};
  for (std::size_t i = 0; i < duals.size(); ++i) {
    row_offset.push_back(row_offset.back() + as_cols[i + 1].rows);
    col_offset.push_back(col_offset.back() + as_cols[i + 1].cols);
  }
  SparseMatrix big(row_offset.back(), col_offset.back());
  for (std::size_t k = 0; k < g0; ++k) {
    SparseVec col;
    for (std::size_t i = 0; i < duals.size(); ++i) {
      for (const auto& [r, v] : starred[i][k]) col.emplace_back(row_offset[i] + r, v);
    }
    big.columns[k] = std::move(col);
  }
  for (std::size_t i = 0; i < duals.size(); ++i) {
    for (std::size_t k = 0; k < as_cols[i + 1].cols; ++k) {
      SparseVec col;
      for (const auto& [r, v] : as_cols[i + 1].columns[k]) col.emplace_back(row_offset[i] + r, -v);
      big.columns[col_offset[i] + k] = std::move(col);
    }
  }
  const auto ker = kernel_basis(big);
  const std::size_t w = ker.size();
  rep.n = w;
  if (w == 0) throw PreconditionError("no gauge field in the truncation has exact duals in every description");
  DenseMatrix X(g0, w);
  std::vector<DenseMatrix> Y;
  for (std::size_t i = 0; i < duals.size(); ++i) Y.emplace_back(as_cols[i + 1].cols, w);
  for (std::size_t k = 0; k < w; ++k) {
    for (const auto& [idx, v] : ker[k]) {
      if (idx < g0) {
        X(idx, k) = v;
        continue;
      }
      std::size_t i = 0;
      while (idx >= col_offset[i + 1]) ++i;
      Y[i](idx - col_offset[i], k) = v;
    }
  }

  // charges
  const Shape fs0 = dms[0].target;
  const std::vector<Rational> eps0 =
      constant_vector(options.epsilon0 ? *options.epsilon0 : default_epsilon(fs0), fs0);
  std::vector<Rational> q0(w);
  std::vector<SparseVec> hx(w);
  for (std::size_t k = 0; k < w; ++k) {
    hx[k] = combine(h0.columns, X, k);
    q0[k] = pair_constant(eps0, hx[k], nfm);
  }
  rep.encoding0 = build_encoding(q0, w);
  const DenseMatrix e0inv = rep.encoding0.stack.inverse();

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<std::vector<Rational>> fields;
  while (static_cast<int>(fields.size()) < options.test_fields) {
    std::vector<Rational> x(w);
    for (auto& v : x) v = coef(rng);
    Rational q = 0;
    for (std::size_t k = 0; k < w; ++k) q += q0[k] * x[k];
    if (sgn(q) != 0) fields.push_back(std::move(x));
  }
  auto gauge_field = [&](const std::vector<Rational>& x) {
    std::map<std::size_t, Rational> coords;
    for (std::size_t j = 0; j < g0; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < w; ++k) v += X(j, k) * x[k];
      if (sgn(v) != 0) coords[pivots[0][j]] = v;
    }
    return principal_element(shape, CoefficientKind::poly_box, cap, gauge_modes, to_sparse(coords));
  };

  for (std::size_t i = 0; i < duals.size(); ++i) {
    DualDescription dd;
    dd.shape = duals[i];
    dd.gauge_as_dimension = as_cols[i + 1].cols;
    dd.conjugated_hodge = Y[i];
    const Shape fsi = dms[i + 1].target;
    const auto slots = first_slots(static_cast<int>(i) + 1);
    const MultiForm star_eps0 =
        hodge_slots(options.epsilon0 ? *options.epsilon0 : default_epsilon(fs0), slots, g);
    std::vector<Rational> epsi;
    std::vector<SparseVec> sx(w);
    for (std::size_t k = 0; k < w; ++k) sx[k] = combine(starred[i], X, k);
    if (i < options.epsilon_duals.size()) {
      epsi = constant_vector(options.epsilon_duals[i], fsi);
    } else {
      epsi = constant_vector(star_eps0, fsi);
      if (i < options.charge_scales.size()) {
        for (auto& v : epsi) v *= options.charge_scales[i];
        SparseMatrix m(w, tuple_basis(fsi).tuples.size());
        std::vector<std::map<std::size_t, Rational>> cols(m.cols);
        for (std::size_t k = 0; k < w; ++k) {
          for (const auto& [r, v] : sx[k]) {
            if (r % nfm == 0) cols[r / nfm][k] = v;
          }
        }
        for (std::size_t c = 0; c < m.cols; ++c) m.columns[c] = to_sparse(cols[c]);
        const auto zeta = kernel_basis(m);
        if (!zeta.empty()) {
          for (const auto& [t, v] : zeta.front()) epsi[t] += v;
        }
      }
    }
    std::vector<Rational> qi(w);
    for (std::size_t k = 0; k < w; ++k) qi[k] = pair_constant(epsi, sx[k], nfm);
    std::vector<std::vector<Rational>> yrows(Y[i].rows, std::vector<Rational>(w));
    for (std::size_t r = 0; r < Y[i].rows; ++r) {
      for (std::size_t k = 0; k < w; ++k) yrows[r][k] = Y[i](r, k);
    }
    dd.encoding = build_encoding(qi, yrows);
    dd.f = dd.encoding.stack * e0inv;

    // independent route: gauge field -> delta_N -> partial star -> exact solve
    DenseMatrix y_ind(Y[i].rows, w);
    std::vector<Rational> qi_ind(w);
    for (std::size_t k = 0; k < w; ++k) {
      std::vector<Rational> unit(w);
      unit[k] = 1;
      const MultiForm hs = hodge_slots(delta_N(gauge_field(unit)), slots, g);
      const auto y = solve(as_cols[i + 1], full_coordinates(hs, field_modes));
      if (!y) throw ConsistencyError("starred field strength has no potential in " + duals[i].str());
      for (const auto& [r, v] : *y) y_ind(r, k) = v;
      qi_ind[k] = pair_constant(epsi, hs);
    }
    dd.independent_route = y_ind == Y[i];
    DenseMatrix ei_ind(w, w);
    for (std::size_t k = 0; k < w; ++k) ei_ind(0, k) = qi_ind[k];
    for (std::size_t s = 0; s < dd.encoding.selected.size(); ++s) {
      for (std::size_t k = 0; k < w; ++k) ei_ind(s + 1, k) = y_ind(dd.encoding.selected[s], k);
    }
    dd.commutes = (ei_ind - dd.f * rep.encoding0.stack).is_zero();
    if (!dd.commutes || !dd.independent_route) {
      throw ConsistencyError("duality diagram does not commute for " + duals[i].str());
    }
    for (std::size_t k = 1; k < w; ++k) {
      if (sgn(dd.f(0, k)) != 0) {
        throw PreconditionError("charges incompatible: Q_" + std::to_string(i + 1) +
                                " is not proportional to Q_0 on the dualizable fields");
      }
    }
    dd.f_triangular = triangularize(dd.f);
    dd.eta = dd.f_triangular(0, 0);
    dd.restriction_unique = true;
    for (std::size_t k = 1; k < w; ++k) dd.restriction_unique = dd.restriction_unique && sgn(dd.f_triangular(0, k)) == 0;

    const DenseMatrix finv = dd.f.inverse();
    const DenseMatrix ftinv = dd.f_triangular.inverse();
    dd.eta_field_independent = true;
    dd.inverse_roundtrip = true;
    for (std::size_t k = 1; k < w; ++k) dd.inverse_roundtrip = dd.inverse_roundtrip && sgn(ftinv(0, k)) == 0;
    for (const auto& x : fields) {
      const MultiForm h = delta_N(gauge_field(x));
      const Rational qa = pair_constant(eps0, h);
      const Rational qb = pair_constant(epsi, hodge_slots(h, slots, g));
      dd.sample_q0.push_back(qa);
      dd.sample_qi.push_back(qb);
      dd.eta_field_independent = dd.eta_field_independent && qb == dd.eta * qa;
      // f^{-1} carries pi_i(T) back to pi_0(T); its first entry is Q_0
      DenseMatrix xi(w, 1);
      for (std::size_t k = 0; k < w; ++k) xi(k, 0) = x[k];
      const DenseMatrix back = finv * (dd.encoding.stack * xi);
      dd.inverse_roundtrip = dd.inverse_roundtrip && back(0, 0) == qa && ftinv(0, 0) * qb == qa;
    }
    rep.duals.push_back(std::move(dd));
  }
  return rep;
}

}  // namespace msym
