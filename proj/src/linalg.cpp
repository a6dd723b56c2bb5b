#include "msym/linalg.hpp"

#include <algorithm>

#include "msym/errors.hpp"

namespace msym {

SparseVec to_sparse(const std::map<std::size_t, Rational>& entries) {
  SparseVec out;
  out.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    if (sgn(v) != 0) out.emplace_back(i, v);
  }
  return out;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
  Rational acc = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      Rational v = s * ib->second;
      if (sgn(v) != 0) out.emplace_back(ib->first, std::move(v));
      ++ib;
    } else {
      Rational v = ia->second + s * ib->second;
      if (sgn(v) != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::map<std::size_t, Rational>> rows_acc(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [i, v] : columns[j]) rows_acc[i].emplace(j, v);
  }
  SparseMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) t.columns[i] = to_sparse(rows_acc[i]);
  return t;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [j, xj] : x) {
    for (const auto& [i, v] : columns.at(j)) acc[i] += v * xj;
  }
  return to_sparse(acc);
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(),
                     [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw DomainError("matrix product: inner dimensions differ");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) out.columns[j] = a.apply(b.columns[j]);
  return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

IntRow primitive_integer_row(const SparseVec& v) {
  Integer lcm = 1;
  for (const auto& [i, q] : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntRow row;
  row.reserve(v.size());
  Integer g = 0;
  for (const auto& [i, q] : v) {
    Integer n = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    row.emplace_back(i, std::move(n));
  }
  if (g > 1) {
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
  return row;
}

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }
}

// p*row - a*pivot, where p, a are the leading coefficients.
IntRow cross_eliminate(const IntRow& row, const IntRow& pivot) {
  const Integer& a = row.front().second;
  const Integer& p = pivot.front().second;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto ir = row.begin() + 1;
  auto ip = pivot.begin() + 1;
  while (ir != row.end() || ip != pivot.end()) {
    if (ip == pivot.end() || (ir != row.end() && ir->first < ip->first)) {
      out.emplace_back(ir->first, p * ir->second);
      ++ir;
    } else if (ir == row.end() || ip->first < ir->first) {
      out.emplace_back(ip->first, -a * ip->second);
      ++ip;
    } else {
      Integer v = p * ir->second - a * ip->second;
      if (v != 0) out.emplace_back(ir->first, std::move(v));
      ++ir;
      ++ip;
    }
  }
  remove_content(out);
  return out;
}

}  // namespace

std::size_t rank_fraction_free(const std::vector<SparseVec>& vectors) {
  std::map<std::size_t, IntRow> pivots;
  // Sparsest rows first keeps fill-in down.
  std::vector<const SparseVec*> order;
  order.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!v.empty()) order.push_back(&v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseVec* a, const SparseVec* b) { return a->size() < b->size(); });
  for (const SparseVec* v : order) {
    IntRow row = primitive_integer_row(*v);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        if (row.front().second < 0) {
          for (auto& e : row) e.second = -e.second;
        }
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = cross_eliminate(row, it->second);
    }
  }
  return pivots.size();
}

std::size_t rank(const SparseMatrix& m) { return rank_fraction_free(m.columns); }

std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
  const std::size_t nrows = m.size();
  if (nrows == 0) return 0;
  const std::size_t ncols = m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(const SparseMatrix& m) {
  std::vector<std::vector<Integer>> dense(m.cols, std::vector<Integer>(m.rows));
  for (std::size_t j = 0; j < m.cols; ++j) {
    IntRow row = primitive_integer_row(m.columns[j]);
    for (auto& [i, v] : row) dense[j][i] = std::move(v);
  }
  return bareiss_rank(std::move(dense));
}

Rational bareiss_determinant(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("determinant of a non-square matrix");
    Integer lcm = 1;
    for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (lcm / m[i][j].get_den());
    scale *= Rational(lcm);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign);
  return det / scale;
}

bool Echelon::insert(const SparseVec& row) {
  std::map<std::size_t, Rational> work(row.begin(), row.end());
  // Pivot rows are zero in every other pivot column, so one ascending pass
  // clears all pivot columns.
  for (auto it = work.begin(); it != work.end();) {
    auto pit = pivots_.find(it->first);
    if (pit == pivots_.end() || sgn(it->second) == 0) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const std::size_t col = it->first;
    for (const auto& [j, v] : pit->second) {
      Rational& w = work[j];
      w -= factor * v;
    }
    it = work.upper_bound(col);
  }
  for (auto it = work.begin(); it != work.end();) {
    it = sgn(it->second) == 0 ? work.erase(it) : std::next(it);
  }
  if (work.empty()) return false;
  const std::size_t lead = work.begin()->first;
  if (augmented_ && lead >= ncols_) {
    consistent_ = false;
    return false;
  }
  const Rational inv = 1 / work.begin()->second;
  for (auto& [j, v] : work) v *= inv;
  for (auto& [col, prow] : pivots_) {
    auto hit = prow.find(lead);
    if (hit == prow.end()) continue;
    const Rational factor = hit->second;
    for (const auto& [j, v] : work) {
      Rational& w = prow[j];
      w -= factor * v;
      if (sgn(w) == 0) prow.erase(j);
    }
  }
  pivots_.emplace(lead, std::move(work));
  return true;
}

SparseVec Echelon::reduce(const SparseVec& row) const {
  std::map<std::size_t, Rational> work(row.begin(), row.end());
  for (auto it = work.begin(); it != work.end();) {
    auto pit = pivots_.find(it->first);
    if (pit == pivots_.end() || sgn(it->second) == 0) {
      ++it;
      continue;
    }
    const Rational factor = it->second;
    const std::size_t col = it->first;
    for (const auto& [j, v] : pit->second) work[j] -= factor * v;
    it = work.upper_bound(col);
  }
  return to_sparse(work);
}

std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b) {
  const SparseMatrix rows = a.transpose();
  std::vector<SparseVec> rhs_rows(a.rows);
  Echelon ech(a.cols, true);
  std::vector<Rational> rhs(a.rows);
  for (const auto& [i, v] : b) {
    if (i >= a.rows) throw DomainError("solve: right-hand side longer than the matrix");
    rhs[i] = v;
  }
  for (std::size_t i = 0; i < a.rows; ++i) {
    SparseVec row = rows.columns[i];
    if (sgn(rhs[i]) != 0) row.emplace_back(a.cols, rhs[i]);
    ech.insert(row);
    if (!ech.consistent()) return std::nullopt;
  }
  std::map<std::size_t, Rational> x;
  for (const auto& [col, prow] : ech.pivot_rows()) {
    auto it = prow.find(a.cols);
    if (it != prow.end()) x[col] = it->second;
  }
  return to_sparse(x);
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& a) {
  const SparseMatrix rows = a.transpose();
  Echelon ech(a.cols);
  for (const auto& r : rows.columns) ech.insert(r);
  std::vector<SparseVec> basis;
  const auto& piv = ech.pivot_rows();
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (piv.count(f)) continue;
    std::map<std::size_t, Rational> v;
    v[f] = 1;
    for (const auto& [col, prow] : piv) {
      auto it = prow.find(f);
      if (it != prow.end()) v[col] = -it->second;
    }
    basis.push_back(to_sparse(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const SparseMatrix& a) {
  Echelon ech(a.rows);
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < a.cols; ++j) {
    if (ech.insert(a.columns[j])) picked.push_back(j);
  }
  return picked;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::size_t DenseMatrix::rank() const {
  Echelon ech(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::map<std::size_t, Rational> r;
    for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    ech.insert(to_sparse(r));
  }
  return ech.rank();
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows != cols) throw ConsistencyError("inverse of a non-square matrix");
  const std::size_t n = rows;
  DenseMatrix a = *this;
  DenseMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) throw ConsistencyError("matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(k, j));
        std::swap(inv(piv, j), inv(k, j));
      }
    }
    const Rational p = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= p;
      inv(k, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> DenseMatrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw DomainError("matrix product: inner dimensions differ");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DomainError("matrix difference: shapes differ");
  DenseMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

}  // namespace msym
