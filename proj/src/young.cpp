#include "msym/young.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "msym/errors.hpp"

namespace msym {

namespace {

struct SignedPerm {
  std::vector<int> perm;
  int sign;
};

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

std::vector<SignedPerm> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    out.push_back({p, perm_sign(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t sandwich_cost(const Shape& shape) {
  std::size_t c = shape.tuple_count();
  for (int p : shape.signature) c *= factorial(p);
  for (int r : young_rows(shape)) c *= factorial(r);
  return c;
}

// Advances a mixed-radix counter; false after the last combination.
bool advance(std::vector<std::size_t>& idx, const std::vector<std::size_t>& radix) {
  for (std::size_t k = idx.size(); k > 0; --k) {
    if (++idx[k - 1] < radix[k - 1]) return true;
    idx[k - 1] = 0;
  }
  return false;
}

SparseMatrix columns_from_rows(std::size_t n, const std::vector<std::map<std::size_t, Rational>>& rows) {
  std::vector<std::map<std::size_t, Rational>> cols(n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) cols[c].emplace(r, v);
  }
  SparseMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) m.columns[c] = to_sparse(cols[c]);
  return m;
}

Rational trace(const SparseMatrix& m) {
  Rational t = 0;
  for (std::size_t j = 0; j < m.cols; ++j) {
    for (const auto& [i, v] : m.columns[j]) {
      if (i == j) t += v;
    }
  }
  return t;
}

std::size_t rank_from_trace(const SparseMatrix& p) {
  const Rational t = trace(p);
  if (t.get_den() != 1 || sgn(t) < 0) throw ConsistencyError("projector trace is not a natural number");
  return t.get_num().get_ui();
}

}  // namespace

ProjectorMatrix sandwich_projector(const Shape& shape) {
  shape.require_young();
  const auto& basis = tuple_basis(shape);
  const std::size_t n = basis.tuples.size();
  const int N = shape.N();
  const auto rows = young_rows(shape);

  std::vector<std::vector<SignedPerm>> col_perms;
  for (int p : shape.signature) col_perms.push_back(all_perms(p));
  std::vector<std::vector<SignedPerm>> row_perms;
  for (int r : rows) row_perms.push_back(all_perms(r));
  std::vector<std::size_t> col_radix, row_radix;
  for (const auto& v : col_perms) col_radix.push_back(v.size());
  for (const auto& v : row_perms) row_radix.push_back(v.size());

  std::vector<std::map<std::size_t, Rational>> mrows(n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    const BlockTuple& c = basis.tuples[ci];
    std::map<std::size_t, long> acc;
    std::vector<std::size_t> tau(col_perms.size(), 0);
    do {
      int tau_sign = 1;
      BlockTuple tc(c.size());
      for (int s = 0; s < N; ++s) {
        const auto& sp = col_perms[static_cast<std::size_t>(s)][tau[static_cast<std::size_t>(s)]];
        tau_sign *= sp.sign;
        Block& blk = tc[static_cast<std::size_t>(s)];
        blk.resize(c[static_cast<std::size_t>(s)].size());
        for (std::size_t r = 0; r < blk.size(); ++r) {
          blk[r] = c[static_cast<std::size_t>(s)][static_cast<std::size_t>(sp.perm[r])];
        }
      }
      std::vector<std::size_t> sigma(row_perms.size(), 0);
      do {
        BlockTuple j = tc;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto& pr = row_perms[r][sigma[r]].perm;
          for (int s = 0; s < rows[r]; ++s) {
            j[static_cast<std::size_t>(s)][r] = tc[static_cast<std::size_t>(pr[static_cast<std::size_t>(s)])][r];
          }
        }
        CanonicalTerm t = canonicalize(std::move(j), shape.D);
        if (t.sign != 0) acc[basis.index.at(t.blocks)] += tau_sign * t.sign;
      } while (advance(sigma, row_radix));
    } while (advance(tau, col_radix));
    for (const auto& [b, v] : acc) {
      if (v != 0) mrows[ci].emplace(b, Rational(v));
    }
  }
  SparseMatrix m = columns_from_rows(n, mrows);

  // M^2 = alpha M; read alpha off one nonzero column.
  Rational alpha = 0;
  for (std::size_t b = 0; b < n && sgn(alpha) == 0; ++b) {
    if (m.columns[b].empty()) continue;
    const SparseVec mv = m.apply(m.columns[b]);
    const auto& [i, v] = m.columns[b].front();
    for (const auto& [k, w] : mv) {
      if (k == i) alpha = w / v;
    }
    if (sgn(alpha) == 0) throw ConsistencyError("sandwich operator is nilpotent on " + shape.str());
  }
  ProjectorMatrix p;
  p.shape = shape;
  p.method = "sandwich";
  p.matrix = m;
  if (sgn(alpha) != 0) {
    const Rational inv = 1 / alpha;
    for (auto& col : p.matrix.columns) {
      for (auto& e : col) e.second *= inv;
    }
  }
  p.rank = rank_from_trace(p.matrix);
  return p;
}

ProjectorMatrix equivariant_projector(const Shape& shape) {
  shape.require_young();
  const auto& basis = tuple_basis(shape);
  const std::size_t n = basis.tuples.size();
  const int N = shape.N();

  // group tuples by index multiset
  std::map<std::vector<int>, std::vector<std::size_t>> weights;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<int> w;
    for (const auto& b : basis.tuples[t]) w.insert(w.end(), b.begin(), b.end());
    std::sort(w.begin(), w.end());
    weights[w].push_back(t);
  }

  std::vector<std::map<std::size_t, Rational>> prow(n);
  for (const auto& [w, members] : weights) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < members.size(); ++k) local[members[k]] = k;
    std::map<BlockTuple, std::size_t> row_ids;
    std::vector<std::map<std::size_t, Rational>> cols(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      const BlockTuple& t = basis.tuples[members[k]];
      for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
          const Block& bi = t[static_cast<std::size_t>(i)];
          const Block& bj = t[static_cast<std::size_t>(j)];
          for (int a : bj) {
            if (std::binary_search(bi.begin(), bi.end(), a)) continue;
            Block K = bi;
            K.insert(std::upper_bound(K.begin(), K.end(), a), a);
            Block Jp;
            int below = 0;
            for (int x : bj) {
              if (x == a) continue;
              Jp.push_back(x);
              if (x < a) ++below;
            }
            const auto pos = std::find(K.begin(), K.end(), a) - K.begin();
            const int sign = ((pos + below) % 2 == 0) ? 1 : -1;
            BlockTuple key = t;
            key[static_cast<std::size_t>(i)] = std::move(K);
            key[static_cast<std::size_t>(j)] = std::move(Jp);
            // distinguish the pair (i, j) in the row key
            key.push_back({i, j});
            auto [it, ins] = row_ids.emplace(std::move(key), row_ids.size());
            cols[k][it->second] += sign;
          }
        }
      }
    }
    SparseMatrix c(row_ids.size(), members.size());
    for (std::size_t k = 0; k < members.size(); ++k) c.columns[k] = to_sparse(cols[k]);
    const std::vector<SparseVec> ker = kernel_basis(c);
    if (ker.empty()) continue;
    const std::size_t kd = ker.size();
    const std::size_t m = members.size();
    DenseMatrix B(m, kd);
    for (std::size_t a = 0; a < kd; ++a) {
      for (const auto& [r, v] : ker[a]) B(r, a) = v;
    }
    DenseMatrix Bt(kd, m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t a = 0; a < kd; ++a) Bt(a, r) = B(r, a);
    }
    const DenseMatrix Pw = B * (Bt * B).inverse() * Bt;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) {
        if (sgn(Pw(r, s)) != 0) prow[members[r]].emplace(members[s], Pw(r, s));
      }
    }
  }
  ProjectorMatrix p;
  p.shape = shape;
  p.method = "equivariant";
  p.matrix = columns_from_rows(n, prow);
  p.rank = rank_from_trace(p.matrix);
  return p;
}

void check_idempotent(const ProjectorMatrix& p) {
  const SparseMatrix sq = multiply(p.matrix, p.matrix);
  if (sq.columns != p.matrix.columns) {
    throw ConsistencyError("projector for " + p.shape.str() + " is not idempotent");
  }
}

const ProjectorMatrix& young_projector(const Shape& shape) {
  shape.require_young();
  static std::mutex mutex;
  static std::map<Shape, std::unique_ptr<ProjectorMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(shape);
  if (it != cache.end()) return *it->second;
  constexpr std::size_t kSandwichBudget = 4'000'000;
  auto p = std::make_unique<ProjectorMatrix>(sandwich_cost(shape) <= kSandwichBudget
                                                 ? sandwich_projector(shape)
                                                 : equivariant_projector(shape));
  if (p->shape.tuple_count() <= 400) check_idempotent(*p);
  auto& ref = *p;
  cache.emplace(shape, std::move(p));
  return ref;
}

const PrincipalBasis& principal_basis(const Shape& shape) {
  static std::mutex mutex;
  static std::map<Shape, std::unique_ptr<PrincipalBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(shape);
  if (it != cache.end()) return *it->second;
  const ProjectorMatrix& p = young_projector(shape);
  Echelon ech(p.matrix.rows);
  for (const auto& col : p.matrix.columns) ech.insert(col);  // P is symmetric
  auto pb = std::make_unique<PrincipalBasis>();
  pb->shape = shape;
  for (const auto& [col, row] : ech.pivot_rows()) {
    pb->pivots.push_back(col);
    pb->vectors.push_back(p.matrix.columns[col]);
    pb->coords.push_back(to_sparse(row));
  }
  if (pb->pivots.size() != p.rank) throw ConsistencyError("principal basis size differs from trace");
  auto& ref = *pb;
  cache.emplace(shape, std::move(pb));
  return ref;
}

MultiForm project(const MultiForm& t, const ProjectorMatrix& p) {
  if (!(t.shape() == p.shape)) {
    throw DomainError("projector shape " + p.shape.str() + " does not match form shape " +
                      t.shape().str());
  }
  const auto& basis = tuple_basis(p.shape);
  MultiForm out(t.shape(), t.domain());
  for (const auto& [b, c] : t.terms()) {
    const std::size_t idx = basis.index.at(b);
    for (const auto& [r, v] : p.matrix.columns[idx]) {
      out.add_canonical(basis.tuples[r], c * GaussianRational(v));
    }
  }
  return out;
}

MultiForm project(const MultiForm& t) { return project(t, young_projector(t.shape())); }

bool is_principal(const MultiForm& t) { return project(t) == t; }

Integer irrep_dimension(const Shape& shape) {
  shape.require_young();
  if (shape.tuple_count() <= 1000) {
    return Integer(static_cast<unsigned long>(rank(young_projector(shape).matrix)));
  }
  return hook_content_dimension(shape);
}

}  // namespace msym
