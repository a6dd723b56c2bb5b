#ifndef MSYM_TEST_ORACLES_HPP
#define MSYM_TEST_ORACLES_HPP

// Reference computations written independently of the library internals.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Row lengths of the diagram whose column heights are `cols`.
inline std::vector<int> rows_of(const std::vector<int>& cols) {
  std::vector<int> rows;
  for (int c : cols) {
    for (int r = 0; r < c; ++r) {
      if (static_cast<int>(rows.size()) <= r) rows.push_back(0);
      ++rows[static_cast<std::size_t>(r)];
    }
  }
  return rows;
}

/// prod over boxes (D + content) / hook.
inline mpz_class hook_content(int D, const std::vector<int>& cols) {
  const auto rows = rows_of(cols);
  mpq_class v = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < rows[r]; ++c) {
      const int arm = rows[r] - c - 1;
      const int leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      v *= mpq_class(D + c - static_cast<int>(r), arm + leg + 1);
      v.canonicalize();
    }
  }
  return v.get_num();
}

inline std::size_t rank_exact(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

/// All permutations of n positions that only move positions within each group.
inline std::vector<std::vector<int>> group_perms(int n, const std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(out[0].begin(), out[0].end(), 0);
  for (const auto& g : groups) {
    std::vector<std::vector<int>> next;
    std::vector<int> img = g;
    std::sort(img.begin(), img.end());
    do {
      for (auto p : out) {
        for (std::size_t i = 0; i < g.size(); ++i) p[static_cast<std::size_t>(g[i])] = img[i];
        next.push_back(p);
      }
    } while (std::next_permutation(img.begin(), img.end()));
    out = std::move(next);
  }
  return out;
}

/// Rank of the Young symmetrizer (column antisymmetrizer times row
/// symmetrizer) acting on the full tensor power V^{(x) n}, split by weight.
/// Equals the dimension of the GL(D) irrep with column heights `cols`.
inline std::size_t young_symmetrizer_rank(int D, const std::vector<int>& cols) {
  int n = 0;
  std::vector<std::vector<int>> colg, rowg;
  const auto rows = rows_of(cols);
  rowg.resize(rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    colg.emplace_back();
    for (int r = 0; r < cols[j]; ++r) {
      colg.back().push_back(n);
      rowg[static_cast<std::size_t>(r)].push_back(n);
      ++n;
    }
  }
  const auto A = group_perms(n, colg);
  const auto S = group_perms(n, rowg);
  std::vector<int> asign;
  for (const auto& a : A) asign.push_back(perm_sign(a));

  // words grouped by content
  std::map<std::vector<int>, std::vector<std::vector<int>>> weights;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> content(static_cast<std::size_t>(D), 0);
    for (int x : w) ++content[static_cast<std::size_t>(x)];
    weights[content].push_back(w);
    std::size_t i = 0;
    while (i < w.size() && ++w[i] == D) w[i++] = 0;
    if (i == w.size()) break;
  }
  std::size_t total = 0;
  for (const auto& [content, words] : weights) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
    std::vector<std::vector<mpq_class>> m;
    for (const auto& word : words) {
      std::vector<mpq_class> img(words.size());
      for (const auto& s : S) {
        std::vector<int> sw(word.size());
        for (std::size_t i = 0; i < word.size(); ++i) sw[static_cast<std::size_t>(s[i])] = word[i];
        for (std::size_t a = 0; a < A.size(); ++a) {
          std::vector<int> aw(word.size());
          for (std::size_t i = 0; i < word.size(); ++i) aw[static_cast<std::size_t>(A[a][i])] = sw[i];
          img[index.at(aw)] += asign[a];
        }
      }
      m.push_back(std::move(img));
    }
    total += rank_exact(std::move(m));
  }
  return total;
}

/// Betti numbers of the D-torus.
inline std::vector<long> torus_betti(int D) {
  std::vector<long> b;
  for (int k = 0; k <= D; ++k) b.push_back(binomial(D, k));
  return b;
}

}  // namespace oracle

#endif  // MSYM_TEST_ORACLES_HPP
