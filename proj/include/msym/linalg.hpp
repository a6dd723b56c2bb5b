#ifndef MSYM_LINALG_HPP
#define MSYM_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "msym/rational.hpp"

namespace msym {

/// Sparse rational vector: strictly increasing indices, no stored zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const std::map<std::size_t, Rational>& entries);
Rational dot(const SparseVec& a, const SparseVec& b);
/// a + s*b
SparseVec axpy(const SparseVec& a, const Rational& s, const SparseVec& b);

/// Column-major sparse rational matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  SparseMatrix transpose() const;
  SparseVec apply(const SparseVec& x) const;
  bool is_zero() const;
  std::size_t nonzeros() const;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Rank of the span of `vectors`, by sparse fraction-free elimination over Z
/// (each vector is scaled to a primitive integer vector; updates are
/// r <- p*r - a*pivot followed by content removal).
std::size_t rank_fraction_free(const std::vector<SparseVec>& vectors);
std::size_t rank(const SparseMatrix& m);

/// Dense Bareiss elimination; returns the rank. Used as an independent check
/// on the sparse route for small matrices.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> m);
std::size_t bareiss_rank(const SparseMatrix& m);
Rational bareiss_determinant(const std::vector<std::vector<Rational>>& m);

/// Incremental reduced row echelon form over Q.
class Echelon {
 public:
  /// With `augmented`, column `ncols` is a right-hand side and never becomes
  /// a pivot.
  explicit Echelon(std::size_t ncols, bool augmented = false)
      : ncols_(ncols), augmented_(augmented) {}

  /// Returns false when the reduced row is zero (dependent). For augmented
  /// systems a row reducing to 0 = c with c != 0 marks the system
  /// inconsistent.
  bool insert(const SparseVec& row);

  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }
  SparseVec reduce(const SparseVec& row) const;
  const std::map<std::size_t, std::map<std::size_t, Rational>>& pivot_rows() const {
    return pivots_;
  }

 private:
  std::size_t ncols_;
  bool augmented_;
  bool consistent_ = true;
  // pivot column -> row with a leading 1, zero in every other pivot column
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots_;
};

/// Some x with a*x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<SparseVec> solve(const SparseMatrix& a, const SparseVec& b);
std::vector<SparseVec> kernel_basis(const SparseMatrix& a);
/// Greedy left-to-right selection of linearly independent columns.
std::vector<std::size_t> independent_columns(const SparseMatrix& a);

/// Small dense rational matrices (duality maps, encodings).
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static DenseMatrix identity(std::size_t n);

  Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool is_zero() const;
  std::size_t rank() const;
  /// Throws ConsistencyError when singular.
  DenseMatrix inverse() const;
  std::vector<std::vector<Rational>> to_rows() const;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
bool operator==(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace msym

#endif  // MSYM_LINALG_HPP
