#ifndef CLINT_MATRIX_HPP
#define CLINT_MATRIX_HPP

#include <vector>

#include "clint/field.hpp"

namespace clint {

using Vec = std::vector<Elt>;

// Dense matrix over a finite field, row-major. Vectors are rows; a matrix
// acting as a linear map sends v (length cols) to M*v (length rows).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Elt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Elt at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  Vec row(int r) const {
    return Vec(a.begin() + static_cast<std::size_t>(r) * cols,
               a.begin() + static_cast<std::size_t>(r + 1) * cols);
  }
  void set_row(int r, const Vec& v) {
    std::copy(v.begin(), v.end(), a.begin() + static_cast<std::size_t>(r) * cols);
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

Vec apply(const Field& F, const Mat& M, const Vec& v);
Mat matmul(const Field& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& M);
Mat identity(int n);

// In-place reduced row echelon form; returns pivot column indices.
// Zero rows are removed.
std::vector<int> rref(const Field& F, Mat& M);

// Basis (rows) of the null space {v : M v = 0}.
Mat kernel(const Field& F, const Mat& M);

// Incremental echelon basis of a row space. Rows stay fully reduced
// (RREF-equivalent up to row order); normal form sorts by pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field& F, int width) : F_(&F), width_(width) {}

  // Reduces v against the basis; if a nonzero remainder survives, adds it
  // (normalized) and returns true.
  bool insert(Vec v);

  // Reduce v modulo the row space (does not modify the basis).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

  // Rows sorted by pivot column: the unique RREF of the row space.
  Mat normal_form() const;

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  const Field* F_;
  int width_;
  std::vector<Vec> rows_;    // row i has pivot at pivots_[i]
  std::vector<int> pivots_;
};

}  // namespace clint

#endif
