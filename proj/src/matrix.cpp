#include "clint/matrix.hpp"

#include <algorithm>

namespace clint {

Vec apply(const Field& F, const Mat& M, const Vec& v) {
  Vec out(M.rows, 0);
  for (int r = 0; r < M.rows; ++r) {
    Elt acc = 0;
    const Elt* row = &M.a[static_cast<std::size_t>(r) * M.cols];
    for (int c = 0; c < M.cols; ++c) {
      if (row[c] != 0 && v[c] != 0) acc = F.add(acc, F.mul(row[c], v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Mat matmul(const Field& F, const Mat& A, const Mat& B) {
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      Elt aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        Elt b = B.at(k, j);
        if (b != 0) C.at(i, j) = F.add(C.at(i, j), F.mul(aik, b));
      }
    }
  }
  return C;
}

Mat transpose(const Mat& M) {
  Mat T(M.cols, M.rows);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
  return T;
}

Mat identity(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

std::vector<int> rref(const Field& F, Mat& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int sel = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
    Elt pinv = F.inv(M.at(r, c));
    for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), pinv);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      Elt f = M.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  M.rows = r;
  M.a.resize(static_cast<std::size_t>(r) * M.cols);
  return pivots;
}

Mat kernel(const Field& F, const Mat& M) {
  Mat R = M;
  std::vector<int> pivots = rref(F, R);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < M.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat K(static_cast<int>(free_cols.size()), M.cols);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    int fc = free_cols[i];
    K.at(static_cast<int>(i), fc) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      K.at(static_cast<int>(i), pivots[pr]) = F.neg(R.at(static_cast<int>(pr), fc));
  }
  return K;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int c = 0; c < width_; ++c)
    if (v[c] != 0) { piv = c; break; }
  if (piv < 0) return false;
  Elt pinv = F_->inv(v[piv]);
  for (int c = piv; c < width_; ++c) v[c] = F_->mul(v[c], pinv);
  // back-substitute into existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elt f = rows_[i][piv];
    if (f == 0) continue;
    for (int c = piv; c < width_; ++c)
      rows_[i][c] = F_->sub(rows_[i][c], F_->mul(f, v[c]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elt f = v[pivots_[i]];
    if (f == 0) continue;
    const Vec& row = rows_[i];
    for (int c = pivots_[i]; c < width_; ++c)
      if (row[c] != 0) v[c] = F_->sub(v[c], F_->mul(f, row[c]));
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elt x) { return x == 0; });
}

Mat EchelonBasis::normal_form() const {
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  Mat M(static_cast<int>(rows_.size()), width_);
  for (std::size_t i = 0; i < order.size(); ++i) M.set_row(static_cast<int>(i), rows_[order[i]]);
  return M;
}

}  // namespace clint
