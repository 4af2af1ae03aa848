#include "ctl/matrix.hpp"

#include <algorithm>

namespace ctl {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

Mat Mat::scalar(int n, const Cyclotomic& c) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) == (i == j ? Cyclotomic(1) : Cyclotomic(0)))) return false;
  return true;
}

bool Mat::is_scalar(Cyclotomic* c) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const Cyclotomic& d = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) == (i == j ? d : Cyclotomic(0)))) return false;
  if (c) *c = d;
  return true;
}

Cyclotomic Mat::trace() const {
  Cyclotomic t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw precondition_error("matrix shape mismatch");
  Mat m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw precondition_error("matrix shape mismatch");
  Mat m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw precondition_error("matrix shape mismatch");
  Mat m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return m;
}

Mat Mat::scaled(const Cyclotomic& c) const {
  Mat m = *this;
  for (auto& v : m.a_) v *= c;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

std::vector<int> rref(Mat* mp) {
  Mat& m = *mp;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
    Cyclotomic inv = m.at(row, col).inverse();
    for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Mat nullspace(const Mat& m) {
  Mat r = m;
  auto pivots = rref(&r);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Mat basis(m.cols(), static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    basis.at(free_cols[f], static_cast<int>(f)) = Cyclotomic(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], static_cast<int>(f)) =
          -r.at(static_cast<int>(pi), free_cols[f]);
  }
  return basis;
}

std::vector<Cyclotomic> solve(const Mat& a, const std::vector<Cyclotomic>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw precondition_error("rhs size mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = rref(&aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    throw error("linear system is inconsistent");
  std::vector<Cyclotomic> x(a.cols(), Cyclotomic(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug.at(static_cast<int>(pi), a.cols());
  return x;
}

int rank(Mat m) { return static_cast<int>(rref(&m).size()); }

Mat Mat::inverse() const {
  if (rows_ != cols_) throw precondition_error("inverse of non-square matrix");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Cyclotomic(1);
  }
  auto pivots = rref(&aug);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
    throw error("matrix is singular");
  Mat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Cyclotomic Mat::determinant() const {
  if (rows_ != cols_) throw precondition_error("determinant of non-square matrix");
  Mat m = *this;
  Cyclotomic det(1);
  for (int col = 0; col < cols_; ++col) {
    int pr = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) return Cyclotomic(0);
    if (pr != col) {
      for (int c = 0; c < cols_; ++c) std::swap(m.at(pr, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    Cyclotomic inv = m.at(col, col).inverse();
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Cyclotomic f = m.at(r, col) * inv;
      for (int c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
  Mat m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
          if (b.at(r, c).is_zero()) continue;
          m.at(i * b.rows() + r, j * b.cols() + c) = a.at(i, j) * b.at(r, c);
        }
    }
  return m;
}

}  // namespace ctl
