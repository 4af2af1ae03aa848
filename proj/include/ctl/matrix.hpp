#pragma once

#include <vector>

#include "ctl/cyclotomic.hpp"

namespace ctl {

// Dense matrix over the cyclotomic field.  Row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat scalar(int n, const Cyclotomic& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclotomic& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyclotomic& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;
  // True if the matrix is c * I; sets *c when non-null.
  bool is_scalar(Cyclotomic* c = nullptr) const;

  Cyclotomic trace() const;
  Mat transpose() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat scaled(const Cyclotomic& c) const;
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat inverse() const;  // throws if singular
  Cyclotomic determinant() const;

  // Kronecker product, blocks a_(i,j) * b.
  static Mat kronecker(const Mat& a, const Mat& b);

 private:
  int rows_, cols_;
  std::vector<Cyclotomic> a_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat* m);

// Basis of the right nullspace (as columns collected in a matrix with
// nullity columns; empty matrix when nullity is zero).
Mat nullspace(const Mat& m);

// Solve a * x = b for a single column b; throws if inconsistent,
// returns one solution (free variables set to zero).
std::vector<Cyclotomic> solve(const Mat& a, const std::vector<Cyclotomic>& b);

int rank(Mat m);

}  // namespace ctl
