#pragma once

#include <vector>

#include "atlas/qsqrt2.hpp"

namespace atlas {

using ExactVector = std::vector<QSqrt2>;

// Dense matrix over Q(sqrt 2), row-major.  Everything here is exact;
// there is no floating point anywhere in the library.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DomainError("ExactMatrix: negative dimension");
  }

  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows, int cols);
  static ExactMatrix from_columns(const std::vector<ExactVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  QSqrt2& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const QSqrt2& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  ExactVector row(int r) const;
  ExactVector column(int c) const;
  void set_column(int c, const ExactVector& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const QSqrt2& s) const;
  ExactVector apply(const ExactVector& v) const;

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

private:
  int rows_, cols_;
  std::vector<QSqrt2> e_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<int> pivot_cols; // strictly increasing, 0-based
  int rank = 0;
};

// Reduced row-echelon form with exact pivoting.
RrefResult rref(const ExactMatrix& m);

// Basis of the right kernel {x : Mx = 0}.
std::vector<ExactVector> kernel(const ExactMatrix& m);

// One solution of Mx = b, if any.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);

QSqrt2 det(const ExactMatrix& m);

// exp(N) = sum N^i / i! for nilpotent N; exact, with a verified nilpotency
// check (N^k = 0 for some k <= dim).
ExactMatrix exp_nilpotent(const ExactMatrix& n);

// Convenience vector arithmetic.
ExactVector vec_add(const ExactVector& x, const ExactVector& y);
ExactVector vec_sub(const ExactVector& x, const ExactVector& y);
ExactVector vec_scaled(const ExactVector& x, const QSqrt2& s);
bool vec_is_zero(const ExactVector& x);
QSqrt2 dot(const ExactVector& x, const ExactVector& y);

} // namespace atlas
