#include "atlas/matrix.hpp"

namespace atlas {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows, int cols) {
  ExactMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw DomainError("ExactMatrix::from_rows: ragged rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector>& cols, int rows) {
  ExactMatrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw DomainError("ExactMatrix::from_columns: ragged columns");
    for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

ExactVector ExactMatrix::row(int r) const {
  ExactVector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

ExactVector ExactMatrix::column(int c) const {
  ExactVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void ExactMatrix::set_column(int c, const ExactVector& v) {
  if (static_cast<int>(v.size()) != rows_) throw DomainError("set_column: size mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("ExactMatrix: product dimension mismatch");
  ExactMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const QSqrt2& x = at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        m.at(r, c) += x * o.at(k, c);
      }
    }
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("ExactMatrix: sum dimension mismatch");
  ExactMatrix m = *this;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) += o.at(r, c);
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("ExactMatrix: difference dimension mismatch");
  ExactMatrix m = *this;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) -= o.at(r, c);
  return m;
}

ExactMatrix ExactMatrix::scaled(const QSqrt2& s) const {
  ExactMatrix m = *this;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) *= s;
  return m;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DomainError("ExactMatrix::apply: size mismatch");
  ExactVector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    QSqrt2 s;
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      s += at(r, c) * v[c];
    }
    out[r] = std::move(s);
  }
  return out;
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult res;
  res.reduced = m;
  ExactMatrix& a = res.reduced;
  int lead = 0;
  for (int c = 0; c < a.cols() && lead < a.rows(); ++c) {
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r)
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int k = 0; k < a.cols(); ++k) std::swap(a.at(pivot, k), a.at(lead, k));
    QSqrt2 inv = a.at(lead, c).inverse();
    for (int k = c; k < a.cols(); ++k) a.at(lead, k) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, c).is_zero()) continue;
      QSqrt2 f = a.at(r, c);
      for (int k = c; k < a.cols(); ++k) a.at(r, k) -= f * a.at(lead, k);
    }
    res.pivot_cols.push_back(c);
    ++lead;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  return res;
}

std::vector<ExactVector> kernel(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DomainError("solve: size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt; // inconsistent
  ExactVector x(m.cols());
  for (int i = 0; i < rr.rank; ++i) x[rr.pivot_cols[i]] = rr.reduced.at(i, m.cols());
  return x;
}

QSqrt2 det(const ExactMatrix& m) {
  if (!m.is_square()) throw DomainError("det: matrix not square");
  ExactMatrix a = m;
  QSqrt2 d(1);
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!a.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return QSqrt2(0);
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(a.at(pivot, k), a.at(c, k));
      d = -d;
    }
    d *= a.at(c, c);
    QSqrt2 inv = a.at(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      QSqrt2 f = a.at(r, c) * inv;
      for (int k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
    }
  }
  return d;
}

ExactMatrix exp_nilpotent(const ExactMatrix& n) {
  if (!n.is_square()) throw DomainError("exp_nilpotent: matrix not square");
  int dim = n.rows();
  ExactMatrix sum = ExactMatrix::identity(dim);
  ExactMatrix power = n;
  Rational fact(1);
  int k = 1;
  while (!power.is_zero()) {
    if (k > dim) throw DomainError("exp_nilpotent: matrix is not nilpotent");
    fact *= k;
    sum = sum + power.scaled(QSqrt2(Rational(1) / fact));
    power = power * n;
    ++k;
  }
  return sum;
}

ExactVector vec_add(const ExactVector& x, const ExactVector& y) {
  if (x.size() != y.size()) throw DomainError("vec_add: size mismatch");
  ExactVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

ExactVector vec_sub(const ExactVector& x, const ExactVector& y) {
  if (x.size() != y.size()) throw DomainError("vec_sub: size mismatch");
  ExactVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

ExactVector vec_scaled(const ExactVector& x, const QSqrt2& s) {
  ExactVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] * s;
  return out;
}

bool vec_is_zero(const ExactVector& x) {
  for (const auto& e : x)
    if (!e.is_zero()) return false;
  return true;
}

QSqrt2 dot(const ExactVector& x, const ExactVector& y) {
  if (x.size() != y.size()) throw DomainError("dot: size mismatch");
  QSqrt2 s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

} // namespace atlas
