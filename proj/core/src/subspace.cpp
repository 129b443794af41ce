#include "atlas/subspace.hpp"

namespace atlas {

SubspaceBasis SubspaceBasis::span(int ambient, const std::vector<ExactVector>& vectors) {
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw DomainError("SubspaceBasis::span: vector size mismatch");
  SubspaceBasis s(ambient);
  if (vectors.empty()) return s;
  RrefResult r = rref(ExactMatrix::from_rows(vectors, ambient));
  ExactMatrix b(r.rank, ambient);
  for (int i = 0; i < r.rank; ++i)
    for (int c = 0; c < ambient; ++c) b.at(i, c) = r.reduced.at(i, c);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(r.pivot_cols);
  return s;
}

SubspaceBasis SubspaceBasis::row_space(const ExactMatrix& m) {
  std::vector<ExactVector> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return span(m.cols(), rows);
}

SubspaceBasis SubspaceBasis::column_space(const ExactMatrix& m) {
  std::vector<ExactVector> cols;
  cols.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span(m.rows(), cols);
}

bool SubspaceBasis::contains_vector(const ExactVector& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DomainError("contains_vector: ambient mismatch");
  return vec_is_zero(reduce(v));
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (ambient_ != other.ambient_) throw DomainError("contains: ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_vector(i))) return false;
  return true;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
  if (ambient_ != other.ambient_) throw DomainError("sum: ambient mismatch");
  std::vector<ExactVector> rows;
  for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (int i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
  return span(ambient_, rows);
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  if (ambient_ != other.ambient_) throw DomainError("intersect: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return SubspaceBasis(ambient_);
  // x^T A = y^T B has solution space the kernel of [A^T | -B^T].
  ExactMatrix sys(ambient_, dim() + other.dim());
  for (int c = 0; c < ambient_; ++c) {
    for (int i = 0; i < dim(); ++i) sys.at(c, i) = basis_.at(i, c);
    for (int j = 0; j < other.dim(); ++j) sys.at(c, dim() + j) = -other.basis_.at(j, c);
  }
  std::vector<ExactVector> vectors;
  for (const ExactVector& k : kernel(sys)) {
    ExactVector v(ambient_);
    for (int i = 0; i < dim(); ++i)
      for (int c = 0; c < ambient_; ++c) v[c] += k[i] * basis_.at(i, c);
    if (!vec_is_zero(v)) vectors.push_back(std::move(v));
  }
  return span(ambient_, vectors);
}

ExactVector SubspaceBasis::reduce(ExactVector v) const {
  for (int i = 0; i < dim(); ++i) {
    const QSqrt2& coef = v[pivots_[i]];
    if (coef.is_zero()) continue;
    QSqrt2 f = coef; // pivot entries are 1 in RREF
    for (int c = 0; c < ambient_; ++c) v[c] -= f * basis_.at(i, c);
  }
  return v;
}

} // namespace atlas
