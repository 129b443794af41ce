#pragma once

#include "atlas/matrix.hpp"

namespace atlas {

/*
  A linear subspace of Q(sqrt2)^n, stored as the reduced row-echelon basis
  of its row space.  The RREF basis is a canonical form: two subspaces are
  equal iff their stored matrices are equal, which makes subspaces usable
  as exact dictionary keys.
*/
class SubspaceBasis {
public:
  SubspaceBasis() : ambient_(0) {}
  explicit SubspaceBasis(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  // Canonicalizes the spanning set via RREF, dropping dependent vectors.
  static SubspaceBasis span(int ambient, const std::vector<ExactVector>& vectors);
  // Row space of a matrix (rows = spanning vectors).
  static SubspaceBasis row_space(const ExactMatrix& m);
  // Column span of a matrix.
  static SubspaceBasis column_space(const ExactMatrix& m);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }
  ExactVector basis_vector(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vector(const ExactVector& v) const;
  bool contains(const SubspaceBasis& other) const;

  SubspaceBasis intersect(const SubspaceBasis& other) const;
  SubspaceBasis sum(const SubspaceBasis& other) const;

  // Reduce v against the basis so its coordinates at all pivot columns
  // vanish; the result is the canonical representative of v mod this space.
  ExactVector reduce(ExactVector v) const;

  friend bool operator==(const SubspaceBasis& x, const SubspaceBasis& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

private:
  int ambient_;
  ExactMatrix basis_;
  std::vector<int> pivots_;
};

} // namespace atlas
