#pragma once

#include <cstdint>

#include "atlas/flags.hpp"
#include "atlas/subspace.hpp"

namespace atlas {

/*
  Concrete realizations.

  Coordinates are the ordered basis in which the ambient Borel is upper
  triangular: (e_1..e_n) for gl(n), (e_1..e_l, e_{-l}..e_{-1}) for so(2l),
  (e_1..e_l, e_0, e_{-l}..e_{-1}) for so(2l+1).  The orthogonal form is
  beta(x,y) = x^T S y with S the antidiagonal permutation, so that
  beta(e_j, e_k) = delta_{j,-k}.

  The subgroup K is gl(n-1) (the block fixing e_n), so(2l-1) (the fixer of
  e_l - e_{-l}) or so(2l) (the fixer of e_0); B_{n-1} is its upper
  triangular Borel.  All root data below are computed from torus-weight
  eigenspaces, never hardcoded per family.
*/

struct SimpleRoot {
  std::string name;        // "e1-e2", "e2+e3", "e3"
  std::vector<int> weight;  // epsilon coordinates on the torus
  ExactMatrix raising;      // X_alpha, spanning the root space
  ExactMatrix lowering;     // Y_alpha, completing an sl2 triple
  ExactMatrix reflection;   // exp(X) exp(-Y) exp(X), a Weyl representative
};

struct GroupContext {
  Family family = Family::A;
  int n = 0;   // ambient dimension
  int ell = 0; // rank parameter (= n for type A)

  ExactMatrix form; // S_n (identity in type A, where beta is unused)

  std::vector<ExactMatrix> basis_g; // ambient Lie algebra
  std::vector<ExactMatrix> basis_k; // symmetric subalgebra
  std::vector<ExactMatrix> basis_b; // b_{n-1} = k upper triangular

  std::vector<ExactMatrix> torus_g, torus_k;
  std::vector<SimpleRoot> simple_g, simple_k;
  std::vector<ExactMatrix> positive_k_raising;

  SubspaceBasis u1;    // K-stable complement of the line below
  ExactVector u2;      // e_n, e_l - e_{-l}, or e_0
  int dim_borel = 0;   // dim b_{n-1} = dim of the largest orbit

  // U_1 carries the K-triangular ordered basis; position_signs maps each
  // ordered-basis position to its signed index (0 marks the type D middle
  // vector e_l + e_{-l}).
  std::vector<ExactVector> u1_ordered_basis;
  std::vector<int> u1_position_signs;

  int flag_cols() const { return flag_length(family, ell); }

  // 0-based column of the signed basis index (+j, -j, or 0 in type B).
  int col_of_index(int signed_index) const;
  ExactVector basis_vector(int signed_index) const;

  QSqrt2 beta(const ExactVector& x, const ExactVector& y) const;
  bool is_orthogonal() const { return family != Family::A; }

  // Membership test plus coordinates of v in the U_1 ordered basis.
  std::optional<ExactVector> u1_coords(const ExactVector& v) const;
  ExactVector from_u1_coords(const ExactVector& coords) const;
};

// A: n >= 2; D: n = 2l >= 4; B: n = 2l+1 >= 3.
GroupContext build_context(Family family, int n);

// exp(t X_alpha); lies in the ambient group.
ExactMatrix one_param(const SimpleRoot& root, const QSqrt2& t);

// Deterministic pseudo-random element of B_{n-1}: a torus point times
// positive one-parameter factors with small rational parameters.
ExactMatrix random_borel(const GroupContext& ctx, std::uint64_t seed);

// Group element carrying the base flag F_+ onto the given matrix flag,
// level by level.  Exact; orthogonal results satisfy g^T S g = S, det 1.
ExactMatrix complete_frame(const GroupContext& ctx, const ExactMatrix& flag);

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

} // namespace atlas
