#include <random>

#include "atlas/engine.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

bool preserves_form(const GroupContext& ctx, const ExactMatrix& g) {
  return g.transpose() * ctx.form * g == ctx.form;
}

bool is_diagonal(const ExactMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (r != c && !m.at(r, c).is_zero()) return false;
  return true;
}

} // namespace

TEST_CASE("context dimensions and simple root counts") {
  GroupContext a3 = build_context(Family::A, 3);
  CHECK(a3.basis_k.size() == 4);
  CHECK(a3.dim_borel == 3);
  CHECK(a3.simple_g.size() == 2);
  CHECK(a3.simple_k.size() == 1);
  CHECK(a3.simple_g[0].name == "e1-e2");
  CHECK(a3.simple_g[1].name == "e2-e3");

  GroupContext b5 = build_context(Family::B, 5);
  CHECK(b5.simple_k.size() == 2);
  CHECK(b5.simple_k[0].name == "e1-e2");
  CHECK(b5.simple_k[1].name == "e1+e2");
  CHECK(b5.simple_g[1].name == "e2");
  CHECK(b5.basis_k.size() == 6); // so(4)
  CHECK(b5.dim_borel == 4);

  GroupContext d4 = build_context(Family::D, 4);
  CHECK(d4.basis_k.size() == 3); // so(3)
  CHECK(d4.simple_k.size() == 1);
  CHECK(d4.simple_k[0].name == "e1");
  CHECK(d4.simple_g[0].name == "e1-e2");
  CHECK(d4.simple_g[1].name == "e1+e2");
  CHECK(d4.dim_borel == 2);

  // Larger contexts build and satisfy their internal dimension checks.
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 5}, {Family::D, 6}, {Family::B, 7}})
    CHECK_NOTHROW(build_context(fam, n));
}

TEST_CASE("k annihilates the fixed structure") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::D, 6}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    for (const auto& x : ctx.basis_k) CHECK(vec_is_zero(x.apply(ctx.u2)));
  }
}

TEST_CASE("one parameter subgroups") {
  GroupContext a3 = build_context(Family::A, 3);
  CHECK(one_param(a3.simple_g[0], QSqrt2(0)) == ExactMatrix::identity(3));
  ExactMatrix expected = ExactMatrix::identity(3);
  expected.at(0, 1) = 1;
  CHECK(one_param(a3.simple_g[0], QSqrt2(1)) == expected);

  std::mt19937_64 rng(23);
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::D, 6}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    for (const auto& root : ctx.simple_g) {
      QSqrt2 t(static_cast<int>(rng() % 9) - 4);
      CHECK(preserves_form(ctx, one_param(root, t)));
      // additivity
      CHECK(one_param(root, QSqrt2(2)) * one_param(root, QSqrt2(3)) == one_param(root, QSqrt2(5)));
    }
  }
}

TEST_CASE("reflection representatives") {
  GroupContext a3 = build_context(Family::A, 3);
  const ExactMatrix& s1 = a3.simple_g[0].reflection;
  // As a flag permutation: (e1<e2<e3) -> (e2<e1<e3) as subspace chains.
  ExactVector img = s1.apply(a3.basis_vector(1));
  CHECK(SubspaceBasis::span(3, {img}) == SubspaceBasis::span(3, {a3.basis_vector(2)}));

  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::D, 4}, {Family::D, 6}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    for (const auto& roots : {ctx.simple_g, ctx.simple_k})
      for (const auto& root : roots) {
        const ExactMatrix& s = root.reflection;
        if (ctx.is_orthogonal()) CHECK(preserves_form(ctx, s));
        ExactMatrix s_inv = exp_nilpotent(root.raising.scaled(QSqrt2(-1)));
        s_inv = s_inv * exp_nilpotent(root.lowering) * s_inv;
        CHECK(s * s_inv == ExactMatrix::identity(ctx.n));
        // Torus normalization: conjugation keeps the diagonal torus diagonal.
        const auto& torus = (&roots == &ctx.simple_g) ? ctx.torus_g : ctx.torus_k;
        for (const auto& h : torus) CHECK(is_diagonal(s * h * s_inv));
        // s^2 acts trivially on the torus.
        ExactMatrix s2 = s * s;
        ExactMatrix s2_inv = s_inv * s_inv;
        for (const auto& h : torus) CHECK(s2 * h * s2_inv == h);
      }
  }

  // In so(4) the fork root e1+e2 maps the e1 line to the e_{-2} line.
  GroupContext d4 = build_context(Family::D, 4);
  ExactVector img2 = d4.simple_g[1].reflection.apply(d4.basis_vector(1));
  CHECK(SubspaceBasis::span(4, {img2}) == SubspaceBasis::span(4, {d4.basis_vector(-2)}));
}

TEST_CASE("random borel elements") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::D, 6}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    ExactMatrix b1 = random_borel(ctx, 42), b2 = random_borel(ctx, 42), b3 = random_borel(ctx, 43);
    CHECK(b1 == b2);
    CHECK(!(b1 == b3));
    for (int r = 0; r < ctx.n; ++r)
      for (int c = 0; c < r; ++c) CHECK(b1.at(r, c).is_zero());
    CHECK(!det(b1).is_zero());
    if (ctx.is_orthogonal()) CHECK(preserves_form(ctx, b1));
    // Lies in K: fixes the u2 line pointwise.
    CHECK(b1.apply(ctx.u2) == ctx.u2);
  }
}

TEST_CASE("unipotent orbits of e_{-j} stay in the predicted affine sets") {
  std::mt19937_64 rng(29);
  // Type D: x e_{-j} = e_{-j} + (lower -indices) + c(e_l + e_{-l}) + (positives),
  // isotropic.
  GroupContext d6 = build_context(Family::D, 6);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix x = ExactMatrix::identity(6);
    for (const auto& raise : d6.positive_k_raising)
      x = x * exp_nilpotent(raise.scaled(QSqrt2(static_cast<int>(rng() % 5) - 2)));
    for (int j = 1; j <= d6.ell - 1; ++j) {
      ExactVector v = x.apply(d6.basis_vector(-j));
      CHECK(d6.beta(v, v).is_zero());
      CHECK(v[d6.col_of_index(-j)] == QSqrt2(1));
      for (int k = 1; k < j; ++k) CHECK(v[d6.col_of_index(-k)].is_zero());
      CHECK(v[d6.col_of_index(d6.ell)] == v[d6.col_of_index(-d6.ell)]);
    }
  }
  // Type B: x e_{-j} = e_{-j} + (strictly lower -indices) + (positives), no e_0.
  GroupContext b5 = build_context(Family::B, 5);
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix x = ExactMatrix::identity(5);
    for (const auto& raise : b5.positive_k_raising)
      x = x * exp_nilpotent(raise.scaled(QSqrt2(static_cast<int>(rng() % 5) - 2)));
    for (int j = 1; j <= b5.ell; ++j) {
      ExactVector v = x.apply(b5.basis_vector(-j));
      CHECK(v[b5.col_of_index(-j)] == QSqrt2(1));
      CHECK(v[b5.col_of_index(0)].is_zero());
      for (int k = 1; k < j; ++k) CHECK(v[b5.col_of_index(-k)].is_zero());
    }
  }
}

TEST_CASE("complete frame") {
  GroupContext a3 = build_context(Family::A, 3);
  StandardFlag perm;
  perm.family = Family::A;
  perm.size = 3;
  perm.vectors = {FlagVector::basis(2), FlagVector::basis(1), FlagVector::basis(3)};
  ExactMatrix g = complete_frame(a3, embed_flag(a3, perm));
  CHECK(g.column(0) == a3.basis_vector(2));

  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::D, 4}, {Family::B, 3}, {Family::B, 5}, {Family::D, 6}, {Family::B, 7}}) {
    GroupContext ctx = build_context(fam, n);
    for (const auto& f : enumerate_standard(fam, ctx.ell)) {
      ExactMatrix flag = embed_flag(ctx, f);
      ExactMatrix frame = complete_frame(ctx, flag);
      CHECK(preserves_form(ctx, frame));
      CHECK(det(frame) == QSqrt2(1));
      for (int c = 0; c < flag.cols(); ++c) CHECK(frame.column(c) == flag.column(c));
    }
  }

  // Non-isotropic input is rejected.
  GroupContext d4 = build_context(Family::D, 4);
  ExactMatrix bad(4, 1);
  bad.at(0, 0) = 1;
  bad.at(3, 0) = 1; // e_1 + e_{-1}
  CHECK_THROWS_AS(complete_frame(d4, bad), DomainError);
}
