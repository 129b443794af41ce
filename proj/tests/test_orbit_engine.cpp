#include "atlas/engine.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

StandardFlag make_flag(Family fam, int size, std::vector<FlagVector> v) {
  StandardFlag f;
  f.family = fam;
  f.size = size;
  f.vectors = std::move(v);
  return f;
}

} // namespace

TEST_CASE("flag embedding") {
  GroupContext a3 = build_context(Family::A, 3);
  ExactMatrix m = embed_flag(a3, make_flag(Family::A, 3, {FlagVector::hat_a(2), FlagVector::basis(1),
                                                          FlagVector::basis(3)}));
  CHECK(m.column(0) == vec_add(a3.basis_vector(2), a3.basis_vector(3)));

  GroupContext b5 = build_context(Family::B, 5);
  ExactMatrix hb = embed_flag(b5, make_flag(Family::B, 2, {FlagVector::hat_b1(2), FlagVector::basis(1)}));
  ExactVector v = hb.column(0);
  CHECK(v[b5.col_of_index(2)] == QSqrt2(1));
  CHECK(v[b5.col_of_index(0)] == QSqrt2::sqrt2());
  CHECK(v[b5.col_of_index(-2)] == QSqrt2(-1));
  CHECK(b5.beta(v, v).is_zero());

  GroupContext d6 = build_context(Family::D, 6);
  ExactMatrix td = embed_flag(d6, make_flag(Family::D, 3, {FlagVector::tilde_d(1), FlagVector::basis(3)}));
  CHECK(td.column(0) == vec_add(d6.basis_vector(-1), d6.basis_vector(3)));
  ExactMatrix hd = embed_flag(d6, make_flag(Family::D, 3, {FlagVector::hat_d(1), FlagVector::basis(-3)}));
  CHECK(hd.column(0) == vec_add(d6.basis_vector(-1), d6.basis_vector(-3)));
}

TEST_CASE("orbit dimensions on pinned examples") {
  GroupContext a3 = build_context(Family::A, 3);
  CHECK(orbit_dim(a3, embed_flag(a3, make_flag(Family::A, 3, {FlagVector::basis(1),
                                                              FlagVector::basis(2),
                                                              FlagVector::basis(3)}))) == 0);
  CHECK(orbit_dim(a3, embed_flag(a3, make_flag(Family::A, 3, {FlagVector::hat_a(2),
                                                              FlagVector::hat_a(1),
                                                              FlagVector::basis(3)}))) == 3);
  GroupContext d4 = build_context(Family::D, 4);
  CHECK(orbit_dim(d4, embed_flag(d4, make_flag(Family::D, 2, {FlagVector::hat_d(1)}))) == 2);
}

TEST_CASE("canonicalization is the identity on standard flags") {
  Atlas atlas(Family::A, 3);
  CHECK(atlas.size() == 13);
  for (const auto& orbit : atlas.orbits())
    CHECK(atlas.canonicalize(embed_flag(atlas.ctx(), orbit.flag)).id == orbit.id);

  // (I + E_12) . (e2 < e1 < e3) stays in the same orbit.
  ExactMatrix u = ExactMatrix::identity(3);
  u.at(0, 1) = 1;
  StandardFlag f =
      make_flag(Family::A, 3, {FlagVector::basis(2), FlagVector::basis(1), FlagVector::basis(3)});
  CHECK(atlas.canonicalize(u * embed_flag(atlas.ctx(), f)).flag == f);
}

TEST_CASE("canonicalization under random Borel elements") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::B, 5}}) {
    Atlas atlas(fam, n);
    for (const auto& orbit : atlas.orbits()) {
      ExactMatrix embedded = embed_flag(atlas.ctx(), orbit.flag);
      for (int trial = 0; trial < 4; ++trial) {
        ExactMatrix b = random_borel(atlas.ctx(), 77 * orbit.id + trial);
        CHECK(atlas.canonicalize(b * embedded).id == orbit.id);
      }
    }
  }
}

TEST_CASE("monoid engine on pinned examples") {
  Atlas a3(Family::A, 3);
  StandardFlag base =
      make_flag(Family::A, 3, {FlagVector::basis(1), FlagVector::basis(2), FlagVector::basis(3)});
  int id = a3.id_of_flag(base);
  auto beta_step = a3.monoid(id, Side::Right, 1);
  CHECK(a3.orbit(beta_step.dst).flag.str() == "(e1<h2<e3)");
  CHECK(beta_step.rc == RootCase::NonCompactImaginary);
  auto alpha_step = a3.monoid(id, Side::Right, 0);
  CHECK(a3.orbit(alpha_step.dst).flag.str() == "(e2<e1<e3)");
  CHECK(alpha_step.rc == RootCase::ComplexStable);

  Atlas d4(Family::D, 4);
  int e2 = d4.id_of_flag(make_flag(Family::D, 2, {FlagVector::basis(2)}));
  auto left = d4.monoid(e2, Side::Left, 0);
  CHECK(d4.orbit(left.dst).flag.str() == "(h1)");
  CHECK(left.rc == RootCase::NonCompactImaginary);
}

TEST_CASE("atlas indexes so(8) injectively with the full orbit count") {
  // 361 orbits; the constructor itself asserts that no two standard flags
  // share a label sequence.
  Atlas atlas(Family::D, 8);
  CHECK(Integer(atlas.size()) == count_orbits(Family::D, 4, CountMethod::Formula));
  CHECK(atlas.orbit(0).dim == 0);
  CHECK(atlas.orbit(atlas.size() - 1).dim == 12); // dim of the so(7) Borel
}

TEST_CASE("monoid dimension law") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::B, 5}}) {
    Atlas atlas(fam, n);
    for (const auto& orbit : atlas.orbits())
      for (Side side : {Side::Right, Side::Left})
        for (int r = 0; r < atlas.num_generators(side); ++r) {
          auto step = atlas.monoid(orbit.id, side, r);
          int d0 = orbit.dim, d1 = atlas.orbit(step.dst).dim;
          CHECK((d1 == d0 || d1 == d0 + 1));
          bool raised = step.dst != orbit.id;
          CHECK(raised == (d1 == d0 + 1));
          bool raising_case = step.rc == RootCase::ComplexStable ||
                              step.rc == RootCase::NonCompactImaginary;
          CHECK(raised == raising_case);
        }
  }
}
