#include <random>

#include "atlas/matrix.hpp"
#include "atlas/subspace.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

QSqrt2 random_scalar(std::mt19937_64& rng) {
  auto small = [&rng] { return Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)); };
  return QSqrt2(small(), small());
}

ExactMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  ExactMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = QSqrt2(static_cast<int>(rng() % 7) - 3);
  return m;
}

ExactVector e(int n, int i) {
  ExactVector v(n);
  v[i - 1] = 1;
  return v;
}

} // namespace

TEST_CASE("qsqrt2 arithmetic on pinned values") {
  QSqrt2 r2 = QSqrt2::sqrt2();
  CHECK((QSqrt2(1) + r2) * (QSqrt2(-1) + r2) == QSqrt2(1));
  CHECK(r2.inverse() == QSqrt2(Rational(0), Rational(1, 2)));
  CHECK(QSqrt2(Rational(1, 3)) + QSqrt2(Rational(2, 3)) == QSqrt2(1));
  CHECK_THROWS_AS(QSqrt2(0).inverse(), DomainError);
}

TEST_CASE("qsqrt2 field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    QSqrt2 x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) + z == x + (y + z));
    if (!x.is_zero()) CHECK(x * x.inverse() == QSqrt2(1));
  }
}

TEST_CASE("qsqrt2 exact square roots") {
  CHECK(*qsqrt2_sqrt(QSqrt2(2)) * *qsqrt2_sqrt(QSqrt2(2)) == QSqrt2(2));
  CHECK(*qsqrt2_sqrt(QSqrt2(Rational(9, 4))) == QSqrt2(Rational(3, 2)));
  QSqrt2 x(3, 2); // (1 + sqrt2)^2 = 3 + 2 sqrt2
  auto s = qsqrt2_sqrt(x);
  REQUIRE(s.has_value());
  CHECK(*s * *s == x);
  CHECK(!qsqrt2_sqrt(QSqrt2(3)).has_value());
  CHECK(!qsqrt2_sqrt(QSqrt2(-1)).has_value());
}

TEST_CASE("rref on pinned matrices") {
  ExactMatrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivot_cols == std::vector<int>{0, 1});

  CHECK(rref(ExactMatrix(2, 3)).rank == 0);

  ExactMatrix m2 = ExactMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}, 3);
  CHECK(rref(m2).pivot_cols == std::vector<int>{0, 2});
}

TEST_CASE("rref is idempotent and rank is transpose invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ExactMatrix m = random_matrix(rng, 3 + trial % 3, 4);
    RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(rref(m.transpose()).rank == r.rank);
  }
}

TEST_CASE("subspace operations on pinned examples") {
  const int n = 3;
  SubspaceBasis a = SubspaceBasis::span(n, {e(n, 1), e(n, 2)});
  SubspaceBasis b = SubspaceBasis::span(n, {e(n, 2), e(n, 3)});
  CHECK(a.intersect(b) == SubspaceBasis::span(n, {e(n, 2)}));
  CHECK(SubspaceBasis::span(n, {e(n, 1)}).sum(SubspaceBasis::span(n, {e(n, 2)})) ==
        SubspaceBasis::span(n, {e(n, 1), e(n, 2)}));
  SubspaceBasis diag = SubspaceBasis::span(n, {vec_add(e(n, 1), e(n, 3))});
  CHECK(!diag.contains_vector(e(n, 1)));
  CHECK(diag.contains_vector(vec_scaled(vec_add(e(n, 1), e(n, 3)), QSqrt2(5))));

  SubspaceBasis other(4);
  CHECK_THROWS_AS(a.intersect(other), DomainError);
  CHECK_THROWS_AS(a.sum(other), DomainError);
  CHECK_THROWS_AS(a.contains_vector(ExactVector(4)), DomainError);
}

TEST_CASE("subspace dimension formula on random pairs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 2);
    std::vector<ExactVector> va, vb;
    for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i) va.push_back(random_matrix(rng, 1, n).row(0));
    for (int i = 0; i < 2 + static_cast<int>(rng() % 2); ++i) vb.push_back(random_matrix(rng, 1, n).row(0));
    SubspaceBasis a = SubspaceBasis::span(n, va), b = SubspaceBasis::span(n, vb);
    CHECK(a.intersect(b).dim() + a.sum(b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("nilpotent exponentials") {
  CHECK(exp_nilpotent(ExactMatrix(3, 3)) == ExactMatrix::identity(3));

  ExactMatrix e12(2, 2);
  e12.at(0, 1) = 1;
  ExactMatrix expected = ExactMatrix::identity(2);
  expected.at(0, 1) = 1;
  CHECK(exp_nilpotent(e12) == expected);
  CHECK(exp_nilpotent(e12) * exp_nilpotent(e12.scaled(QSqrt2(-1))) == ExactMatrix::identity(2));

  CHECK_THROWS_AS(exp_nilpotent(ExactMatrix::identity(2)), DomainError);

  // One-parameter additivity for a strictly upper triangular 4x4.
  std::mt19937_64 rng(17);
  ExactMatrix n(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c) n.at(r, c) = QSqrt2(static_cast<int>(rng() % 5) - 2);
  for (int trial = 0; trial < 10; ++trial) {
    QSqrt2 s = random_scalar(rng), t = random_scalar(rng);
    CHECK(exp_nilpotent(n.scaled(s)) * exp_nilpotent(n.scaled(t)) == exp_nilpotent(n.scaled(s + t)));
  }
}

TEST_CASE("determinant and solve") {
  ExactMatrix m = ExactMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  CHECK(det(m) == QSqrt2(1));
  auto x = solve(m, {QSqrt2(3), QSqrt2(2)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == ExactVector{QSqrt2(3), QSqrt2(2)});
  CHECK(!solve(ExactMatrix(2, 2), {QSqrt2(1), QSqrt2(0)}).has_value());
}
