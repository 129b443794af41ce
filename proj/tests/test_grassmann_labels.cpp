#include <functional>
#include <set>

#include "atlas/engine.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

ExactVector e(int n, int i) {
  ExactVector v(n);
  v[i - 1] = 1;
  return v;
}

} // namespace

TEST_CASE("schubert jumps") {
  std::vector<ExactVector> chain;
  for (int i = 1; i <= 4; ++i) chain.push_back(e(4, i));
  CHECK(schubert_jumps(SubspaceBasis::span(4, {e(4, 2), e(4, 3)}), chain) ==
        std::vector<int>{2, 3});
  CHECK(schubert_jumps(SubspaceBasis::span(4, {vec_add(e(4, 1), e(4, 2))}), chain) ==
        std::vector<int>{2});
  CHECK(schubert_jumps(SubspaceBasis(4), chain).empty());
}

TEST_CASE("subspace labels on pinned examples") {
  GroupContext a3 = build_context(Family::A, 3);
  SubspaceLabel l =
      subspace_label(a3, SubspaceBasis::span(3, {vec_add(a3.basis_vector(1), a3.basis_vector(3))}));
  CHECK(l.kase == LabelCase::A3);
  CHECK(l.J.empty());
  CHECK(l.extra == 1);

  l = subspace_label(a3, SubspaceBasis::span(3, {a3.basis_vector(3)}));
  CHECK(l.kase == LabelCase::A2);
  CHECK(l.J.empty());

  GroupContext d4 = build_context(Family::D, 4);
  // tilde_1 = e_{-1} + e_2.
  l = subspace_label(d4,
                     SubspaceBasis::span(4, {vec_add(d4.basis_vector(-1), d4.basis_vector(2))}));
  CHECK(l.kase == LabelCase::D4);
  CHECK(l.extra == 1);

  l = subspace_label(d4, SubspaceBasis::span(4, {d4.basis_vector(2)}));
  CHECK(l.kase == LabelCase::D2);
  l = subspace_label(d4, SubspaceBasis::span(4, {d4.basis_vector(-2)}));
  CHECK(l.kase == LabelCase::D3);

  CHECK_THROWS_AS(
      subspace_label(d4, SubspaceBasis::span(4, {vec_add(d4.basis_vector(1), d4.basis_vector(-1))})),
      DomainError);
}

TEST_CASE("label sequence of the base flag") {
  GroupContext a3 = build_context(Family::A, 3);
  StandardFlag fplus;
  fplus.family = Family::A;
  fplus.size = 3;
  fplus.vectors = {FlagVector::basis(1), FlagVector::basis(2), FlagVector::basis(3)};
  LabelSequence seq = label_sequence(a3, embed_flag(a3, fplus));
  REQUIRE(seq.labels.size() == 3);
  CHECK(seq.labels[0].str() == "A1{1}");
  CHECK(seq.labels[1].str() == "A1{1,2}");
  CHECK(seq.labels[2].str() == "A2{1,2}");

  StandardFlag hat;
  hat.family = Family::A;
  hat.size = 3;
  hat.vectors = {FlagVector::hat_a(2), FlagVector::basis(1), FlagVector::basis(3)};
  seq = label_sequence(a3, embed_flag(a3, hat));
  CHECK(seq.labels[0].str() == "A3{}^2");
  CHECK(seq.labels[1].str() == "A3{1}^2");
  CHECK(seq.labels[2].str() == "A2{1,2}");
}

TEST_CASE("predicted labels match matrix labels on full enumerations") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::A, 4}, {Family::D, 4}, {Family::B, 5}, {Family::D, 6},
           {Family::B, 3}}) {
    GroupContext ctx = build_context(fam, n);
    for (const auto& f : enumerate_standard(fam, ctx.ell)) {
      CAPTURE(f.str());
      CHECK(predict_label_sequence(f) == label_sequence(ctx, embed_flag(ctx, f)));
    }
  }
}

TEST_CASE("label sequences separate orbits") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    std::set<std::string> keys;
    auto flags = enumerate_standard(fam, ctx.ell);
    for (const auto& f : flags) keys.insert(label_sequence(ctx, embed_flag(ctx, f)).key());
    CHECK(keys.size() == flags.size());
  }
}

TEST_CASE("labels are invariant under random Borel moves") {
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::B, 5}}) {
    GroupContext ctx = build_context(fam, n);
    int id = 0;
    for (const auto& f : enumerate_standard(fam, ctx.ell)) {
      ExactMatrix embedded = embed_flag(ctx, f);
      LabelSequence base = label_sequence(ctx, embedded);
      for (int trial = 0; trial < 5; ++trial) {
        ExactMatrix moved = random_borel(ctx, 1000 * id + trial) * embedded;
        CHECK(label_sequence(ctx, moved) == base);
      }
      ++id;
    }
  }
}

TEST_CASE("type A census of basis-plus-hat subspace labels") {
  // Subspaces spanned by distinct basis vectors, or by basis vectors plus
  // one hat vector, realize the three label families with no collisions:
  // C(n-1,k) all-basis labels below e_n, C(n-1,k-1) labels through e_n,
  // and k*C(n-1,k) hat labels.
  for (int n = 3; n <= 4; ++n) {
    GroupContext ctx = build_context(Family::A, n);
    for (int k = 1; k <= n; ++k) {
      std::set<std::string> labels;
      int built = 0;
      std::vector<int> subset(k);
      std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == k) {
          std::vector<ExactVector> vecs;
          for (int j : subset) vecs.push_back(ctx.basis_vector(j));
          labels.insert(subspace_label(ctx, SubspaceBasis::span(n, vecs)).str());
          ++built;
          if (subset.back() < n) { // all indices < n: hat any one of them
            for (int h = 0; h < k; ++h) {
              std::vector<ExactVector> hv;
              for (int t = 0; t < k; ++t)
                hv.push_back(t == h ? vec_add(ctx.basis_vector(subset[t]), ctx.basis_vector(n))
                                    : ctx.basis_vector(subset[t]));
              labels.insert(subspace_label(ctx, SubspaceBasis::span(n, hv)).str());
              ++built;
            }
          }
          return;
        }
        for (int v = start; v <= n; ++v) {
          subset[depth] = v;
          choose(v + 1, depth + 1);
        }
      };
      choose(1, 0);
      Integer expect = binomial(n - 1, k) + binomial(n - 1, k - 1) + k * binomial(n - 1, k);
      CHECK(Integer(labels.size()) == expect);
      CHECK(Integer(built) == expect); // and they are pairwise distinct
    }
  }
}
