#pragma once

#include <optional>
#include <variant>

#include "atlas/pil.hpp"

namespace atlas {

/*
  Canonical orbit representatives: flags in standard form.

  Every orbit contains exactly one flag whose vectors are drawn from a small
  symbolic alphabet: standard basis vectors e_j, and the "twisted" vectors

    type A:  hat  h_i = e_i + e_n                      (i < n)
    type D:  hat  h_i = e_{-i} + e_{-l},  tilde  t_i = e_{-i} + e_l   (i < l)
    type B:  hat  h_i = e_i + sqrt2 e_0 - e_{-i}       (first kind, i <= l)
             h_{a,-j} = h_a + e_{-j}                    (second kind, j < a)

  together with ordering conditions on the indices.  The maps gamma/lambda
  identify these flags with PILs (type A) and SPILs (types D and B).
*/

enum class VecKind { Basis, HatA, HatD, TildeD, HatB1, HatB2 };

struct FlagVector {
  VecKind kind = VecKind::Basis;
  int index = 0; // signed for Basis; positive hat/tilde index otherwise
  int aux = 0;   // HatB2 only: the "a" of h_{a,-j}

  static FlagVector basis(int signed_index) { return {VecKind::Basis, signed_index, 0}; }
  static FlagVector hat_a(int i) { return {VecKind::HatA, i, 0}; }
  static FlagVector hat_d(int i) { return {VecKind::HatD, i, 0}; }
  static FlagVector tilde_d(int i) { return {VecKind::TildeD, i, 0}; }
  static FlagVector hat_b1(int i) { return {VecKind::HatB1, i, 0}; }
  static FlagVector hat_b2(int j, int a) { return {VecKind::HatB2, j, a}; }

  bool is_basis() const { return kind == VecKind::Basis; }
  // The index in {1..l} (or {1..n}) this vector accounts for.
  int slot_index() const { return kind == VecKind::Basis ? std::abs(index) : index; }

  std::string str() const;

  friend bool operator==(const FlagVector& x, const FlagVector& y) {
    return x.kind == y.kind && x.index == y.index && x.aux == y.aux;
  }
};

struct StandardFlag {
  Family family = Family::A;
  int size = 0; // n for type A, l for types D and B
  std::vector<FlagVector> vectors;

  int length() const { return static_cast<int>(vectors.size()); }
  std::string str() const; // e.g. "(e1<h2<e3)"

  friend bool operator==(const StandardFlag& x, const StandardFlag& y) {
    return x.family == y.family && x.size == y.size && x.vectors == y.vectors;
  }
  friend bool operator<(const StandardFlag& x, const StandardFlag& y);
};

// Expected number of flag levels: n / l-1 / l.
int flag_length(Family family, int size);

// Structural check of the standard-form conditions.  Returns one diagnostic
// string per violated clause; a valid flag yields an empty list.
std::vector<std::string> validate_standard(const StandardFlag& flag);

inline bool is_standard(const StandardFlag& flag) { return validate_standard(flag).empty(); }

// The K-orbit through a B_{n-1}-orbit, read off the standard flag.
struct KOrbitId {
  enum class Tag { ClosedA, NonClosedA, ClosedDPlus, NonClosedD, ClosedBPlus, ClosedBMinus, NonClosedB };
  Family family = Family::A;
  Tag tag = Tag::ClosedA;
  int i = 0, j = 0; // ClosedA: e_n position i; NonClosedA: (i,j); NonClosedD/B: i

  std::string str() const;
  // dim(K-orbit) - dim(flag variety of k); the rank parameter is needed
  // for the orthogonal families.
  int korbit_length(int ell) const;

  friend bool operator==(const KOrbitId& x, const KOrbitId& y) {
    return x.family == y.family && x.tag == y.tag && x.i == y.i && x.j == y.j;
  }
  friend bool operator!=(const KOrbitId& x, const KOrbitId& y) { return !(x == y); }
  friend bool operator<(const KOrbitId& x, const KOrbitId& y) {
    if (x.tag != y.tag) return x.tag < y.tag;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  }
};

// For type B flags with no hat vector the Q_+/Q_- split uses the parity of
// the number of negative indices (even = Q_+); cross-checked against the
// matrix engine by the test suite.
KOrbitId korbit_symbolic(const StandardFlag& flag);

// Combinatorial model <-> standard flag.
StandardFlag gamma(const Pil& model, int n);                    // type A
StandardFlag gamma(const Spil& model, Family family, int ell);  // types D, B
std::variant<Pil, Spil> lambda_inv(const StandardFlag& flag);

std::vector<StandardFlag> enumerate_standard(Family family, int size);

// One monoid step computed purely symbolically.  Covers exactly the cases
// where the acting root moves the ambient K-orbit; everything else is
// NotCovered (= nullopt) and left to the matrix engine.
struct SymbolicStep {
  StandardFlag result;
  bool noncompact = false; // otherwise complex stable
};
std::optional<SymbolicStep> monoid_symbolic(const StandardFlag& flag, int root_index);

// JSON round trip for flags, e.g.
// {"family":"B","l":2,"vectors":[{"kind":"hat1","index":2},{"kind":"basis","index":1}]}
std::string flag_to_json(const StandardFlag& flag);
StandardFlag flag_from_json(const std::string& text);

} // namespace atlas
