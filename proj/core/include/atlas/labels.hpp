#pragma once

#include "atlas/group.hpp"

namespace atlas {

/*
  B_{n-1}-orbit labels on (isotropic) Grassmannians.

  Every B_{n-1}-orbit through a subspace V is pinned down by how V meets
  the K-stable hyperplane U_1 and, in the codimension-one branch, by the
  normal form of a vector outside U_1 reduced against V n U_1.  The label
  of each level of a flag is a complete orbit invariant of the flag; the
  sequence of labels is the key used for canonicalization.

  Cases:
    A1 / D1 / B1 : V inside U_1, labelled by its Schubert jump set J.
    A2           : e_n in V, J the jumps of V n U_1.
    A3           : extra = the hat index adjoined by the projection of V.
    D2 / D3      : the reduced outside vector is e_l-like / e_{-l}-like.
    D4           : extra = minimal index s of its e_{-s} tail (tilde form).
    B2           : extra = minimal index of the e_{-j} tail (hat form).
*/

enum class LabelCase { A1, A2, A3, D1, D2, D3, D4, B1, B2 };

std::string to_string(LabelCase c);

struct SubspaceLabel {
  LabelCase kase = LabelCase::A1;
  std::vector<int> J;       // signed indices, sorted ascending
  std::optional<int> extra; // hat / tilde index where the case carries one

  std::string str() const;
  std::string json() const; // {"case":..,"J":[..],"extra":..|null}

  friend bool operator==(const SubspaceLabel& x, const SubspaceLabel& y) {
    return x.kase == y.kase && x.J == y.J && x.extra == y.extra;
  }
};

struct LabelSequence {
  std::vector<SubspaceLabel> labels;

  std::string key() const; // canonical string, usable as a map key

  friend bool operator==(const LabelSequence& x, const LabelSequence& y) {
    return x.labels == y.labels;
  }
};

// Positions p (1-based) where dim(W n E_p) jumps, E_p the span of the
// first p filtration vectors; |result| = dim W when the chain is complete.
std::vector<int> schubert_jumps(const SubspaceBasis& w,
                                const std::vector<ExactVector>& filtration);

// Label of the B_{n-1}-orbit through V.  Isotropy is required (and
// checked) in the orthogonal families.
SubspaceLabel subspace_label(const GroupContext& ctx, const SubspaceBasis& v);

// Level-by-level labels of a matrix flag (columns = flag vectors).
LabelSequence label_sequence(const GroupContext& ctx, const ExactMatrix& flag);

// The same sequence computed purely symbolically from a standard flag via
// the span collapse rules; agrees with label_sequence on the embedding.
LabelSequence predict_label_sequence(const StandardFlag& flag);

} // namespace atlas
