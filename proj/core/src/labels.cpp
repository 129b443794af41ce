#include "atlas/labels.hpp"

#include <algorithm>
#include <sstream>

namespace atlas {

namespace {

// dim(W n span(first p filtration vectors)) for p = 0..m, by rank counting.
std::vector<int> meet_dims(const SubspaceBasis& w, const std::vector<ExactVector>& filtration) {
  std::vector<int> dims(filtration.size() + 1, 0);
  const int ambient = w.ambient_dim();
  std::vector<ExactVector> rows;
  for (int i = 0; i < w.dim(); ++i) rows.push_back(w.basis_vector(i));
  for (size_t p = 0; p <= filtration.size(); ++p) {
    if (p > 0) rows.push_back(filtration[p - 1]);
    // dim(W n E_p) = dim W + p - dim(W + E_p)
    int sum_dim = SubspaceBasis::span(ambient, rows).dim();
    dims[p] = w.dim() + static_cast<int>(p) - sum_dim;
  }
  return dims;
}

// Signed-index jump set of a subspace of U_1, via the K-triangular chain.
std::vector<int> u1_jump_signs(const GroupContext& ctx, const SubspaceBasis& w) {
  std::vector<int> jumps = schubert_jumps(w, ctx.u1_ordered_basis);
  std::vector<int> signs;
  for (int p : jumps) {
    int s = ctx.u1_position_signs[p - 1];
    if (s == 0)
      throw InternalInvariantError("isotropic subspace jumps at the middle position");
    signs.push_back(s);
  }
  std::sort(signs.begin(), signs.end());
  return signs;
}

// Echelon basis of W (in U_1 coordinates) whose rows have their *last*
// nonzero entry at the jump positions, normalized to 1 there.  Reducing a
// vector at these positions is the canonical reduction mod W.
std::vector<ExactVector> trailing_echelon(const ExactMatrix& coords) {
  int rows = coords.rows(), cols = coords.cols();
  ExactMatrix rev(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) rev.at(r, c) = coords.at(r, cols - 1 - c);
  RrefResult rr = rref(rev);
  std::vector<ExactVector> out;
  for (int r = 0; r < rr.rank; ++r) {
    ExactVector v(cols);
    for (int c = 0; c < cols; ++c) v[c] = rr.reduced.at(r, cols - 1 - c);
    out.push_back(std::move(v));
  }
  return out;
}

void check_isotropic(const GroupContext& ctx, const SubspaceBasis& v) {
  for (int i = 0; i < v.dim(); ++i)
    for (int j = i; j < v.dim(); ++j)
      if (!ctx.beta(v.basis_vector(i), v.basis_vector(j)).is_zero())
        throw DomainError("subspace_label: subspace is not isotropic");
}

} // namespace

std::string to_string(LabelCase c) {
  switch (c) {
    case LabelCase::A1: return "A1";
    case LabelCase::A2: return "A2";
    case LabelCase::A3: return "A3";
    case LabelCase::D1: return "D1";
    case LabelCase::D2: return "D2";
    case LabelCase::D3: return "D3";
    case LabelCase::D4: return "D4";
    case LabelCase::B1: return "B1";
    case LabelCase::B2: return "B2";
  }
  throw DomainError("bad label case");
}

std::string SubspaceLabel::str() const {
  std::ostringstream os;
  os << to_string(kase) << "{";
  for (size_t i = 0; i < J.size(); ++i) {
    if (i) os << ",";
    os << J[i];
  }
  os << "}";
  if (extra) os << "^" << *extra;
  return os.str();
}

std::string SubspaceLabel::json() const {
  std::ostringstream os;
  os << "{\"case\":\"" << to_string(kase) << "\",\"J\":[";
  for (size_t i = 0; i < J.size(); ++i) {
    if (i) os << ",";
    os << J[i];
  }
  os << "],\"extra\":";
  if (extra)
    os << *extra;
  else
    os << "null";
  os << "}";
  return os.str();
}

std::string LabelSequence::key() const {
  std::string s;
  for (const auto& l : labels) {
    s += l.str();
    s += ";";
  }
  return s;
}

std::vector<int> schubert_jumps(const SubspaceBasis& w,
                                const std::vector<ExactVector>& filtration) {
  std::vector<int> dims = meet_dims(w, filtration);
  std::vector<int> jumps;
  for (size_t p = 1; p < dims.size(); ++p)
    if (dims[p] > dims[p - 1]) jumps.push_back(static_cast<int>(p));
  return jumps;
}

SubspaceLabel subspace_label(const GroupContext& ctx, const SubspaceBasis& v) {
  if (v.ambient_dim() != ctx.n) throw DomainError("subspace_label: ambient mismatch");
  if (ctx.is_orthogonal()) check_isotropic(ctx, v);

  SubspaceBasis w1 = v.intersect(ctx.u1);
  SubspaceLabel label;
  std::vector<int> j1 = u1_jump_signs(ctx, w1);

  if (w1.dim() == v.dim()) {
    label.kase = ctx.family == Family::A   ? LabelCase::A1
                 : ctx.family == Family::D ? LabelCase::D1
                                           : LabelCase::B1;
    label.J = j1;
    return label;
  }
  if (w1.dim() + 1 != v.dim())
    throw InternalInvariantError("subspace_label: U_1 intersection dropped by more than one");

  if (ctx.family == Family::A) {
    if (v.contains_vector(ctx.u2)) {
      label.kase = LabelCase::A2;
      label.J = j1;
      return label;
    }
    // Project off e_n and locate the one new jump.
    std::vector<ExactVector> proj;
    for (int i = 0; i < v.dim(); ++i) {
      ExactVector row = v.basis_vector(i);
      row[ctx.n - 1] = 0;
      proj.push_back(std::move(row));
    }
    std::vector<int> jp = u1_jump_signs(ctx, SubspaceBasis::span(ctx.n, proj));
    std::vector<int> fresh;
    std::set_difference(jp.begin(), jp.end(), j1.begin(), j1.end(), std::back_inserter(fresh));
    if (fresh.size() != 1)
      throw InternalInvariantError("subspace_label: hat index is not unique");
    label.kase = LabelCase::A3;
    label.J = j1;
    label.extra = fresh.front();
    return label;
  }

  // Orthogonal codimension-one branch: reduce a vector outside U_1 against
  // V n U_1 at the jump positions, then read its normal form.
  ExactVector u;
  bool found = false;
  for (int i = 0; i < v.dim(); ++i) {
    ExactVector row = v.basis_vector(i);
    if (!ctx.u1_coords(row)) {
      u = std::move(row);
      found = true;
      break;
    }
  }
  if (!found) throw InternalInvariantError("subspace_label: no vector outside U_1");

  // Split u into its U_1 part and its u2 part.
  QSqrt2 nu;
  if (ctx.family == Family::D) {
    int cl = ctx.col_of_index(ctx.ell), cml = ctx.col_of_index(-ctx.ell);
    nu = (u[cl] - u[cml]) * QSqrt2(Rational(1, 2));
  } else {
    nu = u[ctx.col_of_index(0)];
  }
  ExactVector u1_part = vec_sub(u, vec_scaled(ctx.u2, nu));
  auto coords = ctx.u1_coords(u1_part);
  if (!coords) throw InternalInvariantError("subspace_label: U_1 part not in U_1");

  // Reduce at the jump positions of V n U_1.
  if (w1.dim() > 0) {
    std::vector<ExactVector> rows;
    for (int i = 0; i < w1.dim(); ++i) {
      auto c = ctx.u1_coords(w1.basis_vector(i));
      if (!c) throw InternalInvariantError("subspace_label: V n U_1 escapes U_1");
      rows.push_back(*c);
    }
    std::vector<ExactVector> ech =
        trailing_echelon(ExactMatrix::from_rows(rows, static_cast<int>(ctx.u1_ordered_basis.size())));
    for (const ExactVector& w : ech) {
      int pivot = -1;
      for (int c = static_cast<int>(w.size()) - 1; c >= 0; --c)
        if (!w[c].is_zero()) {
          pivot = c;
          break;
        }
      if (pivot < 0) continue;
      QSqrt2 f = (*coords)[pivot];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < coords->size(); ++c) (*coords)[c] -= f * w[c];
    }
  }
  ExactVector reduced = vec_add(ctx.from_u1_coords(*coords), vec_scaled(ctx.u2, nu));

  label.J = j1;
  if (ctx.family == Family::B) {
    int min_neg = 0;
    for (int j = 1; j <= ctx.ell; ++j)
      if (!reduced[ctx.col_of_index(-j)].is_zero()) {
        min_neg = j;
        break;
      }
    if (min_neg == 0)
      throw InternalInvariantError("subspace_label: type B outside vector has no e_{-j} tail");
    label.kase = LabelCase::B2;
    label.extra = min_neg;
    return label;
  }

  // Type D: classify by (v_-, mu, lambda).
  QSqrt2 mu = reduced[ctx.col_of_index(ctx.ell)];
  QSqrt2 lambda = reduced[ctx.col_of_index(-ctx.ell)];
  int min_neg = 0;
  for (int j = 1; j <= ctx.ell - 1; ++j)
    if (!reduced[ctx.col_of_index(-j)].is_zero()) {
      min_neg = j;
      break;
    }
  if (min_neg != 0) {
    label.kase = LabelCase::D4;
    label.extra = min_neg;
    return label;
  }
  if (!mu.is_zero() && lambda.is_zero()) {
    label.kase = LabelCase::D2;
    return label;
  }
  if (mu.is_zero() && !lambda.is_zero()) {
    label.kase = LabelCase::D3;
    return label;
  }
  throw InternalInvariantError("subspace_label: type D normal form failed (mu,lambda both " +
                               std::string(mu.is_zero() ? "zero" : "nonzero") + ")");
}

LabelSequence label_sequence(const GroupContext& ctx, const ExactMatrix& flag) {
  if (flag.rows() != ctx.n) throw DomainError("label_sequence: ambient mismatch");
  LabelSequence seq;
  std::vector<ExactVector> cols;
  for (int c = 0; c < flag.cols(); ++c) {
    cols.push_back(flag.column(c));
    SubspaceBasis v = SubspaceBasis::span(ctx.n, cols);
    if (v.dim() != c + 1) throw DomainError("label_sequence: flag columns are dependent");
    seq.labels.push_back(subspace_label(ctx, v));
  }
  return seq;
}

LabelSequence predict_label_sequence(const StandardFlag& flag) {
  auto diags = validate_standard(flag);
  if (!diags.empty())
    throw DomainError("predict_label_sequence: flag not standard (" + diags.front() + ")");

  LabelSequence seq;
  const int size = flag.size;

  if (flag.family == Family::A) {
    bool seen_en = false;
    std::vector<int> hats; // in flag order; strictly decreasing
    std::vector<int> all_indices;
    for (const auto& fv : flag.vectors) {
      if (fv.is_basis() && fv.index == size) seen_en = true;
      if (fv.kind == VecKind::HatA) hats.push_back(fv.index);
      all_indices.push_back(fv.slot_index());
      SubspaceLabel l;
      if (seen_en) {
        l.kase = LabelCase::A2;
        for (int i : all_indices)
          if (i != size) l.J.push_back(i);
      } else if (!hats.empty()) {
        l.kase = LabelCase::A3;
        l.extra = hats.back(); // the most recent hat survives
        for (int i : all_indices)
          if (i != hats.back()) l.J.push_back(i);
      } else {
        l.kase = LabelCase::A1;
        l.J = all_indices;
      }
      std::sort(l.J.begin(), l.J.end());
      seq.labels.push_back(std::move(l));
    }
    return seq;
  }

  if (flag.family == Family::D) {
    const int ell = size;
    int seen_pm_ell = 0;             // +1 for e_l, -1 for e_{-l}
    std::vector<int> specials;       // hat or tilde indices in flag order
    std::vector<int> basis_signs;    // signed basis indices, e_{+-l} excluded
    for (const auto& fv : flag.vectors) {
      if (fv.is_basis()) {
        if (std::abs(fv.index) == ell)
          seen_pm_ell = fv.index > 0 ? +1 : -1;
        else
          basis_signs.push_back(fv.index);
      } else {
        specials.push_back(fv.index);
      }
      SubspaceLabel l;
      if (seen_pm_ell != 0) {
        // Hats collapse to e_{-index} once e_{-l} is present; tildes once
        // e_l is present.
        l.kase = seen_pm_ell > 0 ? LabelCase::D2 : LabelCase::D3;
        l.J = basis_signs;
        for (int s : specials) l.J.push_back(-s);
      } else if (!specials.empty()) {
        l.kase = LabelCase::D4;
        l.extra = specials.back();
        l.J = basis_signs;
        for (size_t i = 0; i + 1 < specials.size(); ++i) l.J.push_back(-specials[i]);
      } else {
        l.kase = LabelCase::D1;
        l.J = basis_signs;
      }
      std::sort(l.J.begin(), l.J.end());
      seq.labels.push_back(std::move(l));
    }
    return seq;
  }

  // Family B.
  std::vector<int> basis_signs;
  std::vector<int> hat2; // second-kind indices in flag order
  int hat1 = 0;
  for (const auto& fv : flag.vectors) {
    if (fv.is_basis())
      basis_signs.push_back(fv.index);
    else if (fv.kind == VecKind::HatB2)
      hat2.push_back(fv.index);
    else
      hat1 = fv.index;
    SubspaceLabel l;
    if (hat1 == 0 && hat2.empty()) {
      l.kase = LabelCase::B1;
      l.J = basis_signs;
    } else {
      l.kase = LabelCase::B2;
      l.J = basis_signs;
      if (hat1 != 0) {
        l.extra = hat1;
        for (int j : hat2) l.J.push_back(-j);
      } else {
        l.extra = hat2.back();
        for (size_t i = 0; i + 1 < hat2.size(); ++i) l.J.push_back(-hat2[i]);
      }
    }
    std::sort(l.J.begin(), l.J.end());
    seq.labels.push_back(std::move(l));
  }
  return seq;
}

} // namespace atlas
