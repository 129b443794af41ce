#include "atlas/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace atlas {

namespace {

ExactVector flatten(const ExactMatrix& m) {
  ExactVector v(static_cast<size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v[static_cast<size_t>(r) * m.cols() + c] = m.at(r, c);
  return v;
}

ExactMatrix unflatten(const ExactVector& v, int n) {
  ExactMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = v[static_cast<size_t>(r) * n + c];
  return m;
}

// Kernel of a list of linear constraints on n x n matrices.  Each
// constraint maps a matrix X to one entry of a linear expression in X.
struct MatrixConstraints {
  int n;
  std::vector<ExactVector> rows; // each of length n*n

  void add(const ExactVector& row) { rows.push_back(row); }

  // entry (i,j) of X
  static ExactVector entry(int n, int i, int j) {
    ExactVector row(static_cast<size_t>(n) * n);
    row[static_cast<size_t>(i) * n + j] = 1;
    return row;
  }

  std::vector<ExactMatrix> kernel_matrices() const {
    std::vector<ExactMatrix> out;
    if (rows.empty()) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ExactMatrix m(n, n);
          m.at(i, j) = 1;
          out.push_back(m);
        }
      return out;
    }
    ExactMatrix sys = ExactMatrix::from_rows(rows, n * n);
    for (const ExactVector& k : kernel(sys)) out.push_back(unflatten(k, n));
    return out;
  }
};

std::string weight_name(const std::vector<int>& w) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (w[i] > 0 && !first) os << "+";
    if (w[i] == -1)
      os << "-";
    else if (w[i] != 1)
      os << w[i];
    os << "e" << (i + 1);
    first = false;
  }
  return os.str();
}

// Canonical order of a simple system: by first supported epsilon, then by
// the sign of the last coefficient, so chains read a1, a2, ... and the type
// D fork ends (e_{l-1}-e_l, e_{l-1}+e_l).
bool simple_root_less(const std::vector<int>& x, const std::vector<int>& y) {
  auto first_support = [](const std::vector<int>& w) {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) return i;
    return w.size();
  };
  size_t fx = first_support(x), fy = first_support(y);
  if (fx != fy) return fx < fy;
  return x < y;
}

} // namespace

int GroupContext::col_of_index(int signed_index) const {
  if (family == Family::A) {
    if (signed_index < 1 || signed_index > n) throw DomainError("col_of_index: bad type A index");
    return signed_index - 1;
  }
  if (signed_index == 0) {
    if (family != Family::B) throw DomainError("col_of_index: index 0 only in type B");
    return ell; // e_0 sits between e_l and e_{-l}
  }
  int a = std::abs(signed_index);
  if (a < 1 || a > ell) throw DomainError("col_of_index: index out of range");
  return signed_index > 0 ? signed_index - 1 : n - a;
}

ExactVector GroupContext::basis_vector(int signed_index) const {
  ExactVector v(n);
  v[col_of_index(signed_index)] = 1;
  return v;
}

QSqrt2 GroupContext::beta(const ExactVector& x, const ExactVector& y) const {
  if (!is_orthogonal()) throw DomainError("beta: undefined in type A");
  QSqrt2 s;
  for (int r = 0; r < n; ++r) {
    if (x[r].is_zero()) continue;
    // S pairs coordinate r with n-1-r.
    if (!y[n - 1 - r].is_zero()) s += x[r] * y[n - 1 - r];
  }
  return s;
}

std::optional<ExactVector> GroupContext::u1_coords(const ExactVector& v) const {
  const int m = static_cast<int>(u1_ordered_basis.size());
  ExactVector coords(m);
  switch (family) {
    case Family::A:
      if (!v[n - 1].is_zero()) return std::nullopt;
      for (int i = 0; i < m; ++i) coords[i] = v[i];
      return coords;
    case Family::D: {
      int cl = col_of_index(ell), cml = col_of_index(-ell);
      if (v[cl] != v[cml]) return std::nullopt;
      for (int i = 0; i < m; ++i) {
        int s = u1_position_signs[i];
        coords[i] = s == 0 ? v[cl] : v[col_of_index(s)];
      }
      return coords;
    }
    case Family::B:
      if (!v[col_of_index(0)].is_zero()) return std::nullopt;
      for (int i = 0; i < m; ++i) coords[i] = v[col_of_index(u1_position_signs[i])];
      return coords;
  }
  throw DomainError("bad family");
}

ExactVector GroupContext::from_u1_coords(const ExactVector& coords) const {
  ExactVector v(n);
  for (size_t i = 0; i < u1_ordered_basis.size(); ++i)
    if (!coords[i].is_zero()) v = vec_add(v, vec_scaled(u1_ordered_basis[i], coords[i]));
  return v;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

namespace {

// Epsilon-coordinate vector of a matrix coordinate position, on a torus of
// the given rank.
std::vector<int> eps_of_position(Family family, int n, int rank, int pos /*0-based*/) {
  std::vector<int> e(rank, 0);
  if (family == Family::A) {
    if (pos < rank) e[pos] = 1;
    return e;
  }
  int ell = family == Family::D ? n / 2 : (n - 1) / 2;
  if (pos < ell) {
    if (pos < rank) e[pos] = 1;
  } else if (family == Family::B && pos == ell) {
    // e_0: weight zero
  } else {
    int j = n - 1 - pos; // position of e_{-(j+1)}
    if (j < rank) e[j] = -1;
  }
  return e;
}

struct RootSystem {
  std::vector<std::vector<int>> positive_weights;
  std::vector<ExactMatrix> positive_raising; // one per positive root
  std::vector<SimpleRoot> simple;
};

// Root decomposition of an algebra given by a basis, relative to the
// epsilon grading of coordinates.  Root spaces are cut out exactly as
// intersections with the coordinate weight classes.
RootSystem root_decomposition(Family family, int n, int rank,
                              const std::vector<ExactMatrix>& algebra,
                              const std::vector<ExactMatrix>& torus) {
  std::vector<ExactVector> flat;
  for (const auto& m : algebra) flat.push_back(flatten(m));
  SubspaceBasis alg = SubspaceBasis::span(n * n, flat);

  std::map<std::vector<int>, std::vector<std::pair<int, int>>> classes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<int> w(rank, 0);
      auto ei = eps_of_position(family, n, rank, i);
      auto ej = eps_of_position(family, n, rank, j);
      for (int k = 0; k < rank; ++k) w[k] = ei[k] - ej[k];
      if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) continue;
      classes[w].push_back({i, j});
    }

  RootSystem rs;
  int total_root_dim = 0;
  for (const auto& [w, pairs] : classes) {
    std::vector<ExactVector> gens;
    bool upper = true, lower = true;
    for (auto [i, j] : pairs) {
      ExactVector v(static_cast<size_t>(n) * n);
      v[static_cast<size_t>(i) * n + j] = 1;
      gens.push_back(std::move(v));
      (i < j ? lower : upper) = false;
    }
    SubspaceBasis space = alg.intersect(SubspaceBasis::span(n * n, gens));
    if (space.dim() == 0) continue;
    if (!upper && !lower)
      throw InternalInvariantError("root class mixes upper and lower coordinates");
    total_root_dim += space.dim();
    if (!upper) continue; // negative root
    if (space.dim() != 1)
      throw InternalInvariantError("positive root space is not one dimensional");
    rs.positive_weights.push_back(w);
    rs.positive_raising.push_back(unflatten(space.basis_vector(0), n));
  }
  if (total_root_dim + static_cast<int>(torus.size()) != static_cast<int>(algebra.size()))
    throw InternalInvariantError("root decomposition does not exhaust the algebra");

  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<size_t> simple_idx;
  for (size_t i = 0; i < rs.positive_weights.size(); ++i) {
    bool decomposable = false;
    for (size_t a = 0; a < rs.positive_weights.size() && !decomposable; ++a)
      for (size_t b = a; b < rs.positive_weights.size() && !decomposable; ++b) {
        std::vector<int> sum(rank, 0);
        for (int k = 0; k < rank; ++k)
          sum[k] = rs.positive_weights[a][k] + rs.positive_weights[b][k];
        if (sum == rs.positive_weights[i]) decomposable = true;
      }
    if (!decomposable) simple_idx.push_back(i);
  }
  std::sort(simple_idx.begin(), simple_idx.end(), [&](size_t x, size_t y) {
    return simple_root_less(rs.positive_weights[x], rs.positive_weights[y]);
  });

  for (size_t idx : simple_idx) {
    SimpleRoot sr;
    sr.weight = rs.positive_weights[idx];
    sr.name = weight_name(sr.weight);
    sr.raising = rs.positive_raising[idx];
    // Normalize the leading coordinate to 1 for determinism.
    for (int r = 0; r < n && true; ++r) {
      bool done = false;
      for (int c = 0; c < n; ++c)
        if (!sr.raising.at(r, c).is_zero()) {
          sr.raising = sr.raising.scaled(sr.raising.at(r, c).inverse());
          done = true;
          break;
        }
      if (done) break;
    }
    // Lowering operator: the mirror root space, scaled so that
    // alpha([X,Y]) = 2.
    std::vector<int> neg(rank);
    for (int k = 0; k < rank; ++k) neg[k] = -sr.weight[k];
    std::vector<ExactVector> gens;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        auto ei = eps_of_position(family, n, rank, i);
        auto ej = eps_of_position(family, n, rank, j);
        std::vector<int> w(rank);
        for (int k = 0; k < rank; ++k) w[k] = ei[k] - ej[k];
        if (w == neg) {
          ExactVector v(static_cast<size_t>(n) * n);
          v[static_cast<size_t>(i) * n + j] = 1;
          gens.push_back(std::move(v));
        }
      }
    SubspaceBasis space = alg.intersect(SubspaceBasis::span(n * n, gens));
    if (space.dim() != 1) throw InternalInvariantError("negative root space is not one dimensional");
    ExactMatrix y0 = unflatten(space.basis_vector(0), n);
    ExactMatrix h0 = commutator(sr.raising, y0);
    // alpha(H) in epsilon coordinates: sum w_k * H[k][k].
    QSqrt2 alpha_h0;
    for (int k = 0; k < rank; ++k)
      if (sr.weight[k] != 0) alpha_h0 += QSqrt2(sr.weight[k]) * h0.at(k, k);
    if (alpha_h0.is_zero()) throw InternalInvariantError("degenerate sl2 normalization");
    sr.lowering = y0.scaled(QSqrt2(2) / alpha_h0);
    sr.reflection = exp_nilpotent(sr.raising) * exp_nilpotent(sr.lowering.scaled(QSqrt2(-1))) *
                    exp_nilpotent(sr.raising);
    rs.simple.push_back(std::move(sr));
  }
  return rs;
}

} // namespace

GroupContext build_context(Family family, int n) {
  GroupContext ctx;
  ctx.family = family;
  ctx.n = n;
  ctx.ell = rank_from_ambient(family, n);
  const int ell = ctx.ell;

  if (family == Family::A) {
    ctx.form = ExactMatrix::identity(n);
  } else {
    ctx.form = ExactMatrix(n, n);
    for (int r = 0; r < n; ++r) ctx.form.at(r, n - 1 - r) = 1;
  }

  // Ambient Lie algebra.
  MatrixConstraints g_constraints{n, {}};
  if (family != Family::A) {
    // X^T S + S X = 0, i.e. X_{s(j),i} + X_{s(i),j} = 0 with s(i) = n-1-i.
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ExactVector row(static_cast<size_t>(n) * n);
        row[static_cast<size_t>(n - 1 - j) * n + i] += 1;
        row[static_cast<size_t>(n - 1 - i) * n + j] += 1;
        g_constraints.add(row);
      }
  }
  ctx.basis_g = g_constraints.kernel_matrices();

  // Symmetric subalgebra.
  MatrixConstraints k_constraints = g_constraints;
  ctx.u2 = ExactVector(n);
  if (family == Family::A) {
    ctx.u2[n - 1] = 1;
    for (int i = 0; i < n; ++i) {
      k_constraints.add(MatrixConstraints::entry(n, i, n - 1)); // X e_n = 0
      k_constraints.add(MatrixConstraints::entry(n, n - 1, i)); // e_n^T X = 0
    }
  } else {
    if (family == Family::D) {
      ctx.u2[ctx.col_of_index(ell)] = 1;
      ctx.u2[ctx.col_of_index(-ell)] = -1;
    } else {
      ctx.u2[ctx.col_of_index(0)] = 1;
    }
    for (int i = 0; i < n; ++i) {
      ExactVector row(static_cast<size_t>(n) * n);
      for (int j = 0; j < n; ++j)
        if (!ctx.u2[j].is_zero()) row[static_cast<size_t>(i) * n + j] = ctx.u2[j];
      k_constraints.add(row); // X u2 = 0
    }
  }
  ctx.basis_k = k_constraints.kernel_matrices();

  // Borel subalgebra b_{n-1} = k ∩ upper triangular.
  MatrixConstraints b_constraints = k_constraints;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) b_constraints.add(MatrixConstraints::entry(n, i, j));
  ctx.basis_b = b_constraints.kernel_matrices();
  ctx.dim_borel = static_cast<int>(ctx.basis_b.size());

  // Epsilon-dual torus bases.
  const int rank_g = family == Family::A ? n : ell;
  const int rank_k = family == Family::A ? n - 1 : (family == Family::D ? ell - 1 : ell);
  for (int i = 0; i < rank_g; ++i) {
    ExactMatrix h(n, n);
    h.at(i, i) = 1;
    if (family != Family::A) h.at(n - 1 - i, n - 1 - i) = -1;
    ctx.torus_g.push_back(h);
  }
  for (int i = 0; i < rank_k; ++i) {
    ExactMatrix h(n, n);
    h.at(i, i) = 1;
    if (family != Family::A) h.at(n - 1 - i, n - 1 - i) = -1;
    ctx.torus_k.push_back(h);
  }

  RootSystem g_roots = root_decomposition(family, n, rank_g, ctx.basis_g, ctx.torus_g);
  ctx.simple_g = std::move(g_roots.simple);
  RootSystem k_roots = root_decomposition(family, n, rank_k, ctx.basis_k, ctx.torus_k);
  ctx.simple_k = std::move(k_roots.simple);
  ctx.positive_k_raising = std::move(k_roots.positive_raising);

  if (ctx.dim_borel != static_cast<int>(ctx.positive_k_raising.size()) + rank_k)
    throw InternalInvariantError("dim b_{n-1} != #positive k-roots + rank k");

  // U_1 with its K-triangular ordered basis.
  std::vector<ExactVector> u1_basis;
  if (family == Family::A) {
    for (int i = 1; i <= n - 1; ++i) {
      u1_basis.push_back(ctx.basis_vector(i));
      ctx.u1_position_signs.push_back(i);
    }
  } else if (family == Family::D) {
    for (int i = 1; i <= ell - 1; ++i) {
      u1_basis.push_back(ctx.basis_vector(i));
      ctx.u1_position_signs.push_back(i);
    }
    u1_basis.push_back(vec_add(ctx.basis_vector(ell), ctx.basis_vector(-ell)));
    ctx.u1_position_signs.push_back(0);
    for (int i = ell - 1; i >= 1; --i) {
      u1_basis.push_back(ctx.basis_vector(-i));
      ctx.u1_position_signs.push_back(-i);
    }
  } else {
    for (int i = 1; i <= ell; ++i) {
      u1_basis.push_back(ctx.basis_vector(i));
      ctx.u1_position_signs.push_back(i);
    }
    for (int i = ell; i >= 1; --i) {
      u1_basis.push_back(ctx.basis_vector(-i));
      ctx.u1_position_signs.push_back(-i);
    }
  }
  ctx.u1_ordered_basis = u1_basis;
  ctx.u1 = SubspaceBasis::span(n, u1_basis);
  return ctx;
}

ExactMatrix one_param(const SimpleRoot& root, const QSqrt2& t) {
  return exp_nilpotent(root.raising.scaled(t));
}

ExactMatrix random_borel(const GroupContext& ctx, std::uint64_t seed) {
  static const Rational torus_pool[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3)};
  static const Rational param_pool[] = {Rational(1), Rational(-1), Rational(2),
                                        Rational(-2), Rational(1, 2), Rational(3)};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  auto pick = [&rng](const Rational* pool, size_t size) { return pool[rng() % size]; };

  const int n = ctx.n, ell = ctx.ell;
  ExactMatrix h(n, n);
  if (ctx.family == Family::A) {
    for (int i = 0; i < n - 1; ++i) h.at(i, i) = QSqrt2(pick(torus_pool, 4));
    h.at(n - 1, n - 1) = 1;
  } else {
    int free_rank = ctx.family == Family::D ? ell - 1 : ell;
    for (int i = 0; i < free_rank; ++i) {
      QSqrt2 t(pick(torus_pool, 4));
      h.at(i, i) = t;
      h.at(n - 1 - i, n - 1 - i) = t.inverse();
    }
    for (int i = free_rank; i < n - free_rank; ++i) h.at(i, i) = 1;
  }
  ExactMatrix g = h;
  for (const ExactMatrix& x : ctx.positive_k_raising)
    g = g * exp_nilpotent(x.scaled(QSqrt2(pick(param_pool, 6))));
  return g;
}

ExactMatrix complete_frame(const GroupContext& ctx, const ExactMatrix& flag) {
  const int n = ctx.n;
  if (flag.rows() != n) throw DomainError("complete_frame: ambient mismatch");
  if (ctx.family == Family::A) {
    if (flag.cols() != n) throw DomainError("complete_frame: type A needs a full flag");
    if (det(flag).is_zero()) throw DomainError("complete_frame: flag columns are dependent");
    return flag;
  }
  const int k = ctx.flag_cols();
  if (flag.cols() != k) throw DomainError("complete_frame: wrong flag length");

  std::vector<ExactVector> v(k);
  for (int j = 0; j < k; ++j) v[j] = flag.column(j);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if (!ctx.beta(v[i], v[j]).is_zero())
        throw DomainError("complete_frame: flag is not isotropic");
  {
    SubspaceBasis span = SubspaceBasis::column_space(flag);
    if (span.dim() != k) throw DomainError("complete_frame: flag columns are dependent");
  }

  // beta(x, u) as a linear functional in u is the row (S x)^T.
  auto beta_row = [&](const ExactVector& x) {
    ExactVector row(n);
    for (int c = 0; c < n; ++c) row[c] = x[n - 1 - c];
    return row;
  };

  // Dual isotropic family: beta(v_i, u_j) = delta_ij, beta(u_i, u_j) = 0.
  std::vector<ExactVector> u(k);
  for (int j = k - 1; j >= 0; --j) {
    std::vector<ExactVector> rows;
    ExactVector rhs;
    for (int i = 0; i < k; ++i) {
      rows.push_back(beta_row(v[i]));
      rhs.push_back(i == j ? QSqrt2(1) : QSqrt2(0));
    }
    for (int m = k - 1; m > j; --m) {
      rows.push_back(beta_row(u[m]));
      rhs.push_back(QSqrt2(0));
    }
    auto sol = solve(ExactMatrix::from_rows(rows, n), rhs);
    if (!sol) throw InternalInvariantError("complete_frame: dual system unsolvable");
    ExactVector uj = *sol;
    // Self-pairing correction keeps every previous condition intact.
    QSqrt2 self = ctx.beta(uj, uj);
    if (!self.is_zero()) uj = vec_sub(uj, vec_scaled(v[j], self * QSqrt2(Rational(1, 2))));
    u[j] = uj;
  }

  // Orthogonal complement of the hyperbolic family.
  std::vector<ExactVector> rows;
  for (int i = 0; i < k; ++i) rows.push_back(beta_row(v[i]));
  for (int i = 0; i < k; ++i) rows.push_back(beta_row(u[i]));
  std::vector<ExactVector> middle = kernel(ExactMatrix::from_rows(rows, n));

  ExactMatrix g(n, n);
  for (int j = 0; j < k; ++j) g.set_column(ctx.col_of_index(j + 1), v[j]);
  for (int j = 0; j < k; ++j) g.set_column(ctx.col_of_index(-(j + 1)), u[j]);

  if (ctx.family == Family::B) {
    if (middle.size() != 1) throw InternalInvariantError("complete_frame: bad middle rank");
    ExactVector m = middle[0];
    auto r = qsqrt2_sqrt(ctx.beta(m, m));
    if (!r || r->is_zero())
      throw DomainError("complete_frame: middle norm is not a square in Q(sqrt2)");
    g.set_column(ctx.col_of_index(0), vec_scaled(m, r->inverse()));
  } else {
    if (middle.size() != 2) throw InternalInvariantError("complete_frame: bad middle rank");
    ExactVector b1 = middle[0], b2 = middle[1];
    QSqrt2 p = ctx.beta(b1, b1), q = ctx.beta(b1, b2), r = ctx.beta(b2, b2);
    ExactVector m1;
    if (p.is_zero())
      m1 = b1;
    else if (r.is_zero())
      m1 = b2;
    else {
      auto disc = qsqrt2_sqrt(q * q - p * r);
      if (!disc) throw DomainError("complete_frame: middle plane is not split over Q(sqrt2)");
      QSqrt2 x = (*disc - q) / p;
      m1 = vec_add(vec_scaled(b1, x), b2);
      if (!ctx.beta(m1, m1).is_zero())
        throw InternalInvariantError("complete_frame: isotropic middle vector computation failed");
    }
    ExactVector m2 = ctx.beta(m1, b1).is_zero() ? b2 : b1;
    QSqrt2 pairing = ctx.beta(m1, m2);
    if (pairing.is_zero()) throw InternalInvariantError("complete_frame: degenerate middle plane");
    m2 = vec_scaled(m2, pairing.inverse());
    QSqrt2 self = ctx.beta(m2, m2);
    if (!self.is_zero()) m2 = vec_sub(m2, vec_scaled(m1, self * QSqrt2(Rational(1, 2))));
    g.set_column(ctx.col_of_index(ctx.ell), m1);
    g.set_column(ctx.col_of_index(-ctx.ell), m2);
  }

  if (!(g.transpose() * ctx.form * g == ctx.form))
    throw InternalInvariantError("complete_frame: frame does not preserve beta");
  QSqrt2 d = det(g);
  if (d == QSqrt2(-1)) {
    if (ctx.family == Family::B) {
      g.set_column(ctx.col_of_index(0), vec_scaled(g.column(ctx.col_of_index(0)), QSqrt2(-1)));
    } else {
      ExactVector a = g.column(ctx.col_of_index(ctx.ell));
      g.set_column(ctx.col_of_index(ctx.ell), g.column(ctx.col_of_index(-ctx.ell)));
      g.set_column(ctx.col_of_index(-ctx.ell), a);
    }
    d = det(g);
  }
  if (d != QSqrt2(1)) throw InternalInvariantError("complete_frame: determinant is not 1");
  return g;
}

} // namespace atlas
