#include "atlas/engine.hpp"

#include <algorithm>
#include <iterator>

namespace atlas {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::string to_string(RootCase c) {
  switch (c) {
    case RootCase::ComplexStable: return "complex_stable";
    case RootCase::ComplexUnstable: return "complex_unstable";
    case RootCase::NonCompactImaginary: return "non_compact_imaginary";
    case RootCase::Real: return "real";
    case RootCase::Fixed: return "fixed";
  }
  throw DomainError("bad root case");
}

ExactMatrix embed_flag(const GroupContext& ctx, const StandardFlag& flag) {
  if (flag.family != ctx.family || flag.size != ctx.ell)
    throw DomainError("embed_flag: flag does not match the context");
  auto diags = validate_standard(flag);
  if (!diags.empty())
    throw DomainError("embed_flag: flag not standard (" + diags.front() + ")");
  std::vector<ExactVector> cols;
  for (const auto& fv : flag.vectors) {
    ExactVector v(ctx.n);
    switch (fv.kind) {
      case VecKind::Basis:
        v = ctx.basis_vector(fv.index);
        break;
      case VecKind::HatA:
        v = vec_add(ctx.basis_vector(fv.index), ctx.basis_vector(ctx.n));
        break;
      case VecKind::HatD:
        v = vec_add(ctx.basis_vector(-fv.index), ctx.basis_vector(-ctx.ell));
        break;
      case VecKind::TildeD:
        v = vec_add(ctx.basis_vector(-fv.index), ctx.basis_vector(ctx.ell));
        break;
      case VecKind::HatB1:
        v = vec_add(ctx.basis_vector(fv.index),
                    vec_sub(vec_scaled(ctx.basis_vector(0), QSqrt2::sqrt2()),
                            ctx.basis_vector(-fv.index)));
        break;
      case VecKind::HatB2:
        v = vec_add(ctx.basis_vector(fv.aux),
                    vec_sub(vec_scaled(ctx.basis_vector(0), QSqrt2::sqrt2()),
                            ctx.basis_vector(-fv.aux)));
        v = vec_add(v, ctx.basis_vector(-fv.index));
        break;
    }
    cols.push_back(std::move(v));
  }
  return ExactMatrix::from_columns(cols, ctx.n);
}

int orbit_dim(const GroupContext& ctx, const ExactMatrix& flag) {
  if (flag.rows() != ctx.n) throw DomainError("orbit_dim: ambient mismatch");
  const int nb = static_cast<int>(ctx.basis_b.size());
  // Stabilizer condition: X v_j lies in V_j for every level j.  Reducing
  // X v_j modulo V_j gives n linear constraints per level on the b-basis
  // coordinates of X; the orbit dimension is the rank of the system.
  std::vector<ExactVector> rows;
  std::vector<ExactVector> cols_so_far;
  for (int j = 0; j < flag.cols(); ++j) {
    cols_so_far.push_back(flag.column(j));
    SubspaceBasis vj = SubspaceBasis::span(ctx.n, cols_so_far);
    if (vj.dim() != j + 1) throw DomainError("orbit_dim: flag columns are dependent");
    std::vector<ExactVector> images;
    for (int a = 0; a < nb; ++a)
      images.push_back(vj.reduce(ctx.basis_b[a].apply(cols_so_far.back())));
    for (int r = 0; r < ctx.n; ++r) {
      ExactVector row(nb);
      bool nonzero = false;
      for (int a = 0; a < nb; ++a) {
        row[a] = images[a][r];
        nonzero |= !row[a].is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return rref(ExactMatrix::from_rows(rows, nb)).rank;
}

Atlas::Atlas(Family family, int n, EngineOptions opt) : ctx_(build_context(family, n)), opt_(opt) {
  if (opt_.samples < 4) throw DomainError("Atlas: need at least 4 fiber samples");
  static const Rational pool[] = {Rational(0), Rational(1),     Rational(-1), Rational(2),
                                  Rational(3), Rational(5),     Rational(7),  Rational(1, 2),
                                  Rational(-2), Rational(4),    Rational(-3), Rational(9),
                                  Rational(11), Rational(1, 3), Rational(13), Rational(-5)};
  for (int i = 0; i < opt_.samples && i < static_cast<int>(std::size(pool)); ++i)
    samples_.push_back(QSqrt2(pool[i]));

  std::vector<StandardFlag> flags = enumerate_standard(family, ctx_.ell);
  std::vector<OrbitRef> refs;
  for (auto& f : flags) {
    OrbitRef r;
    r.dim = orbit_dim(ctx_, embed_flag(ctx_, f));
    r.korbit = korbit_symbolic(f);
    r.flag = std::move(f);
    refs.push_back(std::move(r));
  }
  std::sort(refs.begin(), refs.end(), [](const OrbitRef& x, const OrbitRef& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.flag.str() < y.flag.str();
  });
  int min_dim = refs.empty() ? 0 : refs.front().dim;
  for (int i = 0; i < static_cast<int>(refs.size()); ++i) {
    refs[i].id = i;
    refs[i].length = refs[i].dim - min_dim;
  }
  orbits_ = std::move(refs);
  frames_.resize(orbits_.size());

  for (const OrbitRef& r : orbits_) {
    std::string key = label_sequence(ctx_, embed_flag(ctx_, r.flag)).key();
    auto [it, inserted] = by_label_.emplace(std::move(key), r.id);
    if (!inserted)
      throw InternalInvariantError("Atlas: label sequences of " + r.flag.str() + " and " +
                                   orbits_[it->second].flag.str() + " collide");
    by_flag_.emplace(r.flag.str(), r.id);
  }
}

int Atlas::id_of_flag(const StandardFlag& flag) const {
  auto it = by_flag_.find(flag.str());
  if (it == by_flag_.end()) throw DomainError("Atlas: unknown flag " + flag.str());
  return it->second;
}

const OrbitRef& Atlas::canonicalize(const ExactMatrix& flag) const {
  std::string key = label_sequence(ctx_, flag).key();
  auto it = by_label_.find(key);
  if (it == by_label_.end())
    throw InternalInvariantError("canonicalize: label sequence " + key + " is not in the index");
  return orbits_[it->second];
}

const ExactMatrix& Atlas::frame(int id) const {
  auto& slot = frames_.at(id);
  if (!slot) slot = complete_frame(ctx_, embed_flag(ctx_, orbits_[id].flag));
  return *slot;
}

Atlas::Step Atlas::monoid(int src, Side side, int root) const {
  auto key = std::make_tuple(src, side == Side::Left ? 0 : 1, root);
  auto it = monoid_cache_.find(key);
  if (it != monoid_cache_.end()) return it->second;
  Step s = compute_monoid(src, side, root);
  monoid_cache_.emplace(key, s);
  return s;
}

Atlas::Step Atlas::compute_monoid(int src, Side side, int root) const {
  const OrbitRef& q = orbits_.at(src);
  const SimpleRoot& alpha = generator_root(side, root);
  const ExactMatrix& v = frame(src);
  const int k = ctx_.flag_cols();

  auto flag_of = [&](const ExactMatrix& g) {
    ExactMatrix f(ctx_.n, k);
    for (int c = 0; c < k; ++c) f.set_column(c, g.column(c));
    return f;
  };

  // Fiber points: the base point v F_+ (t = infinity) plus the sampled
  // cell points; left actions act by the parabolic of K on the left.
  std::vector<int> sample_ids;
  for (const QSqrt2& t : samples_) {
    ExactMatrix g = side == Side::Right ? v * one_param(alpha, t) * alpha.reflection
                                        : alpha.reflection * one_param(alpha, t) * v;
    sample_ids.push_back(canonicalize(flag_of(g)).id);
  }

  std::vector<int> distinct{src};
  for (int id : sample_ids)
    if (std::find(distinct.begin(), distinct.end(), id) == distinct.end()) distinct.push_back(id);

  // Generic samples (t != 0) must essentially agree: their maximal-dimension
  // orbit is unique and misses at most one sample.
  int generic_max = -1;
  for (size_t i = 1; i < sample_ids.size(); ++i)
    generic_max = std::max(generic_max, orbits_[sample_ids[i]].dim);
  int generic_orbit = -1, agree = 0;
  for (size_t i = 1; i < sample_ids.size(); ++i) {
    if (orbits_[sample_ids[i]].dim != generic_max) continue;
    if (generic_orbit < 0) generic_orbit = sample_ids[i];
    if (sample_ids[i] != generic_orbit)
      throw InternalInvariantError("monoid: generic samples of maximal dimension disagree");
  }
  for (size_t i = 1; i < sample_ids.size(); ++i)
    if (sample_ids[i] == generic_orbit) ++agree;
  int generics = static_cast<int>(sample_ids.size()) - 1;
  if (agree < std::min(6, generics - 1))
    throw InternalInvariantError("monoid: too few generic samples agree");

  int max_dim = q.dim, result = src;
  for (int id : distinct)
    if (orbits_[id].dim > max_dim) {
      max_dim = orbits_[id].dim;
      result = id;
    }
  for (int id : distinct)
    if (orbits_[id].dim == max_dim && id != result)
      throw InternalInvariantError("monoid: open orbit of the saturation is not unique");
  if (max_dim > q.dim + 1)
    throw InternalInvariantError("monoid: saturation raised dimension by more than one");

  Step step;
  step.dst = result;
  switch (distinct.size()) {
    case 1: step.rc = RootCase::Fixed; break;
    case 2: step.rc = result != src ? RootCase::ComplexStable : RootCase::ComplexUnstable; break;
    case 3: step.rc = result != src ? RootCase::NonCompactImaginary : RootCase::Real; break;
    default:
      throw InternalInvariantError("monoid: fiber saturation met more than three orbits");
  }
  return step;
}

} // namespace atlas
