#pragma once

#include <map>

#include "atlas/labels.hpp"

namespace atlas {

/*
  The geometric oracle.  An Atlas owns a group context together with the
  full orbit inventory at that size: every standard flag, its exact orbit
  dimension, its K-orbit, and a label-sequence index that canonicalizes an
  arbitrary matrix flag by lookup.  On top of this it computes the extended
  monoid action: the fiber of a rank-one parabolic over an orbit is sampled
  at finitely many exact parameters, every sample is canonicalized, and the
  orbit census of the samples decides both the image orbit and the root
  case.  Base point and reflection point are always among the samples; at
  most one generic sample may disagree with the rest, otherwise the run
  aborts rather than guessing.
*/

enum class Side { Left, Right };
enum class RootCase { ComplexStable, ComplexUnstable, NonCompactImaginary, Real, Fixed };

std::string to_string(Side s);
std::string to_string(RootCase c);

// Columns of the embedded standard flag, in ambient coordinates.
ExactMatrix embed_flag(const GroupContext& ctx, const StandardFlag& flag);

// dim B_{n-1} - dim{X in b_{n-1} : X V_i <= V_i for all i}.
int orbit_dim(const GroupContext& ctx, const ExactMatrix& flag);

struct OrbitRef {
  int id = -1;
  StandardFlag flag;
  int dim = 0;
  int length = 0;
  KOrbitId korbit;
};

struct EngineOptions {
  int samples = 8; // size of the fiber sample set, >= 4
  std::uint64_t seed = 0;
};

class Atlas {
public:
  Atlas(Family family, int n, EngineOptions opt = {});

  const GroupContext& ctx() const { return ctx_; }
  const EngineOptions& options() const { return opt_; }

  int size() const { return static_cast<int>(orbits_.size()); }
  const std::vector<OrbitRef>& orbits() const { return orbits_; }
  const OrbitRef& orbit(int id) const { return orbits_.at(id); }

  int id_of_flag(const StandardFlag& flag) const;

  // Unique orbit with the same label sequence; the flag may be any exact
  // matrix flag of the right shape.
  const OrbitRef& canonicalize(const ExactMatrix& flag) const;

  struct Step {
    int dst = -1;
    RootCase rc = RootCase::Fixed;
  };
  // m(s_alpha) * orbit, alpha the root-th simple root of g (Right) or of
  // k (Left); memoized.
  Step monoid(int src, Side side, int root) const;

  int num_generators(Side side) const {
    return static_cast<int>(side == Side::Right ? ctx_.simple_g.size() : ctx_.simple_k.size());
  }
  const SimpleRoot& generator_root(Side side, int root) const {
    return side == Side::Right ? ctx_.simple_g.at(root) : ctx_.simple_k.at(root);
  }

  const std::vector<QSqrt2>& sample_set() const { return samples_; }
  const ExactMatrix& frame(int id) const;

private:
  Step compute_monoid(int src, Side side, int root) const;

  GroupContext ctx_;
  EngineOptions opt_;
  std::vector<QSqrt2> samples_;
  std::vector<OrbitRef> orbits_;
  std::map<std::string, int> by_label_;
  std::map<std::string, int> by_flag_;
  mutable std::vector<std::optional<ExactMatrix>> frames_;
  mutable std::map<std::tuple<int, int, int>, Step> monoid_cache_;
};

} // namespace atlas
