#include "atlas/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace atlas {

OrbitGraph::OrbitGraph(const Atlas& atlas) : atlas_(&atlas) {
  for (int r = 0; r < atlas.num_generators(Side::Right); ++r)
    generators_.push_back({Side::Right, r});
  for (int r = 0; r < atlas.num_generators(Side::Left); ++r)
    generators_.push_back({Side::Left, r});

  action_.resize(atlas.size(), std::vector<Atlas::Step>(generators_.size()));
  for (int node = 0; node < atlas.size(); ++node)
    for (size_t g = 0; g < generators_.size(); ++g) {
      Atlas::Step step = atlas.monoid(node, generators_[g].side, generators_[g].root);
      action_[node][g] = step;
      if (step.dst == node) continue;
      if (atlas.orbit(step.dst).dim != atlas.orbit(node).dim + 1)
        throw InternalInvariantError("weak edge does not raise dimension by one");
      if (step.rc != RootCase::ComplexStable && step.rc != RootCase::NonCompactImaginary)
        throw InternalInvariantError("weak edge with a non-raising root case");
      weak_edges_.push_back({node, step.dst, generators_[g], step.rc});
    }
}

Atlas::Step OrbitGraph::action(int node, const MonoidGenerator& g) const {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return action_.at(node)[i];
  throw DomainError("unknown generator");
}

OrbitGraph build_weak_graph(const Atlas& atlas) { return OrbitGraph(atlas); }

std::vector<int> OrbitGraph::minimal_under(const std::vector<MonoidGenerator>& gens) const {
  std::vector<bool> has_incoming(atlas_->size(), false);
  for (const WeakEdge& e : weak_edges_)
    for (const MonoidGenerator& g : gens)
      if (e.gen == g) has_incoming[e.dst] = true;
  std::vector<int> out;
  for (int i = 0; i < atlas_->size(); ++i)
    if (!has_incoming[i]) out.push_back(i);
  return out;
}

void OrbitGraph::compute_lengths_minimal() {
  const Atlas& a = *atlas_;
  int min_dim = a.orbit(0).dim; // orbits are sorted by dimension
  if (min_dim != 0)
    throw VerificationError("minimal orbit dimension is " + std::to_string(min_dim) + ", not 0");
  lengths_.resize(a.size());
  for (int i = 0; i < a.size(); ++i) lengths_[i] = a.orbit(i).dim;

  minimal_ = minimal_under(generators_);
  std::set<int> minimal_set(minimal_.begin(), minimal_.end());
  std::set<int> zero_dim;
  for (int i = 0; i < a.size(); ++i)
    if (a.orbit(i).dim == 0) zero_dim.insert(i);
  if (minimal_set != zero_dim)
    throw VerificationError("weak-order minimal elements differ from the zero dimensional orbits");

  // Census and representatives of the zero dimensional orbits.
  const GroupContext& ctx = a.ctx();
  std::vector<StandardFlag> expected;
  if (ctx.family == Family::A) {
    for (int i = 1; i <= ctx.n; ++i) {
      StandardFlag f;
      f.family = Family::A;
      f.size = ctx.n;
      for (int p = 1; p < i; ++p) f.vectors.push_back(FlagVector::basis(p));
      f.vectors.push_back(FlagVector::basis(ctx.n));
      for (int p = i; p <= ctx.n - 1; ++p) f.vectors.push_back(FlagVector::basis(p));
      expected.push_back(std::move(f));
    }
  } else {
    StandardFlag plus;
    plus.family = ctx.family;
    plus.size = ctx.ell;
    for (int p = 1; p <= ctx.flag_cols(); ++p) plus.vectors.push_back(FlagVector::basis(p));
    expected.push_back(plus);
    if (ctx.family == Family::B) {
      StandardFlag minus = plus;
      minus.vectors.back() = FlagVector::basis(-ctx.ell);
      expected.push_back(std::move(minus));
    }
  }
  std::set<int> expected_ids;
  for (const auto& f : expected) expected_ids.insert(a.id_of_flag(f));
  if (expected_ids != zero_dim)
    throw VerificationError("zero dimensional orbits differ from the expected representatives");
}

void OrbitGraph::compute_standard_order() {
  if (lengths_.empty()) compute_lengths_minimal();
  const int n = atlas_->size();

  // Transitive closure of the weak edges.
  std::vector<std::set<int>> weak_succ(n);
  for (const WeakEdge& e : weak_edges_) weak_succ[e.src].insert(e.dst);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return lengths_[x] > lengths_[y]; });
  for (int v : order) {
    std::set<int> acc = weak_succ[v];
    for (int w : weak_succ[v]) acc.insert(weak_succ[w].begin(), weak_succ[w].end());
    weak_succ[v] = std::move(acc);
  }
  for (int v = 0; v < n; ++v)
    for (int w : weak_succ[v]) weak_closure_.insert({v, w});

  // Diamond pair search.
  std::map<std::pair<int, int>, CoverWitness> discovered;
  std::vector<std::pair<int, int>> queue;
  auto push = [&](std::pair<int, int> pr, CoverWitness w) {
    if (discovered.count(pr)) return;
    discovered.emplace(pr, std::move(w));
    queue.push_back(pr);
  };
  for (int node = 0; node < n; ++node)
    for (size_t g = 0; g < generators_.size(); ++g) {
      int dst = action_[node][g].dst;
      if (dst == node || lengths_[dst] != lengths_[node] + 1) continue;
      push({node, dst}, CoverWitness{node, generators_[g], {}});
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [a, b] = queue[qi];
    CoverWitness w = discovered[{a, b}];
    for (size_t g = 0; g < generators_.size(); ++g) {
      int a2 = action_[a][g].dst, b2 = action_[b][g].dst;
      if (lengths_[a2] != lengths_[a] + 1 || lengths_[b2] != lengths_[b] + 1) continue;
      CoverWitness w2 = w;
      w2.word.push_back(generators_[g]);
      push({a2, b2}, std::move(w2));
    }
  }

  // Lengths rise strictly along the relation, so the graded transitive
  // closure is automatically a partial order and the discovered pairs are
  // exactly its covers.
  std::vector<std::set<int>> succ(n);
  for (const auto& [pr, w] : discovered) succ[pr.first].insert(pr.second);
  for (int v : order) {
    std::set<int> acc = succ[v];
    for (int w : succ[v]) acc.insert(succ[w].begin(), succ[w].end());
    succ[v] = std::move(acc);
  }
  standard_closure_.clear();
  for (int v = 0; v < n; ++v)
    for (int w : succ[v]) standard_closure_.insert({v, w});

  covers_.clear();
  for (const auto& [pr, w] : discovered) {
    StandardCover c;
    c.src = pr.first;
    c.dst = pr.second;
    c.green = weak_closure_.find(pr) == weak_closure_.end();
    c.witness = w;
    covers_.push_back(std::move(c));
  }
  std::sort(covers_.begin(), covers_.end(), [](const StandardCover& x, const StandardCover& y) {
    if (x.src != y.src) return x.src < y.src;
    return x.dst < y.dst;
  });
  standard_done_ = true;
}

bool OrbitGraph::standard_le(int a, int b) const {
  if (!standard_done_) throw DomainError("standard order not computed");
  return a == b || standard_closure_.count({a, b}) > 0;
}

bool OrbitGraph::weak_le(int a, int b) const {
  if (!standard_done_) throw DomainError("standard order not computed");
  return a == b || weak_closure_.count({a, b}) > 0;
}

std::vector<StandardCover> OrbitGraph::green_covers() const {
  std::vector<StandardCover> out;
  for (const auto& c : covers_)
    if (c.green) out.push_back(c);
  return out;
}

namespace {

// Open K-orbit of the family at this size.
KOrbitId open_korbit(const GroupContext& ctx) {
  KOrbitId id;
  id.family = ctx.family;
  switch (ctx.family) {
    case Family::A:
      id.tag = KOrbitId::Tag::NonClosedA;
      id.i = 1;
      id.j = ctx.n;
      break;
    case Family::D:
      id.tag = KOrbitId::Tag::NonClosedD;
      id.i = 1;
      break;
    case Family::B:
      id.tag = KOrbitId::Tag::NonClosedB;
      id.i = 0;
      break;
  }
  return id;
}

struct LabeledEdge {
  int src, dst;
  MonoidGenerator gen;
  RootCase rc;
  friend bool operator<(const LabeledEdge& x, const LabeledEdge& y) {
    return std::tie(x.src, x.dst, x.gen, x.rc) < std::tie(y.src, y.dst, y.gen, y.rc);
  }
  friend bool operator==(const LabeledEdge& x, const LabeledEdge& y) {
    return std::tie(x.src, x.dst, x.gen, x.rc) == std::tie(y.src, y.dst, y.gen, y.rc);
  }
};

} // namespace

DualityReport op_duality_check(const OrbitGraph& big, const OrbitGraph& small) {
  DualityReport rep;
  const Atlas& ba = big.atlas();
  const Atlas& sa = small.atlas();
  const GroupContext& bctx = ba.ctx();
  const GroupContext& sctx = sa.ctx();

  if (static_cast<int>(bctx.simple_k.size()) != static_cast<int>(sctx.simple_g.size())) {
    rep.message = "rank mismatch between big K and small G";
    return rep;
  }

  // Inside nodes.
  KOrbitId open_id = open_korbit(bctx);
  std::vector<int> inside;
  std::map<int, int> inside_pos;
  for (int i = 0; i < ba.size(); ++i)
    if (ba.orbit(i).korbit == open_id) {
      inside_pos[i] = static_cast<int>(inside.size());
      inside.push_back(i);
    }
  if (static_cast<int>(inside.size()) != sa.size()) {
    rep.message = "open K-orbit holds " + std::to_string(inside.size()) + " orbits, small side has " +
                  std::to_string(sa.size());
    return rep;
  }

  // Generator pairing.  Big left root j <-> small right root j; big right
  // root m+1 <-> small left root m, where defined.  The one-step index
  // shift is the same in every family: the base-change element absorbs
  // its own twist in the realized type A graphs.
  const int small_left = static_cast<int>(sctx.simple_k.size());
  auto map_generator = [&](const MonoidGenerator& g) -> std::optional<MonoidGenerator> {
    if (g.side == Side::Left) return MonoidGenerator{Side::Right, g.root};
    int j = g.root - 1;
    if (j < 0 || j >= small_left) return std::nullopt;
    return MonoidGenerator{Side::Left, j};
  };

  // Relabeled big subgraph edges (by inside position).
  std::vector<LabeledEdge> big_edges;
  for (const WeakEdge& e : big.weak_edges()) {
    auto si = inside_pos.find(e.src);
    auto di = inside_pos.find(e.dst);
    if (si == inside_pos.end() || di == inside_pos.end()) continue;
    auto mapped = map_generator(e.gen);
    if (!mapped) continue;
    big_edges.push_back({si->second, di->second, *mapped, e.rc});
  }
  std::vector<LabeledEdge> small_edges;
  for (const WeakEdge& e : small.weak_edges()) small_edges.push_back({e.src, e.dst, e.gen, e.rc});

  if (big_edges.size() != small_edges.size()) {
    rep.message = "edge counts differ: " + std::to_string(big_edges.size()) + " vs " +
                  std::to_string(small_edges.size());
    return rep;
  }

  // Backtracking isomorphism, pinned by relative length and degrees.
  const int m = static_cast<int>(inside.size());
  int big_min = ba.orbit(inside[0]).dim;
  for (int v : inside) big_min = std::min(big_min, ba.orbit(v).dim);
  auto big_len = [&](int pos) { return ba.orbit(inside[pos]).dim - big_min; };
  int small_min = 0;
  for (int i = 0; i < sa.size(); ++i) small_min = std::min(small_min, sa.orbit(i).dim);
  auto small_len = [&](int v) { return sa.orbit(v).dim - small_min; };

  std::vector<std::multiset<std::pair<MonoidGenerator, RootCase>>> big_out(m), big_in(m), sm_out(m), sm_in(m);
  for (const auto& e : big_edges) {
    big_out[e.src].insert({e.gen, e.rc});
    big_in[e.dst].insert({e.gen, e.rc});
  }
  for (const auto& e : small_edges) {
    sm_out[e.src].insert({e.gen, e.rc});
    sm_in[e.dst].insert({e.gen, e.rc});
  }

  std::set<LabeledEdge> small_edge_set(small_edges.begin(), small_edges.end());
  std::vector<int> assign(m, -1);
  std::vector<bool> used(m, false);

  auto compatible = [&](int bpos, int sv) {
    return big_len(bpos) == small_len(sv) && big_out[bpos] == sm_out[sv] && big_in[bpos] == sm_in[sv];
  };
  // Order big nodes by scarcity of candidates for faster pruning.
  std::vector<int> border(m);
  for (int i = 0; i < m; ++i) border[i] = i;

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == border.size()) {
      for (const auto& e : big_edges)
        if (!small_edge_set.count({assign[e.src], assign[e.dst], e.gen, e.rc})) return false;
      return true;
    }
    int bpos = border[idx];
    for (int sv = 0; sv < m; ++sv) {
      if (used[sv] || !compatible(bpos, sv)) continue;
      // Partial consistency on edges touching already-assigned nodes.
      bool ok = true;
      for (const auto& e : big_edges) {
        if (e.src == bpos && assign[e.dst] >= 0 &&
            !small_edge_set.count({sv, assign[e.dst], e.gen, e.rc}))
          ok = false;
        if (e.dst == bpos && assign[e.src] >= 0 &&
            !small_edge_set.count({assign[e.src], sv, e.gen, e.rc}))
          ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      assign[bpos] = sv;
      used[sv] = true;
      if (rec(idx + 1)) return true;
      assign[bpos] = -1;
      used[sv] = false;
    }
    return false;
  };

  if (!rec(0)) {
    rep.message = "no label-preserving graph isomorphism exists";
    return rep;
  }
  rep.ok = true;
  rep.message = "isomorphic";
  for (int i = 0; i < m; ++i) rep.node_map.push_back({inside[i], assign[i]});
  return rep;
}

std::string generator_name(const MonoidGenerator& g) {
  return (g.side == Side::Right ? "a" : "k") + std::to_string(g.root + 1);
}

std::string export_dot(const OrbitGraph& graph, const ExportOptions& opt) {
  const Atlas& a = graph.atlas();
  std::ostringstream os;
  os << "digraph orbits {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  for (int i = 0; i < a.size(); ++i) {
    const OrbitRef& r = a.orbit(i);
    os << "  \"" << r.flag.str() << "\" [dim=" << r.dim << ", korbit=\"" << r.korbit.str()
       << "\"];\n";
  }
  for (const WeakEdge& e : graph.weak_edges()) {
    os << "  \"" << a.orbit(e.src).flag.str() << "\" -> \"" << a.orbit(e.dst).flag.str() << "\" [color="
       << (e.rc == RootCase::ComplexStable ? "blue" : "red")
       << ", style=" << (e.gen.side == Side::Right ? "solid" : "dashed") << ", label=\""
       << generator_name(e.gen) << "\"];\n";
  }
  if (opt.include_standard) {
    for (const StandardCover& c : graph.standard_covers())
      if (c.green)
        os << "  \"" << a.orbit(c.src).flag.str() << "\" -> \"" << a.orbit(c.dst).flag.str()
           << "\" [color=green, style=solid, arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const OrbitGraph& graph, const ExportOptions& opt) {
  const Atlas& a = graph.atlas();
  nlohmann::json j;
  j["family"] = std::string(1, family_char(a.ctx().family));
  j["n"] = a.ctx().n;
  j["nodes"] = nlohmann::json::array();
  for (int i = 0; i < a.size(); ++i) {
    const OrbitRef& r = a.orbit(i);
    j["nodes"].push_back({{"id", r.id},
                          {"flag", r.flag.str()},
                          {"dim", r.dim},
                          {"korbit", r.korbit.str()}});
  }
  j["weak_edges"] = nlohmann::json::array();
  for (const WeakEdge& e : graph.weak_edges())
    j["weak_edges"].push_back({{"src", e.src},
                               {"dst", e.dst},
                               {"side", to_string(e.gen.side)},
                               {"root", generator_name(e.gen)},
                               {"case", to_string(e.rc)}});
  if (opt.include_standard) {
    j["standard_covers"] = nlohmann::json::array();
    for (const StandardCover& c : graph.standard_covers()) {
      nlohmann::json w;
      w["base"] = c.witness.base;
      w["t"] = generator_name(c.witness.t);
      w["word"] = nlohmann::json::array();
      for (const auto& g : c.witness.word) w["word"].push_back(generator_name(g));
      j["standard_covers"].push_back(
          {{"src", c.src}, {"dst", c.dst}, {"green", c.green}, {"witness", w}});
    }
  }
  return j.dump(2);
}

} // namespace atlas
