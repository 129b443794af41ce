#pragma once

#include <set>

#include "atlas/engine.hpp"

namespace atlas {

/*
  Order structures on the orbit set.

  The weak order is reachability under the extended monoid action (left
  k-roots and right g-roots); its covering edges raise dimension by exactly
  one and carry the acting generator with its root case.  The standard
  order is generated by diamond relations: starting from a one-step pair
  (Q'', m(t)Q'') both members are pushed through further generators as long
  as both lengths rise strictly, and every pair so reached is comparable.
  The closure (Bruhat) order coincides with the standard order, so no
  geometric closures are ever computed.
*/

struct MonoidGenerator {
  Side side = Side::Right;
  int root = 0; // 0-based index into the simple roots of the side

  friend bool operator==(const MonoidGenerator& x, const MonoidGenerator& y) {
    return x.side == y.side && x.root == y.root;
  }
  friend bool operator<(const MonoidGenerator& x, const MonoidGenerator& y) {
    if (x.side != y.side) return x.side < y.side;
    return x.root < y.root;
  }
};

struct WeakEdge {
  int src = -1, dst = -1;
  MonoidGenerator gen;
  RootCase rc = RootCase::ComplexStable;
};

struct CoverWitness {
  int base = -1;                      // the orbit Q'' seeding the diamond
  MonoidGenerator t;                  // the raising generator
  std::vector<MonoidGenerator> word;  // the common word applied to both legs
};

struct StandardCover {
  int src = -1, dst = -1;
  bool green = false; // not in the transitive closure of the weak order
  CoverWitness witness;
};

class OrbitGraph {
public:
  explicit OrbitGraph(const Atlas& atlas);

  const Atlas& atlas() const { return *atlas_; }
  const std::vector<MonoidGenerator>& generators() const { return generators_; }
  const std::vector<WeakEdge>& weak_edges() const { return weak_edges_; }
  Atlas::Step action(int node, const MonoidGenerator& g) const;

  // Length function and weak-order minimal elements; verifies that the
  // minimal elements are exactly the zero dimensional orbits with the
  // expected census and representatives.
  void compute_lengths_minimal();
  int length(int node) const { return lengths_.at(node); }
  const std::vector<int>& minimal_nodes() const { return minimal_; }
  // Minimal elements when only the given generators act.
  std::vector<int> minimal_under(const std::vector<MonoidGenerator>& gens) const;

  void compute_standard_order();
  bool standard_le(int a, int b) const; // a <= b
  bool weak_le(int a, int b) const;
  const std::vector<StandardCover>& standard_covers() const { return covers_; }
  std::vector<StandardCover> green_covers() const;

  bool lengths_ready() const { return !lengths_.empty(); }
  bool standard_ready() const { return standard_done_; }

private:
  const Atlas* atlas_;
  std::vector<MonoidGenerator> generators_;
  std::vector<WeakEdge> weak_edges_;
  std::vector<std::vector<Atlas::Step>> action_; // [node][generator]
  std::vector<int> lengths_;
  std::vector<int> minimal_;
  std::set<std::pair<int, int>> weak_closure_;
  std::set<std::pair<int, int>> standard_closure_; // strict pairs
  std::vector<StandardCover> covers_;
  bool standard_done_ = false;
};

OrbitGraph build_weak_graph(const Atlas& atlas);

struct DualityReport {
  bool ok = false;
  std::string message;
  std::vector<std::pair<int, int>> node_map; // big inside-node -> small node
};

// Checks that the weak-order subgraph on the orbits inside the open
// K-orbit of `big`, restricted to the transfer-paired generators and
// relabeled (big left root <-> small right root; big right root in the
// compact window <-> small left root, shifted by one step in the
// orthogonal families), is isomorphic to the full weak graph of `small`
// as an edge-labeled digraph.
DualityReport op_duality_check(const OrbitGraph& big, const OrbitGraph& small);

// Generator names as used in exports: right roots a1, a2, ...; left roots
// k1, k2, ....
std::string generator_name(const MonoidGenerator& g);

struct ExportOptions {
  bool include_standard = false; // add green cover edges (DOT) / cover list (JSON)
};

std::string export_dot(const OrbitGraph& graph, const ExportOptions& opt = {});
std::string export_json(const OrbitGraph& graph, const ExportOptions& opt = {});

} // namespace atlas
