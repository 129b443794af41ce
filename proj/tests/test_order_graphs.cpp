#include "atlas/graphs.hpp"
#include "doctest.h"

#include "json.hpp"

using namespace atlas;

namespace {

StandardFlag parse_a3(const std::string& str, Atlas& atlas) {
  for (const auto& orbit : atlas.orbits())
    if (orbit.flag.str() == str) return orbit.flag;
  throw DomainError("no such flag " + str);
}

} // namespace

TEST_CASE("weak graphs of the reference sizes") {
  Atlas a3(Family::A, 3);
  OrbitGraph g3(a3);
  CHECK(a3.size() == 13);
  g3.compute_lengths_minimal();
  CHECK(g3.minimal_nodes().size() == 3);

  Atlas d4(Family::D, 4);
  OrbitGraph gd(d4);
  CHECK(d4.size() == 5);
  gd.compute_lengths_minimal();
  CHECK(gd.minimal_nodes().size() == 1);

  Atlas b3(Family::B, 3);
  OrbitGraph gb(b3);
  CHECK(b3.size() == 3);
  gb.compute_lengths_minimal();
  CHECK(gb.minimal_nodes().size() == 2);
}

TEST_CASE("standard order and green pairs in gl(3)") {
  Atlas atlas(Family::A, 3);
  OrbitGraph graph(atlas);
  graph.compute_standard_order();

  int src = atlas.id_of_flag(parse_a3("(e2<e1<e3)", atlas));
  int dst = atlas.id_of_flag(parse_a3("(h2<e1<e3)", atlas));
  CHECK(graph.standard_le(src, dst));
  CHECK(!graph.weak_le(src, dst));
  bool found_green = false;
  for (const auto& c : graph.green_covers())
    if (c.src == src && c.dst == dst) found_green = true;
  CHECK(found_green);

  // Every weak edge is a standard cover.
  for (const WeakEdge& e : graph.weak_edges()) CHECK(graph.standard_le(e.src, e.dst));
}

TEST_CASE("standard order is compatible with the monoid action") {
  // Comparable pairs of equal length coincide, and the monoid action
  // preserves comparability.
  for (auto [fam, n] :
       std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}, {Family::B, 5}}) {
    Atlas atlas(fam, n);
    OrbitGraph graph(atlas);
    graph.compute_standard_order();
    for (int a = 0; a < atlas.size(); ++a)
      for (int b = 0; b < atlas.size(); ++b) {
        if (!graph.standard_le(a, b)) continue;
        if (graph.length(a) >= graph.length(b)) CHECK(a == b);
        for (const auto& gen : graph.generators())
          CHECK(graph.standard_le(graph.action(a, gen).dst, graph.action(b, gen).dst));
      }
  }
}

TEST_CASE("op duality so(4) -> so(3)") {
  Atlas big(Family::D, 4), small(Family::B, 3);
  OrbitGraph gb(big), gs(small);
  DualityReport rep = op_duality_check(gb, gs);
  CHECK(rep.ok);
  CHECK(rep.node_map.size() == 3);
}

TEST_CASE("dot export carries the reference edge") {
  Atlas atlas(Family::A, 3);
  OrbitGraph graph(atlas);
  std::string dot = export_dot(graph);
  CHECK(dot.find("\"(e1<e2<e3)\" -> \"(e1<h2<e3)\" [color=red, style=solid, label=\"a2\"]") !=
        std::string::npos);
}

TEST_CASE("json export parses and matches the node census") {
  Atlas atlas(Family::D, 4);
  OrbitGraph graph(atlas);
  graph.compute_standard_order();
  ExportOptions opt;
  opt.include_standard = true;
  nlohmann::json j = nlohmann::json::parse(export_json(graph, opt));
  CHECK(j["nodes"].size() == 5);
  CHECK(j.contains("weak_edges"));
  CHECK(j.contains("standard_covers"));
  // Determinism.
  CHECK(export_json(graph, opt) == export_json(graph, opt));
}
