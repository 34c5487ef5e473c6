#pragma once

#include <string>
#include <vector>

#include "matchgame/oracle.hpp"

namespace matchgame::fixtures {

// Bipartite structure graph on a1..ah, b1..bh from name lists.
inline StructureGraph structure(int n, const std::vector<std::string>& edges,
                                const std::vector<std::string>& non_edges) {
  StructureGraph s(n, Bipartition{n / 2, n / 2});
  auto pair = [n](const std::string& name) {
    auto dash = name.find('-');
    return Edge(parse_vertex(name.substr(0, dash), n, VertexNaming::kBipartite),
                parse_vertex(name.substr(dash + 1), n, VertexNaming::kBipartite));
  };
  for (const std::string& e : edges) s.edges.insert(pair(e));
  for (const std::string& e : non_edges) s.non_edges.insert(pair(e));
  return s;
}

// Round-1 structure: the in-vertices a_i b_i matched, every out x out pair forbidden.
inline StructureGraph after_first_round(int n, int in) {
  StructureGraph s(n, Bipartition{n / 2, n / 2});
  const int half = n / 2;
  for (int i = 0; i < in; ++i) s.edges.insert(Edge(i, half + i));
  for (int a = in; a < half; ++a) {
    for (int b = in; b < half; ++b) s.non_edges.insert(Edge(a, half + b));
  }
  return s;
}

inline StructureGraph first_round_sixteen() { return after_first_round(16, 4); }
inline StructureGraph first_round_ten() { return after_first_round(10, 3); }

inline StructureGraph second_round() {
  StructureGraph s = first_round_ten();
  StructureGraph extra = structure(10, {"a1-b5", "a2-b3"}, {"a2-b4", "a3-b4"});
  s.edges |= extra.edges;
  s.non_edges |= extra.non_edges;
  return s;
}

// The three ways the third round can end on the ten-vertex gadget.
inline std::vector<StructureGraph> third_round_variants() {
  std::vector<StructureGraph> out;
  for (auto [e, f] : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"a4-b2", "a5-b3"}, {}},
           {{"a1-b2"}, {"a4-b3", "a5-b3"}},
           {{"a3-b2"}, {"a4-b1", "a5-b1"}}}) {
    StructureGraph s = second_round();
    StructureGraph extra = structure(10, e, f);
    s.edges |= extra.edges;
    s.non_edges |= extra.non_edges;
    out.push_back(s);
  }
  return out;
}

}  // namespace matchgame::fixtures
