#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchgame/graph.hpp"

namespace matchgame {

/// How vertices are printed: "a1".."b1" for bipartite games, "u1".."v1"
/// for bomb graphs, plain indices otherwise.
enum class VertexNaming { kBipartite, kBomb, kIndex };

std::string vertex_name(int v, int n, VertexNaming naming);
/// Throws kFormat on tokens that do not name a vertex of the game.
int parse_vertex(std::string_view token, int n, VertexNaming naming);
std::string edge_name(Edge e, int n, VertexNaming naming);
std::string format_vertices(VertexSet s, int n, VertexNaming naming);
std::string format_edges(std::span<const Edge> edges, int n, VertexNaming naming);

struct Query {
  int round = 0;
  VertexSet vertices;

  friend bool operator==(const Query&, const Query&) = default;
};

struct RoundRecord {
  Query query;
  Matching response;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

using PlayerHistory = std::vector<RoundRecord>;

struct Transcript {
  int n = 0;
  VertexNaming naming = VertexNaming::kIndex;
  std::optional<Bipartition> bipartition;
  std::string oracle;
  std::vector<RoundRecord> rounds;
  EdgeStream final_stream;
  EdgeSet committed_edges;
  EdgeSet committed_non_edges;
  Matching declared_perfect_matching;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct GameResult {
  Matching player_matching;
  int opt = 0;
  Ratio ratio;
};

/// JSON layout:
///   {"n", "naming", "bipartition", "oracle",
///    "rounds": [{"query": [names], "response": [[u, v], ...]}],
///    "stream", "committed_edges", "non_edges", "perfect_matching"}
std::string transcript_to_json(const Transcript& t, int indent = 2);
/// Throws kFormat on syntax or schema errors.
Transcript transcript_from_json(std::string_view text);

}  // namespace matchgame
