#include <gtest/gtest.h>

#include "matchgame/adversaries.hpp"
#include "matchgame/engine.hpp"
#include "matchgame/players.hpp"
#include "matchgame/transcript.hpp"

namespace matchgame {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kConfiguration;
}

TEST(VertexNames, RoundTrip) {
  for (VertexNaming naming : {VertexNaming::kBipartite, VertexNaming::kBomb, VertexNaming::kIndex}) {
    for (int v = 0; v < 12; ++v) EXPECT_EQ(parse_vertex(vertex_name(v, 12, naming), 12, naming), v);
  }
  EXPECT_EQ(vertex_name(0, 10, VertexNaming::kBipartite), "a1");
  EXPECT_EQ(vertex_name(9, 10, VertexNaming::kBipartite), "b5");
  EXPECT_EQ(vertex_name(6, 12, VertexNaming::kBomb), "v1");
  EXPECT_EQ(edge_name(Edge(1, 7), 10, VertexNaming::kBipartite), "a2-b3");
}

TEST(VertexNames, RejectsUnknownTokens) {
  for (const char* token : {"", "a0", "a6", "c1", "b", "ax", "u1"}) {
    EXPECT_EQ(kind_of([&] { parse_vertex(token, 10, VertexNaming::kBipartite); }), ErrorKind::kFormat) << token;
  }
  EXPECT_EQ(kind_of([] { parse_vertex("12", 12, VertexNaming::kIndex); }), ErrorKind::kFormat);
}

TEST(Format, EmptyListsPrintNone) {
  EXPECT_EQ(format_vertices(VertexSet(), 4, VertexNaming::kBipartite), "(none)");
  EXPECT_EQ(format_edges({}, 4, VertexNaming::kBipartite), "(none)");
}

Transcript sample(const std::string& kind, int n, int rounds, Player& player) {
  auto oracle = make_oracle({kind, n, 0, 0});
  return run_game(player, *oracle, rounds).transcript;
}

TEST(TranscriptJson, RoundTripsGames) {
  ThreeRoundMatchPlayer three;
  RandomPlayer random(3, 0.6);
  std::vector<Transcript> ts{sample("three-round", 10, 3, three), sample("two-round", 8, 2, random),
                             sample("bomb", 12, 2, random)};
  for (const Transcript& t : ts) {
    std::string text = transcript_to_json(t);
    EXPECT_EQ(transcript_from_json(text), t);
    EXPECT_EQ(transcript_to_json(transcript_from_json(text)), text);
  }
}

TEST(TranscriptJson, InfersNamingAndCommittedEdges) {
  const char* text = R"({"n": 4, "bipartition": [2, 2],
    "rounds": [{"query": ["a1", "b1"], "response": [["a1", "b1"]]}],
    "stream": [["a1", "b1"], ["a2", "b2"]], "non_edges": [], "perfect_matching": [["a1", "b1"], ["a2", "b2"]]})";
  Transcript t = transcript_from_json(text);
  EXPECT_EQ(t.naming, VertexNaming::kBipartite);
  EXPECT_EQ(t.committed_edges.size(), 2);
  ASSERT_EQ(t.rounds.size(), 1U);
  EXPECT_EQ(t.rounds[0].query.round, 1);
  EXPECT_TRUE(t.rounds[0].response.contains(Edge(0, 2)));
}

TEST(TranscriptJson, IntegerVerticesUseIndexNaming) {
  const char* text = R"({"n": 3, "bipartition": null, "rounds": [],
    "stream": [[0, 2]], "non_edges": [[0, 1]], "perfect_matching": []})";
  Transcript t = transcript_from_json(text);
  EXPECT_EQ(t.naming, VertexNaming::kIndex);
  EXPECT_TRUE(t.committed_non_edges.contains(0, 1));
}

TEST(TranscriptJson, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"n": 4})",
      R"({"n": 4, "bipartition": [2, 1], "rounds": [], "stream": [], "non_edges": [], "perfect_matching": []})",
      R"({"n": 4, "bipartition": [2, 2], "rounds": [], "stream": [["a1", "b1"], ["b1", "a1"]],
          "non_edges": [], "perfect_matching": []})",
      R"({"n": 4, "bipartition": [2, 2], "rounds": [{"query": ["a9"], "response": []}], "stream": [],
          "non_edges": [], "perfect_matching": []})",
      R"({"n": 4, "bipartition": [2, 2], "rounds": [], "stream": [],
          "non_edges": [], "perfect_matching": [["a1", "b1"], ["a1", "b2"]]})",
      R"({"n": "four", "bipartition": null, "rounds": [], "stream": [], "non_edges": [], "perfect_matching": []})",
  };
  for (const char* text : bad) {
    EXPECT_EQ(kind_of([&] { transcript_from_json(text); }), ErrorKind::kFormat) << text;
  }
}

}  // namespace
}  // namespace matchgame
