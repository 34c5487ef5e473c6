#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "matchgame/adversaries.hpp"
#include "matchgame/players.hpp"
#include "support.hpp"

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

// a1=0 a2=1 b1=2 b2=3; path a1-b1-a2-b2 with the middle edge first.
TEST(ThreeRoundMatch, PathTrace) {
  Graph g(4, Bipartition{2, 2});
  std::vector<Edge> stream{Edge(1, 2), Edge(0, 2), Edge(1, 3)};
  for (Edge e : stream) g.add_edge(e);
  HonestGraphOracle oracle(g, stream);
  ThreeRoundMatchPlayer p;
  GameOutcome out = run_game(p, oracle, 3);
  const auto& rounds = out.transcript.rounds;
  ASSERT_EQ(rounds.size(), 3U);
  EXPECT_EQ(rounds[0].query.vertices, VertexSet::range(0, 4));
  EXPECT_TRUE(rounds[0].response.contains(Edge(1, 2)));
  EXPECT_EQ(rounds[1].query.vertices, VertexSet::of({1, 3}));
  EXPECT_TRUE(rounds[1].response.contains(Edge(1, 3)));
  EXPECT_EQ(rounds[2].query.vertices, VertexSet::of({0, 2}));
  EXPECT_TRUE(rounds[2].response.contains(Edge(0, 2)));
  EXPECT_EQ(out.result.player_matching.size(), 2);
}

TEST(ThreeRoundMatch, GreedyAlreadyMaximum) {
  Graph g(6, Bipartition{3, 3});
  std::vector<Edge> stream{Edge(0, 3), Edge(1, 4), Edge(2, 5), Edge(0, 4)};
  for (Edge e : stream) g.add_edge(e);
  HonestGraphOracle oracle(g, stream);
  ThreeRoundMatchPlayer p;
  EXPECT_EQ(run_game(p, oracle, 3).result.ratio, Ratio(1, 1));
}

TEST(ThreeRoundMatch, AgainstThreeRoundAdversary) {
  auto oracle = make_oracle({"three-round", 10, 0, 0});
  ThreeRoundMatchPlayer p;
  GameOutcome g = run_game(p, *oracle, 3);
  EXPECT_EQ(g.result.ratio, Ratio(3, 5));
}

TEST(ThreeRoundMatch, NeedsBipartiteGame) {
  auto oracle = make_oracle({"bomb", 6, 0, 0});
  ThreeRoundMatchPlayer p;
  EXPECT_EQ(kind_of([&] { run_game(p, *oracle, 1); }), ErrorKind::kWrongGraphClass);
}

TEST(ThreeRoundMatch, SmallFuzzMeetsGuarantee) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 6);
    auto inst = testing_support::random_bipartite(rng, a, a, 0.35);
    const int opt = testing_support::brute_max_matching(2 * a, inst.stream);
    HonestGraphOracle oracle(inst.graph, inst.stream);
    ThreeRoundMatchPlayer p;
    int got = run_game(p, oracle, 3).result.player_matching.size();
    EXPECT_GE(5 * got, 3 * opt);
  }
}

TEST(RandomPlayer, DependsOnSeedAndRoundOnly) {
  GameContext ctx{12, std::nullopt, VertexNaming::kIndex, 3, 2};
  RandomPlayer a(9, 0.5), b(9, 0.5), c(10, 0.5);
  PlayerHistory h;
  EXPECT_EQ(a.next_query(ctx, h), b.next_query(ctx, h));
  h.push_back({Query{1, VertexSet::of({1})}, Matching()});
  EXPECT_EQ(a.next_query(ctx, h), b.next_query(ctx, {}));
  std::vector<VertexSet> qs, rs;
  for (int r = 1; r <= 8; ++r) {
    ctx.round = r;
    qs.push_back(a.next_query(ctx, h));
    rs.push_back(c.next_query(ctx, h));
  }
  EXPECT_NE(qs, rs);
  EXPECT_EQ(kind_of([] { RandomPlayer(1, 1.5); }), ErrorKind::kConfiguration);
  RandomPlayer none(1, 0.0), all(1, 1.0);
  EXPECT_TRUE(none.next_query(ctx, h).empty());
  EXPECT_EQ(all.next_query(ctx, h), VertexSet::range(0, 12));
}

TEST(ScriptedPlayer, ReplaysThenStops) {
  ScriptedPlayer p({VertexSet::of({1, 2})});
  GameContext ctx{4, std::nullopt, VertexNaming::kIndex, 2, 1};
  PlayerHistory h;
  EXPECT_EQ(p.next_query(ctx, h), VertexSet::of({1, 2}));
  h.push_back({Query{1, VertexSet::of({1, 2})}, Matching()});
  EXPECT_TRUE(p.next_query(ctx, h).empty());
}

TEST(ParseQuery, NamesAndErrors) {
  EXPECT_EQ(parse_query("a1  b2\t a3", 6, VertexNaming::kBipartite), VertexSet::of({0, 4, 2}));
  EXPECT_TRUE(parse_query("", 6, VertexNaming::kBipartite).empty());
  EXPECT_EQ(parse_query("u1 v3", 6, VertexNaming::kBomb), VertexSet::of({0, 5}));
  EXPECT_EQ(kind_of([] { parse_query("a1 b9", 6, VertexNaming::kBipartite); }), ErrorKind::kFormat);
}

TEST(InteractivePlayer, RepromptsAndAborts) {
  std::istringstream in("a1 zz\na1 b1\n");
  std::ostringstream out;
  InteractivePlayer p(in, out);
  auto oracle = make_oracle({"two-round", 8, 0, 0});
  Game game(*oracle, 2);
  VertexSet q = p.next_query(game.context(), game.history());
  EXPECT_EQ(q, VertexSet::of({0, 4}));
  std::string text = out.str();
  EXPECT_NE(text.find("round 1 of 2"), std::string::npos);
  EXPECT_NE(text.find("unknown vertex 'zz', try again"), std::string::npos);
  game.play(q);
  EXPECT_EQ(kind_of([&] { p.next_query(game.context(), game.history()); }), ErrorKind::kAborted);
}

TEST(RenderView, ShowsLearnedEdgesAndNonEdges) {
  GameContext ctx{4, Bipartition{2, 2}, VertexNaming::kBipartite, 2, 2};
  PlayerHistory h;
  Matching m;
  m.add(Edge(0, 2));
  h.push_back({Query{1, VertexSet::of({0, 1, 2, 3})}, m});
  std::string view = render_view(ctx, h);
  EXPECT_NE(view.find("learned edges: a1-b1"), std::string::npos);
  EXPECT_NE(view.find("known non-edges: a2-b2"), std::string::npos);
}

}  // namespace
}  // namespace matchgame
