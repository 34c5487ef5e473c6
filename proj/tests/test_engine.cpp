#include <gtest/gtest.h>

#include "matchgame/adversaries.hpp"
#include "matchgame/engine.hpp"
#include "matchgame/players.hpp"

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

// Answers every query with a fixed matching, whatever was asked.
class StubbornOracle : public Oracle {
 public:
  explicit StubbornOracle(Matching answer) : answer_(std::move(answer)) {}
  std::unique_ptr<Oracle> clone() const override { return std::make_unique<StubbornOracle>(*this); }
  std::string name() const override { return "stubborn"; }
  int n() const override { return 4; }
  std::optional<Bipartition> bipartition() const override { return Bipartition{2, 2}; }
  VertexNaming naming() const override { return VertexNaming::kBipartite; }
  Matching respond(int, VertexSet) override { return answer_; }
  StructureGraph structure() const override { return StructureGraph(4, Bipartition{2, 2}); }
  EdgeStream delivered() const override { return EdgeStream(4); }
  Matching declared_perfect_matching() const override { return {}; }

 private:
  Matching answer_;
};

TEST(NormalizeQuery, PrematchesKnownEdgesInOrder) {
  std::vector<Edge> known{Edge(1, 2), Edge(0, 2), Edge(1, 3)};
  NormalizedQuery nq = normalize_query(VertexSet::range(0, 5), known, 5);
  EXPECT_EQ(nq.prematched.size(), 1);
  EXPECT_TRUE(nq.prematched.contains(Edge(1, 2)));
  EXPECT_EQ(nq.reduced, VertexSet::of({0, 3, 4}));
  NormalizedQuery partial = normalize_query(VertexSet::of({0, 2, 3}), known, 5);
  EXPECT_TRUE(partial.prematched.contains(Edge(0, 2)));
  EXPECT_EQ(partial.reduced, VertexSet::of({3}));
}

TEST(Game, ProtocolErrors) {
  auto oracle = make_oracle({"two-round", 8, 0, 0});
  Game game(*oracle, 1);
  EXPECT_EQ(kind_of([&] { game.play(VertexSet::of({8})); }), ErrorKind::kProtocol);
  game.play(VertexSet::range(0, 8));
  EXPECT_TRUE(game.finished());
  EXPECT_EQ(kind_of([&] { game.play(VertexSet()); }), ErrorKind::kProtocol);
  EXPECT_EQ(kind_of([&] { Game(*oracle, -1); }), ErrorKind::kConfiguration);
}

TEST(Game, RejectsAnswersOutsideTheQuery) {
  Matching m;
  m.add(Edge(0, 2));
  StubbornOracle oracle(m);
  Game game(oracle, 2);
  EXPECT_EQ(kind_of([&] { game.play(VertexSet::of({1, 3})); }), ErrorKind::kOracleFault);
  Matching same_side;
  same_side.add(Edge(0, 1));
  StubbornOracle bad(same_side);
  Game other(bad, 1);
  EXPECT_EQ(kind_of([&] { other.play(VertexSet::range(0, 4)); }), ErrorKind::kOracleFault);
}

TEST(Game, RepeatedQueryReturnsSameAnswer) {
  auto oracle = make_oracle({"three-round", 10, 0, 0});
  Game game(*oracle, 3);
  Matching first = game.play(VertexSet::range(0, 10));
  Matching second = game.play(VertexSet::range(0, 10));
  EXPECT_EQ(first, second);
}

TEST(Game, HonestOracleAnswersAreGreedy) {
  // a1-b1-a2-b2 path, middle edge first in the stream
  Graph g(4, Bipartition{2, 2});
  std::vector<Edge> stream{Edge(1, 2), Edge(0, 2), Edge(1, 3)};
  for (Edge e : stream) g.add_edge(e);
  HonestGraphOracle oracle(g, stream);
  ScriptedPlayer player({VertexSet::range(0, 4), VertexSet::of({0, 3})});
  GameOutcome out = run_game(player, oracle, 2);
  EXPECT_EQ(out.transcript.rounds[0].response.size(), 1);
  EXPECT_TRUE(out.transcript.rounds[0].response.contains(Edge(1, 2)));
  EXPECT_TRUE(out.transcript.rounds[1].response.empty());
  EXPECT_EQ(out.result.player_matching.size(), 1);
  EXPECT_EQ(out.result.opt, 2);
  ScriptedPlayer better({VertexSet::range(0, 4), VertexSet::of({0, 2, 3}), VertexSet::of({1, 3})});
  HonestGraphOracle fresh(g, stream);
  EXPECT_EQ(run_game(better, fresh, 3).result.player_matching.size(), 2);
}

TEST(Score, MaximumOverUnionOfResponses) {
  PlayerHistory h;
  Matching r1, r2;
  r1.add(Edge(1, 2));
  r2.add(Edge(0, 2));
  r2.add(Edge(1, 3));
  h.push_back({Query{1, VertexSet::range(0, 4)}, r1});
  h.push_back({Query{2, VertexSet::range(0, 4)}, r2});
  GameResult r = score(4, Bipartition{2, 2}, h);
  EXPECT_EQ(r.player_matching.size(), 2);
  EXPECT_EQ(r.ratio, Ratio(1, 1));
}

TEST(RunGame, ZeroRounds) {
  auto oracle = make_oracle({"bomb", 12, 0, 0});
  GreedyOncePlayer p;
  GameOutcome out = run_game(p, *oracle, 0);
  EXPECT_TRUE(out.transcript.rounds.empty());
  EXPECT_EQ(out.result.ratio, Ratio(0, 1));
  EXPECT_TRUE(verify_streaming_consistency(out.transcript).pass);
}

TEST(RunGame, DeterministicReplay) {
  for (const char* kind : {"two-round", "three-round", "bomb"}) {
    const int n = std::string(kind) == "two-round" ? 16 : (std::string(kind) == "bomb" ? 12 : 10);
    RandomPlayer a(42, 0.55), b(42, 0.55);
    auto o1 = make_oracle({kind, n, 0, 0});
    auto o2 = make_oracle({kind, n, 0, 0});
    EXPECT_EQ(run_game(a, *o1, 3).transcript, run_game(b, *o2, 3).transcript) << kind;
  }
}

}  // namespace
}  // namespace matchgame
