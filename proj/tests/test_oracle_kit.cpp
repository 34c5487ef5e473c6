#include <gtest/gtest.h>

#include "matchgame/oracle.hpp"

namespace matchgame {
namespace {

// a1=0 a2=1 a3=2 b1=3 b2=4 b3=5
constexpr int kN = 6;
const Bipartition kBp{3, 3};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kConfiguration;
}

ExtensionRule deliver(std::vector<Edge> edges, std::vector<Edge> non_edges = {}) {
  return [=](VertexSet) { return Extension{edges, {}, non_edges}; };
}

TEST(StructureGraph, CompletableAndPerfectMatching) {
  StructureGraph s(kN, kBp);
  EXPECT_TRUE(s.completable());
  s.non_edges.insert(Edge(0, 3));
  s.non_edges.insert(Edge(0, 4));
  s.non_edges.insert(Edge(1, 3));
  s.non_edges.insert(Edge(1, 4));
  EXPECT_FALSE(s.completable());
  StructureGraph general(4, std::nullopt);
  general.non_edges.insert(Edge(0, 1));
  general.non_edges.insert(Edge(0, 2));
  EXPECT_TRUE(general.completable());
  general.non_edges.insert(Edge(0, 3));
  EXPECT_FALSE(general.completable());
  StructureGraph odd(3, std::nullopt);
  EXPECT_FALSE(odd.completable());
}

TEST(StructureGraph, RespectsBipartition) {
  StructureGraph s(kN, kBp);
  s.edges.insert(Edge(0, 3));
  EXPECT_TRUE(s.respects_bipartition());
  s.non_edges.insert(Edge(0, 1));
  EXPECT_FALSE(s.respects_bipartition());
}

TEST(PlayerView, EdgesAndNonEdges) {
  PlayerHistory h;
  Matching m;
  m.add(Edge(0, 3));
  h.push_back({Query{1, VertexSet::of({0, 1, 3, 4})}, m});
  StructureGraph view = player_view(kN, kBp, h);
  EXPECT_TRUE(view.edges.contains(0, 3));
  EXPECT_EQ(view.edges.size(), 1);
  EXPECT_EQ(view.non_edges.to_vector(), (std::vector<Edge>{Edge(1, 4)}));
}

TEST(Dominates, SubsetOnBothParts) {
  StructureGraph h(kN, kBp), v(kN, kBp);
  h.edges.insert(Edge(0, 3));
  h.non_edges.insert(Edge(1, 4));
  v.edges.insert(Edge(0, 3));
  EXPECT_TRUE(dominates(h, v));
  v.non_edges.insert(Edge(2, 5));
  EXPECT_FALSE(dominates(h, v));
}

TEST(OpenPairs, SkipsDecidedPairs) {
  StructureGraph s(kN, kBp);
  s.edges.insert(Edge(0, 3));
  s.non_edges.insert(Edge(0, 4));
  EXPECT_EQ(open_pairs(s, VertexSet::of({0, 3, 4})), std::vector<Edge>{});
  EXPECT_EQ(open_pairs(s, VertexSet::of({0, 1, 5})), (std::vector<Edge>{Edge(0, 5), Edge(1, 5)}));
}

TEST(Consistency, DeliversAndClosesQuery) {
  OracleCommitState st(kN, kBp);
  Matching r = respond_with_consistency(st, VertexSet::of({0, 1, 3, 4}), deliver({Edge(0, 3)}));
  EXPECT_TRUE(r.contains(Edge(0, 3)));
  EXPECT_EQ(st.stream.size(), 1U);
  EXPECT_TRUE(st.structure.non_edges.contains(1, 4));
  // a delivered edge is found again by greedy before the rule runs
  VertexSet seen;
  Matching again = respond_with_consistency(st, VertexSet::of({0, 3, 2}), [&](VertexSet residual) {
    seen = residual;
    return Extension{};
  });
  EXPECT_TRUE(again.contains(Edge(0, 3)));
  EXPECT_EQ(seen, VertexSet::of({2}));
}

TEST(Consistency, RejectsBadExtensions) {
  auto fresh = [] { return OracleCommitState(kN, kBp); };
  VertexSet q = VertexSet::of({0, 1, 3, 4});
  auto fault_for = [&](const ExtensionRule& rule) {
    return kind_of([&] {
      OracleCommitState st = fresh();
      respond_with_consistency(st, q, rule);
    });
  };
  EXPECT_EQ(fault_for(deliver({Edge(0, 5)})), ErrorKind::kAdversaryFault);
  EXPECT_EQ(fault_for(deliver({Edge(0, 3), Edge(0, 4)})), ErrorKind::kAdversaryFault);
  EXPECT_EQ(fault_for(deliver({Edge(0, 1)})), ErrorKind::kAdversaryFault);
  EXPECT_EQ(fault_for(deliver({Edge(0, 3)}, {Edge(0, 3)})), ErrorKind::kAdversaryFault);
  // committed a2-b2 but left both endpoints unmatched
  EXPECT_EQ(fault_for([](VertexSet) { return Extension{{Edge(0, 3)}, {Edge(1, 4)}, {}}; }),
            ErrorKind::kAdversaryFault);
  // empty answer forbids all of {a1,a2} x {b1,b2}, then a3 alone cannot cover b1 and b2
  EXPECT_EQ(fault_for(deliver({})), ErrorKind::kAdversaryFault);
  EXPECT_EQ(kind_of([] {
              OracleCommitState st(kN, kBp);
              respond_with_consistency(st, VertexSet::of({7}), deliver({}));
            }),
            ErrorKind::kProtocol);
}

TEST(Consistency, IncompletableAllowedWhenNotRequired) {
  OracleCommitState st(kN, kBp);
  st.require_completable = false;
  Matching r = respond_with_consistency(st, VertexSet::of({0, 1, 3, 4}), deliver({}));
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(st.structure.non_edges.size(), 4);
}

TEST(PrematchCommitted, UsesUndeliveredEdgesOnly) {
  OracleCommitState st(kN, kBp);
  st.structure.edges.insert(Edge(0, 3));
  st.structure.edges.insert(Edge(1, 3));
  st.structure.edges.insert(Edge(1, 4));
  Matching m = prematch_committed(st, VertexSet::range(0, kN));
  EXPECT_EQ(std::vector<Edge>(m.edges().begin(), m.edges().end()), (std::vector<Edge>{Edge(0, 3), Edge(1, 4)}));
  st.stream.push_back(Edge(0, 3));
  m = prematch_committed(st, VertexSet::range(0, kN));
  EXPECT_EQ(std::vector<Edge>(m.edges().begin(), m.edges().end()), (std::vector<Edge>{Edge(1, 3)}));
}

// a1-b1, a2-b2 in the stream; one round queried everything.
Transcript good_transcript() {
  Transcript t;
  t.n = 4;
  t.naming = VertexNaming::kBipartite;
  t.bipartition = Bipartition{2, 2};
  t.final_stream = EdgeStream(4, std::vector<Edge>{Edge(0, 2), Edge(1, 3)});
  t.committed_edges = t.final_stream.edge_set();
  t.committed_non_edges = EdgeSet(4);
  t.declared_perfect_matching.add(Edge(0, 2));
  t.declared_perfect_matching.add(Edge(1, 3));
  Matching r;
  r.add(Edge(0, 2));
  t.rounds.push_back({Query{1, VertexSet::of({0, 2, 3})}, r});
  return t;
}

TEST(Verifier, AcceptsConsistentTranscript) {
  Verdict v = verify_streaming_consistency(good_transcript());
  EXPECT_TRUE(v.pass) << v.reason;
}

TEST(Verifier, RejectsInconsistencies) {
  {
    Transcript t = good_transcript();
    t.rounds[0].response = Matching();
    Verdict v = verify_streaming_consistency(t);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.round, 1);
  }
  {
    // stream order a2-b1 first: greedy no longer returns a1-b1
    Transcript t = good_transcript();
    t.final_stream = EdgeStream(4, std::vector<Edge>{Edge(1, 2), Edge(0, 2), Edge(1, 3)});
    t.committed_edges = t.final_stream.edge_set();
    t.rounds[0].query.vertices = VertexSet::range(0, 4);
    EXPECT_FALSE(verify_streaming_consistency(t).pass);
  }
  {
    Transcript t = good_transcript();
    t.committed_non_edges.insert(Edge(1, 3));
    EXPECT_FALSE(verify_streaming_consistency(t).pass);
  }
  {
    Transcript t = good_transcript();
    t.declared_perfect_matching = Matching();
    t.declared_perfect_matching.add(Edge(0, 2));
    EXPECT_FALSE(verify_streaming_consistency(t).pass);
    EXPECT_TRUE(verify_streaming_consistency(t, VerifyOptions{false}).pass);
  }
  {
    // b1 and b2 both queried and unmatched: their pair is same-side, fine; a2 unmatched with b2 is not
    Transcript t = good_transcript();
    t.rounds[0].query.vertices = VertexSet::of({1, 2, 3});
    t.rounds[0].response = Matching();
    t.rounds[0].response.add(Edge(1, 3));
    EXPECT_TRUE(verify_streaming_consistency(t).pass);
    t.rounds[0].query.vertices = VertexSet::of({1, 3});
    t.rounds[0].response = Matching();
    EXPECT_FALSE(verify_streaming_consistency(t).pass);
  }
  {
    Transcript t = good_transcript();
    t.committed_edges.insert(Edge(0, 3));
    Verdict v = verify_streaming_consistency(t);
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.round, 0);
  }
}

TEST(Verifier, UnmatchedQueriedPairsMustBeNonEdges) {
  Transcript t = good_transcript();
  t.final_stream = EdgeStream(4, std::vector<Edge>{Edge(0, 2)});
  t.committed_edges = t.final_stream.edge_set();
  t.declared_perfect_matching = Matching();
  t.rounds[0].query.vertices = VertexSet::of({1, 3});
  t.rounds[0].response = Matching();
  EXPECT_FALSE(verify_streaming_consistency(t, VerifyOptions{false}).pass);
  t.committed_non_edges.insert(Edge(1, 3));
  Verdict v = verify_streaming_consistency(t, VerifyOptions{false});
  EXPECT_TRUE(v.pass) << v.reason;
}

}  // namespace
}  // namespace matchgame
