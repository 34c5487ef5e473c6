#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matchgame/graph.hpp"
#include "matchgame/transcript.hpp"

namespace matchgame {

/// Committed edges E and committed non-edges F over n vertices. With a
/// bipartition every pair must cross sides; without one F is an arbitrary
/// set of non-edges.
struct StructureGraph {
  int n = 0;
  std::optional<Bipartition> bipartition;
  EdgeSet edges;
  EdgeSet non_edges;

  StructureGraph() = default;
  StructureGraph(int n, std::optional<Bipartition> bipartition);

  /// Pairs a query could ever match: cross pairs, or all pairs.
  bool is_pair(Edge e) const { return !bipartition || bipartition->crosses(e); }
  bool disjoint() const { return !edges.intersects(non_edges); }
  bool respects_bipartition() const;
  /// Some perfect matching avoids F.
  bool completable() const;
  std::optional<Matching> perfect_matching() const;

  friend bool operator==(const StructureGraph&, const StructureGraph&) = default;
};

/// True iff h.E contains view.E and h.F contains view.F.
bool dominates(const StructureGraph& h, const StructureGraph& view);

/// What the player can deduce from its history: every response edge is an
/// edge, every pair of queried vertices left unmatched is a non-edge.
StructureGraph player_view(int n, const std::optional<Bipartition>& bipartition,
                           const PlayerHistory& history);

struct OracleCommitState {
  StructureGraph structure;
  /// Edges already handed to the player, in delivery order.
  EdgeStream stream;
  /// label_map[canonical] = actual vertex.
  std::vector<int> label_map;
  /// Oracles for arbitrary input graphs do not promise a perfect matching.
  bool require_completable = true;

  OracleCommitState() = default;
  OracleCommitState(int n, std::optional<Bipartition> bipartition);
};

/// Output of an adversary's extension rule on the residual query.
struct Extension {
  std::vector<Edge> delivered;
  /// Committed as edges without being returned.
  std::vector<Edge> committed;
  std::vector<Edge> non_edges;
};

using ExtensionRule = std::function<Extension(VertexSet residual)>;

/// Re-matches delivered edges greedily inside `query`, asks `rule` to extend
/// on what is left, validates and commits the extension, appends the new
/// edges to the stream and marks every still-unmatched queried pair as a
/// non-edge. Throws kAdversaryFault if the extension is not a matching inside
/// the residual, clashes with committed pairs, leaves a committed edge
/// unmatched, or makes the structure uncompletable.
Matching respond_with_consistency(OracleCommitState& state, VertexSet query, const ExtensionRule& rule);

/// Committed but undelivered edges inside `residual`, picked greedily in
/// lexicographic order. Adversaries deliver these before their own rule.
Matching prematch_committed(const OracleCommitState& state, VertexSet residual);

/// Pairs of `vertices` that are neither edges nor non-edges yet.
std::vector<Edge> open_pairs(const StructureGraph& s, VertexSet vertices);

class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual std::unique_ptr<Oracle> clone() const = 0;
  virtual std::string name() const = 0;
  virtual int n() const = 0;
  virtual std::optional<Bipartition> bipartition() const = 0;
  virtual VertexNaming naming() const = 0;
  /// Rounds the construction is defined for; 0 means unlimited.
  virtual int round_budget() const { return 0; }

  /// Answers a query. The engine passes queries with no delivered edge inside.
  virtual Matching respond(int round, VertexSet query) = 0;

  virtual StructureGraph structure() const = 0;
  virtual EdgeStream delivered() const = 0;
  virtual Matching declared_perfect_matching() const = 0;
  /// Delivered edges, then the undelivered committed edges, then the
  /// remaining edges of the declared perfect matching.
  virtual EdgeStream final_stream() const;

  /// One query per class of round-1 queries the oracle cannot tell apart,
  /// if the oracle knows its own symmetry.
  virtual std::optional<std::vector<VertexSet>> round1_representatives() const { return std::nullopt; }

 protected:
  /// Order of the undelivered committed edges in the final stream.
  virtual std::vector<Edge> tail_order(std::vector<Edge> undelivered) const { return undelivered; }
};

using OracleFactory = std::function<std::unique_ptr<Oracle>()>;

/// Oracle whose state is a single OracleCommitState and whose answers come
/// from respond_with_consistency.
class CommitOracle : public Oracle {
 public:
  CommitOracle(int n, std::optional<Bipartition> bipartition) : state_(n, bipartition) {}

  int n() const override { return state_.structure.n; }
  std::optional<Bipartition> bipartition() const override { return state_.structure.bipartition; }
  Matching respond(int round, VertexSet query) override;
  StructureGraph structure() const override { return state_.structure; }
  EdgeStream delivered() const override { return state_.stream; }
  Matching declared_perfect_matching() const override;
  const OracleCommitState& state() const { return state_; }

 protected:
  virtual Extension extend(int round, VertexSet residual) = 0;

  OracleCommitState state_;
};

struct VerifyOptions {
  /// Off for oracles built on arbitrary graphs.
  bool require_perfect_matching = true;
};

struct Verdict {
  bool pass = true;
  /// Offending round (1-based), 0 for whole-transcript problems.
  int round = 0;
  std::string reason;
};

/// Replays every round against the final stream and checks the committed
/// graph. Reports the first failure.
Verdict verify_streaming_consistency(const Transcript& t, const VerifyOptions& options = {});

}  // namespace matchgame
