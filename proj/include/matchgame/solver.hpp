#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matchgame/engine.hpp"

namespace matchgame {

inline constexpr int kDefaultSolverCapacity = 20;

/// MATCHGAME_MAX_N if set to a positive integer, else the default.
int solver_capacity();

using LeafCallback = std::function<void(const Oracle& oracle, const PlayerHistory& history)>;

struct SolveOptions {
  /// 0 means solver_capacity().
  int max_n = 0;
  int threads = 1;
  /// Use the oracle's round-1 representatives when it offers them.
  bool canonicalize = true;
  /// Invoked at every leaf; must be thread-safe when threads > 1.
  LeafCallback on_leaf;
  /// Invoked after every answered round, leaves included; same threading rule.
  LeafCallback on_node;
};

struct SolveReport {
  int n = 0;
  int rounds = 0;
  int best_value = 0;
  Ratio best_ratio;
  /// Queries of an optimal strategy along the line the oracle actually plays.
  std::vector<VertexSet> witness;
  std::uint64_t nodes_expanded = 0;
  std::string canonicalization;
};

/// Round-1 candidate queries: the oracle's representatives, or all subsets.
std::vector<VertexSet> round1_candidates(const Oracle& oracle, bool canonicalize);
/// Independent sets of the learned-edge graph, the only queries that differ
/// after pre-matching.
std::vector<VertexSet> independent_sets(int n, std::span<const Edge> known);

/// Best final matching size any adaptive player reaches in `rounds` rounds.
/// Throws kSizeLimit above capacity. The witness is replayed through the
/// engine before returning.
SolveReport minimax_value(const OracleFactory& factory, int rounds, const SolveOptions& options = {});

struct RoundRequirement {
  int c = 0;
  int rounds = 0;
  /// best value for 1, 2, ... rounds
  std::vector<int> values;
};

/// Fewest rounds after which some player always recovers the whole perfect
/// matching of one semi-complete gadget with half-size c.
RoundRequirement perfect_matching_round_requirement(int c, const SolveOptions& options = {});

struct ProbeReport {
  int best_value = 0;
  std::vector<VertexSet> witness;
  int games = 0;
};

using GameCallback = std::function<void(const Oracle& oracle, const PlayerHistory& history)>;

/// Non-exhaustive search for strong strategies: greedy lookahead on
/// immediate gain, seeded random games, and random prefixes finished
/// greedily.
ProbeReport probe_value(const OracleFactory& factory, int rounds, int samples, std::uint64_t seed,
                        const GameCallback& on_game = {});

std::string solve_report_to_json(const SolveReport& report, VertexNaming naming, int indent = 2);

}  // namespace matchgame
