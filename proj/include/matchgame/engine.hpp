#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matchgame/oracle.hpp"
#include "matchgame/transcript.hpp"

namespace matchgame {

struct GameContext {
  int n = 0;
  std::optional<Bipartition> bipartition;
  VertexNaming naming = VertexNaming::kIndex;
  int rounds = 0;
  /// 1-based round the player is choosing a query for.
  int round = 1;
};

class Player {
 public:
  virtual ~Player() = default;
  virtual std::string name() const = 0;
  virtual VertexSet next_query(const GameContext& ctx, const PlayerHistory& history) = 0;
};

struct NormalizedQuery {
  VertexSet reduced;
  Matching prematched;
};

/// Greedily pre-matches known edges lying inside `q` (in the order given)
/// and drops their endpoints from the query.
NormalizedQuery normalize_query(VertexSet q, std::span<const Edge> known, int n);

/// One game in progress. Queries go through normalize_query; the oracle only
/// sees the reduced query and the pre-matched edges are added back.
class Game {
 public:
  Game(Oracle& oracle, int rounds);

  const GameContext& context() const { return ctx_; }
  bool finished() const { return static_cast<int>(history_.size()) >= ctx_.rounds; }
  const PlayerHistory& history() const { return history_; }
  /// Learned edges in learning order.
  std::span<const Edge> known() const { return known_; }

  /// Throws kProtocol on out-of-range vertices or when the game is over,
  /// kOracleFault on an invalid oracle answer.
  const Matching& play(VertexSet query);
  /// Transcript of the rounds played so far plus the oracle's current commitments.
  Transcript transcript() const;

 private:
  Oracle& oracle_;
  GameContext ctx_;
  PlayerHistory history_;
  std::vector<Edge> known_;
};

struct GameOutcome {
  Transcript transcript;
  GameResult result;
};

GameOutcome run_game(Player& player, Oracle& oracle, int rounds);

/// Largest matching inside the union of the responses, against n/2.
GameResult score(const Transcript& t);
GameResult score(int n, const std::optional<Bipartition>& bipartition, const PlayerHistory& history);

Transcript make_transcript(const Oracle& oracle, const PlayerHistory& history);

}  // namespace matchgame
