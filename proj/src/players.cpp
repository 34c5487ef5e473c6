#include "matchgame/players.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace matchgame {

VertexSet GreedyOncePlayer::next_query(const GameContext& ctx, const PlayerHistory& history) {
  return history.empty() ? VertexSet::range(0, ctx.n) : VertexSet();
}

VertexSet ThreeRoundMatchPlayer::next_query(const GameContext& ctx, const PlayerHistory& history) {
  if (!ctx.bipartition) throw Error(ErrorKind::kWrongGraphClass, "3roundmatch needs a bipartite game");
  const VertexSet a_side = ctx.bipartition->a_side();
  const VertexSet b_side = ctx.bipartition->b_side();
  switch (history.size()) {
    case 0:
      return VertexSet::range(0, ctx.n);
    case 1: {
      const Matching& m = history[0].response;
      return (m.covered() & a_side) | (b_side - m.covered());
    }
    case 2: {
      const Matching& m = history[0].response;
      const Matching& left = history[1].response;
      VertexSet partners;
      for (int a : m.covered() & a_side) {
        if (left.is_matched(a)) partners.insert(*m.mate(a));
      }
      return (a_side - m.covered()) | partners;
    }
    default:
      return {};
  }
}

RandomPlayer::RandomPlayer(std::uint64_t seed, double density) : seed_(seed), density_(density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(ErrorKind::kConfiguration, "density must lie in [0, 1]");
  }
}

VertexSet RandomPlayer::next_query(const GameContext& ctx, const PlayerHistory&) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(ctx.round)};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(density_);
  VertexSet q;
  for (int v = 0; v < ctx.n; ++v) {
    if (coin(rng)) q.insert(v);
  }
  return q;
}

VertexSet ScriptedPlayer::next_query(const GameContext&, const PlayerHistory& history) {
  return history.size() < queries_.size() ? queries_[history.size()] : VertexSet();
}

VertexSet parse_query(const std::string& line, int n, VertexNaming naming) {
  std::istringstream tokens(line);
  std::string token;
  VertexSet q;
  while (tokens >> token) q.insert(parse_vertex(token, n, naming));
  return q;
}

std::string render_view(const GameContext& ctx, const PlayerHistory& history) {
  StructureGraph view = player_view(ctx.n, ctx.bipartition, history);
  std::ostringstream out;
  out << "round " << ctx.round << " of " << ctx.rounds << "\n";
  out << "vertices: " << format_vertices(VertexSet::range(0, ctx.n), ctx.n, ctx.naming) << "\n";
  out << "learned edges: " << format_edges(view.edges.to_vector(), ctx.n, ctx.naming) << "\n";
  out << "known non-edges: " << format_edges(view.non_edges.to_vector(), ctx.n, ctx.naming) << "\n";
  return out.str();
}

VertexSet InteractivePlayer::next_query(const GameContext& ctx, const PlayerHistory& history) {
  out_ << render_view(ctx, history);
  std::string line;
  while (true) {
    out_ << "query> " << std::flush;
    if (!std::getline(in_, line)) {
      out_ << "\n";
      throw Error(ErrorKind::kAborted, "aborted at round " + std::to_string(ctx.round));
    }
    try {
      return parse_query(line, ctx.n, ctx.naming);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kFormat) throw;
      out_ << e.what() << ", try again\n";
    }
  }
}

}  // namespace matchgame
