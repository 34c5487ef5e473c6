#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchgame/adversaries.hpp"
#include "matchgame/players.hpp"
#include "matchgame/solver.hpp"

namespace py = pybind11;
using namespace matchgame;

namespace {

using PyEdge = std::pair<int, int>;

std::vector<Edge> to_edges(const std::vector<PyEdge>& pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.emplace_back(u, v);
  return out;
}

std::vector<PyEdge> from_edges(std::span<const Edge> edges) {
  std::vector<PyEdge> out;
  for (Edge e : edges) out.emplace_back(e.u, e.v);
  return out;
}

VertexSet to_set(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::kMalformedInput, "vertex out of range");
    s.insert(v);
  }
  return s;
}

std::unique_ptr<Player> make_player(const std::string& kind, std::uint64_t seed, double density) {
  if (kind == "greedy-once") return std::make_unique<GreedyOncePlayer>();
  if (kind == "3roundmatch") return std::make_unique<ThreeRoundMatchPlayer>();
  if (kind == "random") return std::make_unique<RandomPlayer>(seed, density);
  throw Error(ErrorKind::kConfiguration, "unknown player '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vertex-query matching game lab";
  py::register_exception<Error>(m, "MatchgameError");

  m.def(
      "greedy_matching",
      [](const std::vector<PyEdge>& stream, const std::vector<int>& allowed, int n) {
        return from_edges(greedy_matching(to_edges(stream), to_set(allowed), n).edges());
      },
      py::arg("stream"), py::arg("allowed"), py::arg("n"));

  m.def(
      "max_matching_size",
      [](int n, const std::vector<PyEdge>& edges, std::optional<int> a_size) {
        std::optional<Bipartition> bp;
        if (a_size) bp = Bipartition{*a_size, n - *a_size};
        Graph g(n, to_edges(edges), bp);
        return max_matching(g).size();
      },
      py::arg("n"), py::arg("edges"), py::arg("a_size") = py::none());

  m.def(
      "normalize_query",
      [](const std::vector<int>& query, const std::vector<PyEdge>& known, int n) {
        NormalizedQuery q = normalize_query(to_set(query), to_edges(known), n);
        return py::make_tuple(q.reduced.to_vector(), from_edges(q.prematched.edges()));
      },
      py::arg("query"), py::arg("known"), py::arg("n"));

  m.def(
      "run_game",
      [](const std::string& oracle, int rounds, const std::string& player, int n, int c, int gadgets,
         std::uint64_t seed, double density) {
        auto o = make_oracle(OracleConfig{oracle, n, c, gadgets});
        auto p = make_player(player, seed, density);
        GameOutcome g = run_game(*p, *o, rounds);
        py::dict out;
        out["matching"] = from_edges(g.result.player_matching.edges());
        out["opt"] = g.result.opt;
        out["ratio"] = g.result.ratio.to_string();
        out["transcript"] = transcript_to_json(g.transcript);
        return out;
      },
      py::arg("oracle"), py::arg("rounds"), py::arg("player") = "greedy-once", py::arg("n") = 0, py::arg("c") = 0,
      py::arg("gadgets") = 0, py::arg("seed") = 1, py::arg("density") = 0.5);

  m.def(
      "solve",
      [](const std::string& oracle, int rounds, int n, int c, bool full) {
        SolveOptions options;
        options.canonicalize = !full;
        OracleFactory factory = oracle_factory(OracleConfig{oracle, n, c, 0});
        SolveReport r;
        {
          py::gil_scoped_release release;
          r = minimax_value(factory, rounds, options);
        }
        py::dict out;
        out["best_value"] = r.best_value;
        out["best_ratio"] = r.best_ratio.to_string();
        std::vector<std::vector<int>> witness;
        for (VertexSet q : r.witness) witness.push_back(q.to_vector());
        out["witness"] = witness;
        out["nodes_expanded"] = r.nodes_expanded;
        return out;
      },
      py::arg("oracle"), py::arg("rounds"), py::arg("n") = 0, py::arg("c") = 0, py::arg("full") = false);

  m.def(
      "verify",
      [](const std::string& transcript_json) {
        Verdict v = verify_streaming_consistency(transcript_from_json(transcript_json));
        return py::make_tuple(v.pass, v.round, v.reason);
      },
      py::arg("transcript_json"));
}
