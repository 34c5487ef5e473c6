#include "matchgame/solver.hpp"

#include <atomic>
#include <cstdlib>
#include <json.hpp>
#include <mutex>
#include <random>
#include <thread>

#include "matchgame/adversaries.hpp"
#include "matchgame/players.hpp"

namespace matchgame {

namespace {

struct Node {
  std::unique_ptr<Oracle> oracle;
  PlayerHistory history;
  std::vector<Edge> known;
};

Node advance(const Node& parent, int round, VertexSet q) {
  Node c{parent.oracle->clone(), parent.history, parent.known};
  const int n = c.oracle->n();
  NormalizedQuery norm = normalize_query(q, c.known, n);
  Matching answer = c.oracle->respond(round, norm.reduced);
  Matching response = norm.prematched;
  for (Edge e : answer.edges()) {
    response.add(e);
    c.known.push_back(e);
  }
  c.history.push_back(RoundRecord{Query{round, q}, std::move(response)});
  return c;
}

int learned_value(const Node& node) {
  const int n = node.oracle->n();
  EdgeSet learned(n);
  for (Edge e : node.known) learned.insert(e);
  return max_matching_size(learned, node.oracle->bipartition());
}

class Search {
 public:
  Search(int rounds, std::vector<VertexSet> round1, const SolveOptions& options)
      : rounds_(rounds), round1_(std::move(round1)), on_leaf_(options.on_leaf), on_node_(options.on_node) {}

  int value(const Node& node, int round, std::vector<VertexSet>& path) {
    ++nodes;
    if (on_node_ && round > 1) on_node_(*node.oracle, node.history);
    if (round > rounds_) {
      if (on_leaf_) on_leaf_(*node.oracle, node.history);
      return learned_value(node);
    }
    const int perfect = node.oracle->n() / 2;
    std::vector<VertexSet> candidates =
        round == 1 ? round1_ : independent_sets(node.oracle->n(), node.known);
    int best = -1;
    std::vector<VertexSet> sub;
    for (VertexSet q : candidates) {
      Node child = advance(node, round, q);
      sub.clear();
      int v = value(child, round + 1, sub);
      if (v > best) {
        best = v;
        path.assign(1, q);
        path.insert(path.end(), sub.begin(), sub.end());
      }
      if (best == perfect || (stop_ && stop_->load())) break;
    }
    return best;
  }

  void set_stop(const std::atomic<bool>* stop) { stop_ = stop; }

  std::uint64_t nodes = 0;

 private:
  int rounds_;
  std::vector<VertexSet> round1_;
  const LeafCallback& on_leaf_;
  const LeafCallback& on_node_;
  const std::atomic<bool>* stop_ = nullptr;
};

}  // namespace

int solver_capacity() {
  if (const char* env = std::getenv("MATCHGAME_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= kMaxVertices) return static_cast<int>(v);
  }
  return kDefaultSolverCapacity;
}

std::vector<VertexSet> round1_candidates(const Oracle& oracle, bool canonicalize) {
  if (canonicalize) {
    if (auto reps = oracle.round1_representatives()) return *reps;
  }
  const int n = oracle.n();
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.push_back(VertexSet::from_bits(bits));
  return out;
}

std::vector<VertexSet> independent_sets(int n, std::span<const Edge> known) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (Edge e : known) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<VertexSet> out;
  // larger sets first so perfect answers are found early
  auto rec = [&](auto&& self, int v, VertexSet chosen, VertexSet blocked) -> void {
    if (v == n) {
      out.push_back(chosen);
      return;
    }
    if (!blocked.contains(v)) {
      VertexSet with = chosen;
      with.insert(v);
      self(self, v + 1, with, blocked | adj[static_cast<std::size_t>(v)]);
    }
    self(self, v + 1, chosen, blocked);
  };
  rec(rec, 0, VertexSet(), VertexSet());
  return out;
}

SolveReport minimax_value(const OracleFactory& factory, int rounds, const SolveOptions& options) {
  if (rounds < 0) throw Error(ErrorKind::kConfiguration, "round count must be non-negative");
  Node root{factory(), {}, {}};
  const int n = root.oracle->n();
  const int cap = options.max_n > 0 ? options.max_n : solver_capacity();
  if (n > cap) {
    throw Error(ErrorKind::kSizeLimit, "solver capacity is n <= " + std::to_string(cap) + ", got n = " +
                                           std::to_string(n) + " (MATCHGAME_MAX_N raises the cap)");
  }
  SolveReport report;
  report.n = n;
  report.rounds = rounds;
  std::vector<VertexSet> round1 = round1_candidates(*root.oracle, options.canonicalize);
  bool reduced = options.canonicalize && root.oracle->round1_representatives().has_value();
  report.canonicalization = (reduced ? "round-1 representatives (" + std::to_string(round1.size()) + " classes)"
                                     : "full round-1 enumeration (" + std::to_string(round1.size()) + " queries)") +
                            ", later rounds over independent sets of the learned graph";

  if (rounds == 0 || options.threads <= 1) {
    Search search(rounds, round1, options);
    report.best_value = search.value(root, 1, report.witness);
    report.nodes_expanded = search.nodes;
  } else {
    std::vector<int> values(round1.size(), -1);
    std::vector<std::vector<VertexSet>> paths(round1.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> perfect{false};
    std::atomic<std::uint64_t> nodes{1};
    std::mutex error_lock;
    std::exception_ptr error;
    auto work = [&]() {
      Search search(rounds, round1, options);
      search.set_stop(&perfect);
      try {
        for (std::size_t i = next++; i < round1.size() && !perfect; i = next++) {
          Node child = advance(root, 1, round1[i]);
          std::vector<VertexSet> sub;
          values[i] = search.value(child, 2, sub);
          paths[i].assign(1, round1[i]);
          paths[i].insert(paths[i].end(), sub.begin(), sub.end());
          if (values[i] == n / 2) perfect = true;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_lock);
        if (!error) error = std::current_exception();
        perfect = true;
      }
      nodes += search.nodes;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    report.best_value = -1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] > report.best_value) {
        report.best_value = values[i];
        report.witness = paths[i];
      }
    }
    report.nodes_expanded = nodes;
  }
  report.best_ratio = n == 0 ? Ratio(0, 1) : Ratio(report.best_value, n / 2);

  auto replay = factory();
  ScriptedPlayer player(report.witness);
  GameOutcome outcome = run_game(player, *replay, rounds);
  if (outcome.result.player_matching.size() != report.best_value) {
    throw Error(ErrorKind::kOracleFault, "witness replay reached " +
                                             std::to_string(outcome.result.player_matching.size()) +
                                             " but the search found " + std::to_string(report.best_value));
  }
  return report;
}

RoundRequirement perfect_matching_round_requirement(int c, const SolveOptions& options) {
  if (c < 1) throw Error(ErrorKind::kConfiguration, "c must be positive");
  OracleFactory factory = oracle_factory(OracleConfig{"semi-complete", 0, c, 1});
  RoundRequirement out;
  out.c = c;
  // c rounds always suffice: query {a_i, b_i} one pair at a time
  for (int r = 1; r <= c; ++r) {
    int best = minimax_value(factory, r, options).best_value;
    out.values.push_back(best);
    if (best == c) {
      out.rounds = r;
      return out;
    }
  }
  throw Error(ErrorKind::kOracleFault, "semi-complete oracle withheld the perfect matching for c rounds");
}

ProbeReport probe_value(const OracleFactory& factory, int rounds, int samples, std::uint64_t seed,
                        const GameCallback& on_game) {
  ProbeReport report;
  std::mt19937_64 rng(seed);
  auto finish = [&](const Node& node, std::vector<VertexSet> queries) {
    ++report.games;
    if (on_game) on_game(*node.oracle, node.history);
    int v = learned_value(node);
    if (v > report.best_value || report.witness.empty()) {
      report.best_value = v;
      report.witness = std::move(queries);
    }
  };
  auto greedy_step = [&](const Node& node, int round) {
    std::vector<VertexSet> candidates = round == 1 ? round1_candidates(*node.oracle, true)
                                                   : independent_sets(node.oracle->n(), node.known);
    int best = -1;
    VertexSet pick;
    for (VertexSet q : candidates) {
      int v = learned_value(advance(node, round, q));
      if (v > best) {
        best = v;
        pick = q;
      }
    }
    return pick;
  };
  auto random_step = [&](const Node& node, double density) {
    std::bernoulli_distribution coin(density);
    VertexSet q;
    for (int v = 0; v < node.oracle->n(); ++v) {
      if (coin(rng)) q.insert(v);
    }
    return q;
  };
  auto play = [&](int random_rounds) {
    std::uniform_real_distribution<double> pick_density(0.2, 0.95);
    double density = pick_density(rng);
    Node node{factory(), {}, {}};
    std::vector<VertexSet> queries;
    for (int round = 1; round <= rounds; ++round) {
      VertexSet q = round <= random_rounds ? random_step(node, density) : greedy_step(node, round);
      queries.push_back(q);
      node = advance(node, round, q);
    }
    finish(node, std::move(queries));
  };
  play(0);
  for (int i = 0; i < samples; ++i) play(rounds);
  for (int i = 0; i < samples / 4; ++i) play(rounds - 1);
  return report;
}

std::string solve_report_to_json(const SolveReport& report, VertexNaming naming, int indent) {
  nlohmann::json j;
  j["n"] = report.n;
  j["rounds"] = report.rounds;
  j["best_value"] = report.best_value;
  j["best_ratio"] = report.best_ratio.to_string();
  nlohmann::json witness = nlohmann::json::array();
  for (VertexSet q : report.witness) {
    nlohmann::json names = nlohmann::json::array();
    for (int v : q) names.push_back(vertex_name(v, report.n, naming));
    witness.push_back(names);
  }
  j["witness"] = witness;
  j["nodes_expanded"] = report.nodes_expanded;
  j["canonicalization"] = report.canonicalization;
  return j.dump(indent);
}

}  // namespace matchgame
