// Command-line front end: run, play, solve, verify, report.
//
// Exit codes:
//   0 success
//   1 usage or configuration error
//   2 protocol or player error
//   3 oracle or adversary fault
//   4 transcript failed verification
//   5 transcript could not be read or parsed
//   6 capacity exceeded
//   7 interactive game aborted
//   8 a report row failed

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchgame/adversaries.hpp"
#include "matchgame/players.hpp"
#include "matchgame/report.hpp"
#include "matchgame/solver.hpp"

using namespace matchgame;

namespace {

enum Exit {
  kOk = 0,
  kUsage = 1,
  kProtocolExit = 2,
  kFaultExit = 3,
  kVerifyExit = 4,
  kParseExit = 5,
  kCapacityExit = 6,
  kAbortExit = 7,
  kReportExit = 8,
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfiguration: return kUsage;
    case ErrorKind::kProtocol:
    case ErrorKind::kWrongGraphClass:
    case ErrorKind::kMalformedInput: return kProtocolExit;
    case ErrorKind::kOracleFault:
    case ErrorKind::kAdversaryFault:
    case ErrorKind::kUnsupportedRound:
    case ErrorKind::kInvalidStructure: return kFaultExit;
    case ErrorKind::kFormat: return kParseExit;
    case ErrorKind::kSizeLimit: return kCapacityExit;
    case ErrorKind::kAborted: return kAbortExit;
  }
  return kUsage;
}

struct GameFlags {
  OracleConfig oracle;
  std::string player = "greedy-once";
  std::uint64_t seed = 1;
  double density = 0.5;
  int rounds = -1;
  std::string out;
  bool full = false;
  int threads = 1;
};

void add_oracle_flags(CLI::App* cmd, GameFlags& f) {
  cmd->add_option("--oracle", f.oracle.kind, "two-round, three-round, semi-complete or bomb")
      ->required()
      ->check(CLI::IsMember({"two-round", "three-round", "semi-complete", "bomb"}));
  cmd->add_option("--n", f.oracle.n, "vertex count");
  cmd->add_option("--c", f.oracle.c, "semi-complete gadget half-size");
  cmd->add_option("--gadgets", f.oracle.gadgets, "number of gadget copies");
  cmd->add_option("--rounds", f.rounds, "number of rounds")->required()->check(CLI::NonNegativeNumber);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::kConfiguration, "cannot write " + path);
  file << text << "\n";
}

std::unique_ptr<Player> make_player(const GameFlags& f) {
  if (f.player == "greedy-once") return std::make_unique<GreedyOncePlayer>();
  if (f.player == "3roundmatch") return std::make_unique<ThreeRoundMatchPlayer>();
  return std::make_unique<RandomPlayer>(f.seed, f.density);
}

void print_result(const Transcript& t, const GameResult& r) {
  std::cout << "player matching: " << format_edges(r.player_matching.edges(), t.n, t.naming) << "\n";
  std::cout << "matching: " << r.player_matching.size() << " of " << r.opt << "\n";
  std::cout << "ratio: " << r.ratio.to_string() << "\n";
}

int cmd_run(const GameFlags& f) {
  auto oracle = make_oracle(f.oracle);
  auto player = make_player(f);
  GameOutcome g = run_game(*player, *oracle, f.rounds);
  std::cout << "oracle: " << oracle->name() << " (n=" << oracle->n() << ")\n";
  std::cout << "player: " << player->name() << ", rounds: " << f.rounds << "\n";
  print_result(g.transcript, g.result);
  if (!f.out.empty()) {
    write_file(f.out, transcript_to_json(g.transcript));
    std::cout << "transcript: " << f.out << "\n";
  }
  return kOk;
}

int cmd_play(const GameFlags& f) {
  auto oracle = make_oracle(f.oracle);
  InteractivePlayer player(std::cin, std::cout);
  Game game(*oracle, f.rounds);
  std::cout << "playing " << f.rounds << " rounds against the " << oracle->name() << " oracle, n=" << oracle->n()
            << "\n";
  try {
    while (!game.finished()) {
      VertexSet q = player.next_query(game.context(), game.history());
      const Matching& m = game.play(q);
      std::cout << "answer: " << format_edges(m.edges(), oracle->n(), oracle->naming()) << "\n";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kAborted) throw;
    std::cout << e.what() << "\n";
    if (!f.out.empty()) {
      write_file(f.out, transcript_to_json(game.transcript()));
      std::cout << "partial transcript: " << f.out << "\n";
    }
    return kAbortExit;
  }
  Transcript t = game.transcript();
  GameResult r = score(t);
  std::cout << "best matching: " << format_edges(r.player_matching.edges(), t.n, t.naming) << "\n";
  std::cout << "matching: " << r.player_matching.size() << " of " << r.opt << "\n";
  std::cout << "ratio: " << r.ratio.to_string() << "\n";
  std::cout << "oracle's perfect matching: " << format_edges(t.declared_perfect_matching.edges(), t.n, t.naming)
            << "\n";
  if (!f.out.empty()) write_file(f.out, transcript_to_json(t));
  return kOk;
}

int cmd_solve(const GameFlags& f) {
  SolveOptions options;
  options.canonicalize = !f.full;
  options.threads = f.threads;
  OracleFactory factory = oracle_factory(f.oracle);
  auto probe = factory();
  SolveReport r = minimax_value(factory, f.rounds, options);
  std::cout << "oracle: " << probe->name() << " (n=" << r.n << "), rounds: " << r.rounds << "\n";
  std::cout << "best: " << r.best_value << " of " << r.n / 2 << " (" << r.best_ratio.to_string() << ")\n";
  std::cout << "witness:";
  for (VertexSet q : r.witness) std::cout << " [" << format_vertices(q, r.n, probe->naming()) << "]";
  std::cout << "\nnodes expanded: " << r.nodes_expanded << "\n";
  std::cout << "canonicalization: " << r.canonicalization << "\n";
  if (!f.out.empty()) write_file(f.out, solve_report_to_json(r, probe->naming()));
  return kOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "cannot read " << path << "\n";
    return kParseExit;
  }
  std::stringstream text;
  text << file.rdbuf();
  Transcript t = transcript_from_json(text.str());
  Verdict v = verify_streaming_consistency(t);
  if (v.pass) {
    std::cout << "pass: " << t.rounds.size() << " rounds consistent with the stream\n";
    return kOk;
  }
  std::cout << "fail at " << (v.round == 0 ? std::string("transcript level") : "round " + std::to_string(v.round))
            << ": " << v.reason << "\n";
  return kVerifyExit;
}

int cmd_report(const std::string& suite, int threads) {
  std::vector<ReportRow> rows = run_report(suite, threads);
  std::cout << format_report(rows);
  for (const ReportRow& r : rows) {
    if (!r.pass) return kReportExit;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-query matching game lab"};
  app.require_subcommand(1);

  GameFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "play one scripted game and print the score");
  add_oracle_flags(run, run_flags);
  run->add_option("--player", run_flags.player, "greedy-once, 3roundmatch or random")
      ->check(CLI::IsMember({"greedy-once", "3roundmatch", "random"}));
  run->add_option("--seed", run_flags.seed, "seed of the random player");
  run->add_option("--density", run_flags.density, "inclusion probability of the random player")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--out", run_flags.out, "write the transcript JSON here");

  GameFlags play_flags;
  CLI::App* play = app.add_subcommand("play", "play interactively against an oracle");
  add_oracle_flags(play, play_flags);
  play->add_option("--out", play_flags.out, "write the (possibly partial) transcript JSON here");

  GameFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "exhaustive minimax over adaptive players");
  add_oracle_flags(solve, solve_flags);
  solve->add_flag("--full", solve_flags.full, "enumerate every round-1 query");
  solve->add_option("--threads", solve_flags.threads, "worker threads for root branches")->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_flags.out, "write the report JSON here");

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check a transcript for streaming consistency");
  verify->add_option("transcript", verify_path, "transcript JSON file")->required();

  std::string suite;
  int report_threads = 1;
  CLI::App* report = app.add_subcommand("report", "run the certification recipes of a suite");
  report->add_option("suite", suite, "two-round, three-round, semi-complete, bomb or all")
      ->required()
      ->check(CLI::IsMember({"two-round", "three-round", "semi-complete", "bomb", "all"}));
  report->add_option("--threads", report_threads, "worker threads for the solver")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(run_flags);
    if (*play) return cmd_play(play_flags);
    if (*solve) return cmd_solve(solve_flags);
    if (*verify) return cmd_verify(verify_path);
    if (*report) return cmd_report(suite, report_threads);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}
