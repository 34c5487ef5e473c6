#include "matchgame/report.hpp"

#include <iomanip>
#include <sstream>

#include "matchgame/adversaries.hpp"
#include "matchgame/players.hpp"
#include "matchgame/solver.hpp"

namespace matchgame {

namespace {

std::string value_of(int value, int n) { return std::to_string(value) + " of " + std::to_string(n / 2); }

void two_round_rows(std::vector<ReportRow>& rows, int threads) {
  for (int n : {8, 16}) {
    SolveOptions options;
    options.threads = threads;
    SolveReport r = minimax_value(oracle_factory({"two-round", n, 0, 0}), 2, options);
    rows.push_back({"2 rounds, two-round oracle, n=" + std::to_string(n), "best = n/4 (ratio 1/2)",
                    value_of(r.best_value, n) + " (" + r.best_ratio.to_string() + ")", r.best_value == n / 4});
  }
}

void three_round_rows(std::vector<ReportRow>& rows, int threads) {
  SolveOptions options;
  options.threads = threads;
  SolveReport r = minimax_value(oracle_factory({"three-round", 10, 0, 0}), 3, options);
  rows.push_back({"3 rounds, three-round oracle, n=10", "best = 3 (ratio 3/5)",
                  value_of(r.best_value, 10) + " (" + r.best_ratio.to_string() + ")", r.best_value == 3});
  auto oracle = make_oracle({"three-round", 10, 0, 0});
  ThreeRoundMatchPlayer player;
  GameOutcome g = run_game(player, *oracle, 3);
  rows.push_back({"3roundmatch vs three-round oracle, n=10", "ratio 3/5", g.result.ratio.to_string(),
                  g.result.ratio == Ratio(3, 5)});
}

void semi_complete_rows(std::vector<ReportRow>& rows) {
  for (int c : {2, 3, 4}) {
    int most = max_optimal_edges_per_answer(c);
    rows.push_back({"optimal edges per answer, semi-complete c=" + std::to_string(c), "<= 1",
                    std::to_string(most), most <= 1});
  }
  for (int c : {1, 2, 3}) {
    RoundRequirement req = perfect_matching_round_requirement(c);
    std::string values;
    for (int v : req.values) values += (values.empty() ? "" : ",") + std::to_string(v);
    rows.push_back({"rounds to a perfect matching, semi-complete c=" + std::to_string(c),
                    "= " + std::to_string(c), std::to_string(req.rounds) + " (best per round: " + values + ")",
                    req.rounds == c});
  }
}

void bomb_rows(std::vector<ReportRow>& rows, int threads) {
  const int n = 12;
  OracleFactory factory = oracle_factory({"bomb", n, 0, 0});
  for (int r : {1, 2}) {
    SolveOptions options;
    options.threads = threads;
    SolveReport s = minimax_value(factory, r, options);
    int bound = bomb_bound(n, r);
    rows.push_back({"bomb n=12, r=" + std::to_string(r) + " (exhaustive)", "<= floor(n/4 + r/2) = " + std::to_string(bound),
                    std::to_string(s.best_value), s.best_value == bound});
  }
  ProbeReport p = probe_value(factory, 3, 400, 7);
  int bound = bomb_bound(n, 3);
  rows.push_back({"bomb n=12, r=3 (probing, " + std::to_string(p.games) + " games)",
                  "<= floor(n/4 + r/2) = " + std::to_string(bound), std::to_string(p.best_value), p.best_value <= bound});
}

}  // namespace

int max_optimal_edges_per_answer(int c) {
  SemiCompleteOracle fresh(c);
  int most = 0;
  for (std::uint64_t as = 0; as < (std::uint64_t{1} << c); ++as) {
    for (std::uint64_t bs = 0; bs < (std::uint64_t{1} << c); ++bs) {
      SemiCompleteOracle o = fresh;
      Matching m = o.respond(1, VertexSet::from_bits(as | (bs << c)));
      int count = 0;
      for (Edge e : m.edges()) count += o.optimal().contains(e) ? 1 : 0;
      most = std::max(most, count);
    }
  }
  return most;
}

std::vector<ReportRow> run_report(const std::string& suite, int threads) {
  std::vector<ReportRow> rows;
  bool all = suite == "all";
  bool known = all || suite == "two-round" || suite == "three-round" || suite == "semi-complete" || suite == "bomb";
  if (!known) throw Error(ErrorKind::kConfiguration, "unknown suite '" + suite + "'");
  if (all || suite == "two-round") two_round_rows(rows, threads);
  if (all || suite == "three-round") three_round_rows(rows, threads);
  if (all || suite == "semi-complete") semi_complete_rows(rows);
  if (all || suite == "bomb") bomb_rows(rows, threads);
  return rows;
}

std::string format_report(const std::vector<ReportRow>& rows) {
  std::size_t w_claim = 5, w_bound = 5, w_measured = 8;
  for (const ReportRow& r : rows) {
    w_claim = std::max(w_claim, r.claim.size());
    w_bound = std::max(w_bound, r.bound.size());
    w_measured = std::max(w_measured, r.measured.size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    out << std::left << std::setw(static_cast<int>(w_claim)) << a << "  " << std::setw(static_cast<int>(w_bound)) << b
        << "  " << std::setw(static_cast<int>(w_measured)) << c << "  " << d << "\n";
  };
  line("claim", "bound", "measured", "result");
  for (const ReportRow& r : rows) line(r.claim, r.bound, r.measured, r.pass ? "pass" : "FAIL");
  return out.str();
}

}  // namespace matchgame
