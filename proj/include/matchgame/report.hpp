#pragma once

#include <string>
#include <vector>

#include "matchgame/engine.hpp"

namespace matchgame {

struct ReportRow {
  std::string claim;
  std::string bound;
  std::string measured;
  bool pass = false;
};

/// Suites: two-round, three-round, semi-complete, bomb, all. Throws
/// kConfiguration on an unknown suite.
std::vector<ReportRow> run_report(const std::string& suite, int threads = 1);
std::string format_report(const std::vector<ReportRow>& rows);

/// Largest number of perfect-matching edges in any single answer of a fresh
/// semi-complete gadget, over every query.
int max_optimal_edges_per_answer(int c);

/// floor(n/4 + r/2)
inline int bomb_bound(int n, int r) { return (n + 2 * r) / 4; }

}  // namespace matchgame
