#include "matchgame/adversaries.hpp"

#include <algorithm>

namespace matchgame {

namespace {

Error fault(const std::string& what) { return Error(ErrorKind::kAdversaryFault, what); }

Error config_error(const std::string& what) { return Error(ErrorKind::kConfiguration, what); }

}  // namespace

// ---- in/out adversaries ----

InOutOracle::InOutOracle(int half, int in)
    : CommitOracle(2 * half, Bipartition{half, half}), half_(half), in_(in), canon_(2 * half, Bipartition{half, half}) {}

VertexSet InOutOracle::to_canonical(VertexSet actual) const {
  VertexSet out;
  for (int x = 0; x < n(); ++x) {
    if (actual.contains(state_.label_map[static_cast<std::size_t>(x)])) out.insert(x);
  }
  return out;
}

Edge InOutOracle::to_actual(Edge e) const {
  return Edge(state_.label_map[e.u], state_.label_map[e.v]);
}

StructureGraph InOutOracle::relabeled_canonical() const {
  StructureGraph out(n(), bipartition());
  for (Edge e : canon_.edges.to_vector()) out.edges.insert(to_actual(e));
  for (Edge e : canon_.non_edges.to_vector()) out.non_edges.insert(to_actual(e));
  return out;
}

VertexSet InOutOracle::out_vertices_a() const {
  VertexSet out;
  for (int i = in_; i < half_; ++i) out.insert(state_.label_map[static_cast<std::size_t>(a(i))]);
  return out;
}

VertexSet InOutOracle::out_vertices_b() const {
  VertexSet out;
  for (int i = in_; i < half_; ++i) out.insert(state_.label_map[static_cast<std::size_t>(b(i))]);
  return out;
}

void InOutOracle::rename(const std::vector<int>& target) {
  const int size = n();
  if (static_cast<int>(target.size()) != size) throw fault("relabeling has the wrong size");
  VertexSet image;
  for (int t : target) image.insert(t);
  if (image != VertexSet::range(0, size)) throw fault("relabeling is not a permutation");
  auto moved = [&](Edge e) { return Edge(target[e.u], target[e.v]); };
  for (Edge e : canon_.edges.to_vector()) {
    if (!canon_.edges.contains(moved(e))) throw fault("relabeling does not preserve the committed edges");
  }
  for (Edge e : canon_.non_edges.to_vector()) {
    if (!canon_.non_edges.contains(moved(e))) throw fault("relabeling does not preserve the committed non-edges");
  }
  std::vector<int> next(state_.label_map.size());
  for (int x = 0; x < size; ++x) next[static_cast<std::size_t>(target[static_cast<std::size_t>(x)])] = state_.label_map[static_cast<std::size_t>(x)];
  state_.label_map = std::move(next);
}

void InOutOracle::mirror() {
  std::vector<int> target(static_cast<std::size_t>(n()));
  for (int x = 0; x < n(); ++x) target[static_cast<std::size_t>(x)] = x < half_ ? x + half_ : x - half_;
  rename(target);
}

void InOutOracle::reorder_pairs(const std::vector<int>& order) {
  std::vector<int> target(static_cast<std::size_t>(n()));
  std::iota(target.begin(), target.end(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int from = order[k];
    target[static_cast<std::size_t>(a(from))] = a(static_cast<int>(k));
    target[static_cast<std::size_t>(b(from))] = b(static_cast<int>(k));
  }
  rename(target);
}

void InOutOracle::swap_vertices(int x, int y) {
  std::vector<int> target(static_cast<std::size_t>(n()));
  std::iota(target.begin(), target.end(), 0);
  std::swap(target[static_cast<std::size_t>(x)], target[static_cast<std::size_t>(y)]);
  rename(target);
}

Matching InOutOracle::respond(int round, VertexSet query) {
  Matching response = CommitOracle::respond(round, query);
  VertexSet unmatched = to_canonical(query - response.covered());
  for (int x : unmatched & VertexSet::range(0, half_)) {
    for (int y : unmatched & VertexSet::range(half_, n())) canon_.non_edges.insert(Edge(x, y));
  }
  return response;
}

std::optional<std::vector<VertexSet>> InOutOracle::round1_representatives() const {
  std::vector<VertexSet> out;
  for (int ka = 0; ka <= half_; ++ka) {
    for (int kb = 0; kb <= half_; ++kb) {
      out.push_back(VertexSet::range(0, ka) | VertexSet::range(half_, half_ + kb));
    }
  }
  return out;
}

void InOutOracle::first_round(VertexSet residual, Extension& ext) {
  if (!canon_.edges.empty() || !canon_.non_edges.empty()) {
    throw Error(ErrorKind::kProtocol, name() + ": round 1 was already played");
  }
  const int out_size = half_ - in_;
  // in-vertices listed queried first, so the committed pairs line up
  auto layout = [&](VertexSet side, std::vector<int>& in_order, std::vector<int>& out_order) {
    VertexSet queried = residual & side;
    VertexSet rest = side - queried;
    VertexSet in_set;
    if (queried.size() <= in_) {
      in_set = queried;
      for (int v : rest) {
        if (in_set.size() == in_) break;
        in_set.insert(v);
      }
    } else {
      VertexSet out_set = rest;
      for (int v : queried) {
        if (out_set.size() == out_size) break;
        out_set.insert(v);
      }
      in_set = side - out_set;
    }
    for (int v : in_set & queried) in_order.push_back(v);
    for (int v : in_set - queried) in_order.push_back(v);
    out_order = (side - in_set).to_vector();
    return (in_set & queried).size();
  };
  std::vector<int> in_a, out_a, in_b, out_b;
  int qa = layout(VertexSet::range(0, half_), in_a, out_a);
  int qb = layout(VertexSet::range(half_, n()), in_b, out_b);
  for (int i = 0; i < in_; ++i) {
    state_.label_map[static_cast<std::size_t>(a(i))] = in_a[static_cast<std::size_t>(i)];
    state_.label_map[static_cast<std::size_t>(b(i))] = in_b[static_cast<std::size_t>(i)];
  }
  for (int j = 0; j < out_size; ++j) {
    state_.label_map[static_cast<std::size_t>(a(in_ + j))] = out_a[static_cast<std::size_t>(j)];
    state_.label_map[static_cast<std::size_t>(b(in_ + j))] = out_b[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < in_; ++i) {
    Edge e(a(i), b(i));
    (i < std::min(qa, qb) ? ext.delivered : ext.committed).push_back(e);
  }
  for (int i = in_; i < half_; ++i) {
    for (int j = in_; j < half_; ++j) ext.non_edges.emplace_back(a(i), b(j));
  }
}

Extension InOutOracle::fallback(VertexSet residual) {
  Extension ext;
  Matching pre = prematch_committed(state_, residual);
  VertexSet rest = residual - pre.covered();
  ext.delivered.assign(pre.edges().begin(), pre.edges().end());
  StructureGraph trial = state_.structure;
  for (Edge e : open_pairs(trial, rest)) trial.non_edges.insert(e);
  if (!trial.completable()) {
    auto pm = state_.structure.perfect_matching();
    if (!pm) throw fault(name() + ": committed non-edges leave no perfect matching");
    for (Edge e : pm->edges()) {
      if (e.endpoints().is_subset_of(rest)) ext.delivered.push_back(e);
    }
  }
  for (Edge e : ext.delivered) {
    Edge c(to_canonical(VertexSet::of({e.u})).min(), to_canonical(VertexSet::of({e.v})).min());
    canon_.edges.insert(c);
  }
  return ext;
}

Extension InOutOracle::extend(int round, VertexSet residual) {
  if (round > round_budget() && round_budget() > 0) return fallback(residual);
  Extension canonical_ext;
  Matching pre;
  if (round == 1) {
    first_round(residual, canonical_ext);
  } else {
    if (canon_.edges.empty()) throw Error(ErrorKind::kProtocol, name() + ": round 1 has not been played");
    pre = prematch_committed(state_, residual);
    later_round(round, residual - pre.covered(), canonical_ext);
  }
  Extension out;
  out.delivered.assign(pre.edges().begin(), pre.edges().end());
  for (Edge e : canonical_ext.delivered) {
    canon_.edges.insert(e);
    out.delivered.push_back(to_actual(e));
  }
  for (Edge e : canonical_ext.committed) {
    canon_.edges.insert(e);
    out.committed.push_back(to_actual(e));
  }
  for (Edge e : canonical_ext.non_edges) {
    canon_.non_edges.insert(e);
    out.non_edges.push_back(to_actual(e));
  }
  return out;
}

TwoRoundOracle::TwoRoundOracle(int n) : InOutOracle(n / 2, n / 4) {
  if (n < 4 || n % 4 != 0) throw config_error("two-round oracle needs n to be a positive multiple of 4");
}

void TwoRoundOracle::later_round(int, VertexSet residual, Extension& ext) {
  const VertexSet a_in = VertexSet::range(0, in_size());
  const VertexSet b_in = VertexSet::range(half(), half() + in_size());
  const VertexSet b_out = VertexSet::range(half() + in_size(), n());
  VertexSet c = to_canonical(residual);
  if ((c & b_in).size() > (c & a_in).size()) {
    mirror();
    c = to_canonical(residual);
  }
  std::vector<int> qa = (c & a_in).to_vector();
  std::vector<int> qb = (c & b_in).to_vector();
  std::vector<int> qb_out = (c & b_out).to_vector();
  std::size_t next = 0;
  for (int y : qb) ext.delivered.emplace_back(qa[next++], y);
  for (int y : qb_out) {
    if (next == qa.size()) break;
    ext.delivered.emplace_back(qa[next++], y);
  }
}

ThreeRoundOracle::ThreeRoundOracle() : InOutOracle(5, 3) {}

void ThreeRoundOracle::later_round(int round, VertexSet residual, Extension& ext) {
  if (round == 2) {
    VertexSet c = to_canonical(residual);
    const VertexSet a_in = VertexSet::range(0, 3);
    const VertexSet b_in = VertexSet::range(5, 8);
    if ((c & b_in).size() > (c & a_in).size()) mirror();
    c = to_canonical(residual);
    std::vector<int> qa, qb, rest;
    for (int i = 0; i < 3; ++i) {
      if (c.contains(a(i))) qa.push_back(i);
      else if (c.contains(b(i))) qb.push_back(i);
      else rest.push_back(i);
    }
    std::vector<int> order = {0, 1, 2};
    if (qa.size() == 2 && qb.size() == 1) order = {qa[0], qa[1], qb[0]};
    else if (qa.size() == 1 && qb.size() == 1) order = {rest[0], qa[0], qb[0]};
    else if (qa.size() == 2 && qb.empty()) order = {qa[0], qa[1], rest[0]};
    else if (qa.size() == 1 && qb.empty()) order = {qa[0], rest[0], rest[1]};
    else if (!((qa.size() == 3 || qa.empty()) && qb.empty())) {
      throw fault("three-round: round-2 query outside the case table");
    }
    reorder_pairs(order);
    c = to_canonical(residual);
    if (c.contains(b(3)) && !c.contains(b(4))) {
      swap_vertices(b(3), b(4));
      c = to_canonical(residual);
    }
    second_round(c, ext);
    return;
  }
  third_round(to_canonical(residual), ext);
}

void ThreeRoundOracle::second_round(VertexSet c, Extension& ext) {
  const Edge a1b5(a(0), b(4));
  const Edge a2b3(a(1), b(2));
  std::vector<Edge> give;
  int x = (c & VertexSet::range(0, 3)).size();
  int y = (c & VertexSet::range(5, 8)).size();
  bool b5 = c.contains(b(4));
  if (y == 1) give.push_back(a2b3);
  if (x >= 1 && !(x == 1 && y == 1) && b5) give.push_back(a1b5);
  for (Edge e : {a1b5, a2b3}) {
    bool given = std::find(give.begin(), give.end(), e) != give.end();
    (given ? ext.delivered : ext.committed).push_back(e);
  }
  ext.non_edges.emplace_back(a(1), b(3));
  ext.non_edges.emplace_back(a(2), b(3));
}

void ThreeRoundOracle::third_round(VertexSet c, Extension& ext) {
  const VertexSet a_in = c & VertexSet::range(0, 3);
  const VertexSet b_in = c & VertexSet::range(5, 8);
  const VertexSet b_out = c & VertexSet::range(8, 10);
  const StructureGraph& canon = canonical();
  if (a_in.size() >= b_in.size()) {
    VertexSet free_a = a_in;
    std::vector<int> order = b_in.to_vector();
    for (int y : b_out) order.push_back(y);
    for (int y : order) {
      for (int x : free_a) {
        if (canon.non_edges.contains(x, y)) continue;
        ext.delivered.emplace_back(x, y);
        free_a.erase(x);
        break;
      }
    }
    return;
  }
  auto case_one = [&]() {
    for (Edge e : {Edge(a(3), b(1)), Edge(a(4), b(2))}) {
      (e.endpoints().is_subset_of(c) ? ext.delivered : ext.committed).push_back(e);
    }
  };
  int x = a_in.size();
  int y = b_in.size();
  if (x == 0 && (y == 3 || y == 2)) {
    case_one();
  } else if (x == 1 && y == 2) {
    if (a_in.contains(a(0)) && b_in == VertexSet::of({b(1), b(2)})) {
      ext.delivered.emplace_back(a(0), b(1));
      ext.non_edges.emplace_back(a(3), b(2));
      ext.non_edges.emplace_back(a(4), b(2));
    } else if (a_in.contains(a(2)) && b_in == VertexSet::of({b(0), b(1)})) {
      ext.delivered.emplace_back(a(2), b(1));
      ext.non_edges.emplace_back(a(3), b(0));
      ext.non_edges.emplace_back(a(4), b(0));
    } else {
      throw fault("three-round: round-3 query outside the case table");
    }
  } else if (x == 0 && y == 1) {
    if (b_in.contains(b(0))) {
      ext.non_edges.emplace_back(a(3), b(0));
      ext.non_edges.emplace_back(a(4), b(0));
    } else {
      case_one();
    }
  } else {
    throw fault("three-round: round-3 query outside the case table");
  }
}

// ---- semi-complete gadget ----

SemiCompleteOracle::SemiCompleteOracle(int c) : CommitOracle(2 * c, Bipartition{c, c}), c_(c) {
  if (c < 1 || 2 * c > kMaxVertices) throw config_error("semi-complete gadget needs 1 <= c <= 32");
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      Edge e(i, c + j);
      if (j >= i) state_.structure.edges.insert(e);
      else state_.structure.non_edges.insert(e);
    }
    optimal_.add(Edge(i, c + i));
  }
}

Extension SemiCompleteOracle::extend(int, VertexSet residual) {
  std::vector<int> as = (residual & VertexSet::range(0, c_)).to_vector();
  std::vector<int> bs = (residual & VertexSet::range(c_, 2 * c_)).to_vector();
  Extension ext;
  int optimal_edges = 0;
  std::size_t k = std::min(as.size(), bs.size());
  for (std::size_t i = 0; i < k; ++i) {
    int x = as[i];
    int y = bs[bs.size() - 1 - i];
    if (y - c_ < x) continue;
    ext.delivered.emplace_back(x, y);
    if (y - c_ == x) ++optimal_edges;
  }
  if (optimal_edges > 1) throw fault("semi-complete: answer holds more than one optimal edge");
  return ext;
}

std::vector<Edge> SemiCompleteOracle::tail_order(std::vector<Edge> undelivered) const {
  std::sort(undelivered.begin(), undelivered.end(), [](Edge x, Edge y) {
    return x.u != y.u ? x.u < y.u : x.v > y.v;
  });
  return undelivered;
}

// ---- bomb graph ----

BombOracle::BombOracle(int n) : CommitOracle(n, std::nullopt), half_(n / 2) {
  if (n < 2 || n % 2 != 0 || n > kGeneralMatchingLimit) {
    throw config_error("bomb oracle needs an even n between 2 and " + std::to_string(kGeneralMatchingLimit));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool clique = x >= half_;
      bool optimal = y == x + half_;
      (clique || optimal ? state_.structure.edges : state_.structure.non_edges).insert(Edge(x, y));
    }
  }
  for (int i = 0; i < half_; ++i) optimal_.add(Edge(i, half_ + i));
}

Extension BombOracle::extend(int, VertexSet residual) {
  std::vector<int> vs = (residual & VertexSet::range(half_, n())).to_vector();
  Extension ext;
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) ext.delivered.emplace_back(vs[i], vs[i + 1]);
  if (vs.size() % 2 == 1) {
    int v = vs.back();
    if (residual.contains(v - half_)) ext.delivered.emplace_back(v - half_, v);
  }
  int optimal_edges = 0;
  for (Edge e : ext.delivered) optimal_edges += optimal_.contains(e) ? 1 : 0;
  if (optimal_edges > 1) throw fault("bomb: answer holds more than one optimal edge");
  return ext;
}

std::vector<Edge> BombOracle::tail_order(std::vector<Edge> undelivered) const {
  std::stable_partition(undelivered.begin(), undelivered.end(), [&](Edge e) { return e.u >= half_; });
  return undelivered;
}

// ---- honest graph ----

HonestGraphOracle::HonestGraphOracle(const Graph& g, std::vector<Edge> stream)
    : CommitOracle(g.n(), g.bipartition()), order_(std::move(stream)), maximum_(max_matching(g)) {
  state_.require_completable = false;
  EdgeSet seen(g.n());
  for (Edge e : order_) {
    if (!g.edges().contains(e)) throw Error(ErrorKind::kMalformedInput, "stream edge is not in the graph");
    if (!seen.insert(e)) throw Error(ErrorKind::kMalformedInput, "duplicate edge in stream");
  }
  if (seen.size() != g.edges().size()) throw Error(ErrorKind::kMalformedInput, "stream misses graph edges");
  StructureGraph& s = state_.structure;
  s.edges = g.edges();
  for (Edge e : open_pairs(s, VertexSet::range(0, g.n()))) s.non_edges.insert(e);
}

Extension HonestGraphOracle::extend(int, VertexSet residual) {
  Extension ext;
  Matching m = greedy_matching(order_, residual, n());
  ext.delivered.assign(m.edges().begin(), m.edges().end());
  return ext;
}

std::vector<Edge> HonestGraphOracle::tail_order(std::vector<Edge> undelivered) const {
  EdgeSet pending(n());
  for (Edge e : undelivered) pending.insert(e);
  std::vector<Edge> out;
  for (Edge e : order_) {
    if (pending.contains(e)) out.push_back(e);
  }
  return out;
}

// ---- composition ----

ComposedOracle::ComposedOracle(const OracleFactory& gadget, int count) {
  if (count < 1) throw config_error("gadget count must be positive");
  for (int g = 0; g < count; ++g) gadgets_.push_back(gadget());
  gadget_n_ = gadgets_.front()->n();
  if (gadget_n_ % 2 != 0) throw config_error("gadgets must have an even vertex count");
  if (static_cast<long>(gadget_n_) * count > kMaxVertices) {
    throw Error(ErrorKind::kSizeLimit, "composed oracle exceeds " + std::to_string(kMaxVertices) + " vertices");
  }
  n_ = gadget_n_ * count;
  delivered_ = EdgeStream(n_);
}

ComposedOracle::ComposedOracle(const ComposedOracle& other)
    : gadget_n_(other.gadget_n_), n_(other.n_), delivered_(other.delivered_) {
  for (const auto& g : other.gadgets_) gadgets_.push_back(g->clone());
}

std::string ComposedOracle::name() const {
  std::string base = gadgets_.front()->name();
  return count() == 1 ? base : base + " x" + std::to_string(count());
}

std::optional<Bipartition> ComposedOracle::bipartition() const {
  if (!gadgets_.front()->bipartition()) return std::nullopt;
  return Bipartition{n_ / 2, n_ / 2};
}

int ComposedOracle::to_global(int g, int local) const {
  int h = gadget_n_ / 2;
  return local < h ? g * h + local : n_ / 2 + g * h + (local - h);
}

VertexSet ComposedOracle::to_local(int g, VertexSet global) const {
  VertexSet out;
  for (int v = 0; v < gadget_n_; ++v) {
    if (global.contains(to_global(g, v))) out.insert(v);
  }
  return out;
}

Matching ComposedOracle::respond(int round, VertexSet query) {
  if (!query.is_subset_of(VertexSet::range(0, n_))) {
    throw Error(ErrorKind::kProtocol, "query names a vertex outside the game");
  }
  Matching out;
  for (int g = 0; g < count(); ++g) {
    Oracle& gadget = *gadgets_[static_cast<std::size_t>(g)];
    std::size_t before = gadget.delivered().size();
    Matching local = gadget.respond(round, to_local(g, query));
    for (Edge e : local.edges()) out.add(map_edge(g, e));
    EdgeStream after = gadget.delivered();
    for (std::size_t i = before; i < after.size(); ++i) delivered_.push_back(map_edge(g, after.edges()[i]));
  }
  return out;
}

StructureGraph ComposedOracle::structure() const {
  StructureGraph s(n_, bipartition());
  for (int g = 0; g < count(); ++g) {
    StructureGraph local = gadgets_[static_cast<std::size_t>(g)]->structure();
    for (Edge e : local.edges.to_vector()) s.edges.insert(map_edge(g, e));
    for (Edge e : local.non_edges.to_vector()) s.non_edges.insert(map_edge(g, e));
  }
  int h = gadget_n_ / 2;
  auto owner = [&](int v) { return v < n_ / 2 ? v / h : (v - n_ / 2) / h; };
  for (Edge e : open_pairs(s, VertexSet::range(0, n_))) {
    if (owner(e.u) != owner(e.v)) s.non_edges.insert(e);
  }
  return s;
}

Matching ComposedOracle::declared_perfect_matching() const {
  Matching out;
  for (int g = 0; g < count(); ++g) {
    Matching local = gadgets_[static_cast<std::size_t>(g)]->declared_perfect_matching();
    for (Edge e : local.edges()) out.add(map_edge(g, e));
  }
  return out;
}

EdgeStream ComposedOracle::final_stream() const {
  EdgeStream out = delivered_;
  for (int g = 0; g < count(); ++g) {
    const Oracle& gadget = *gadgets_[static_cast<std::size_t>(g)];
    EdgeStream local = gadget.final_stream();
    for (std::size_t i = gadget.delivered().size(); i < local.size(); ++i) out.push_back(map_edge(g, local.edges()[i]));
  }
  return out;
}

std::optional<std::vector<VertexSet>> ComposedOracle::round1_representatives() const {
  std::vector<VertexSet> reps = {VertexSet()};
  for (int g = 0; g < count(); ++g) {
    auto local = gadgets_[static_cast<std::size_t>(g)]->round1_representatives();
    if (!local) return std::nullopt;
    std::vector<VertexSet> next;
    for (VertexSet r : reps) {
      for (VertexSet l : *local) {
        VertexSet mapped = r;
        for (int v : l) mapped.insert(to_global(g, v));
        next.push_back(mapped);
      }
    }
    reps = std::move(next);
  }
  return reps;
}

// ---- configuration ----

std::unique_ptr<Oracle> make_oracle(const OracleConfig& config) {
  const std::string& kind = config.kind;
  if (config.n < 0 || config.c < 0 || config.gadgets < 0) throw config_error("sizes must be non-negative");
  if (kind == "two-round" || kind == "bomb") {
    if (config.n == 0) throw config_error(kind + " oracle needs --n");
    if (config.gadgets > 1) throw config_error(kind + " oracle is not composed of gadgets");
    if (kind == "bomb") return std::make_unique<BombOracle>(config.n);
    if (config.n > kMaxVertices) throw Error(ErrorKind::kSizeLimit, "n is limited to " + std::to_string(kMaxVertices));
    return std::make_unique<TwoRoundOracle>(config.n);
  }
  if (kind == "three-round") {
    int count = config.n == 0 ? std::max(config.gadgets, 1) : config.n / 10;
    if (config.n != 0 && config.n % 10 != 0) throw config_error("three-round oracle needs n to be a multiple of 10");
    if (config.gadgets != 0 && config.gadgets != count) throw config_error("--gadgets disagrees with --n");
    if (count == 1) return std::make_unique<ThreeRoundOracle>();
    return std::make_unique<ComposedOracle>([] { return std::make_unique<ThreeRoundOracle>(); }, count);
  }
  if (kind == "semi-complete") {
    int c = config.c;
    if (c == 0) throw config_error("semi-complete oracle needs --c");
    int count = std::max(config.gadgets, 1);
    if (config.n != 0) {
      if (config.n % (2 * c) != 0) throw config_error("semi-complete oracle needs n to be a multiple of 2c");
      if (config.gadgets != 0 && config.gadgets != config.n / (2 * c)) throw config_error("--gadgets disagrees with --n");
      count = config.n / (2 * c);
    }
    if (count == 1) return std::make_unique<SemiCompleteOracle>(c);
    return std::make_unique<ComposedOracle>([c] { return std::make_unique<SemiCompleteOracle>(c); }, count);
  }
  throw config_error("unknown oracle '" + kind + "'");
}

OracleFactory oracle_factory(const OracleConfig& config) {
  std::shared_ptr<const Oracle> prototype = make_oracle(config);
  return [prototype] { return prototype->clone(); };
}

}  // namespace matchgame
