#include "matchgame/types.hpp"

namespace matchgame {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return "malformed-input";
    case ErrorKind::kWrongGraphClass: return "wrong-graph-class";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kInvalidStructure: return "invalid-structure";
    case ErrorKind::kProtocol: return "protocol";
    case ErrorKind::kOracleFault: return "oracle-fault";
    case ErrorKind::kAdversaryFault: return "adversary-fault";
    case ErrorKind::kUnsupportedRound: return "unsupported-round";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kAborted: return "aborted";
  }
  return "unknown";
}

EdgeSet::EdgeSet(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::kSizeLimit, "edge set capacity is " + std::to_string(kMaxVertices) +
                                           " vertices, got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void EdgeSet::check(Edge e) const {
  if (e.v >= adj_.size()) {
    throw Error(ErrorKind::kMalformedInput, "edge endpoint " + std::to_string(e.v) +
                                                " out of range for n=" + std::to_string(n()));
  }
}

bool EdgeSet::insert(Edge e) {
  check(e);
  if ((adj_[e.u] >> e.v) & 1U) return false;
  adj_[e.u] |= std::uint64_t{1} << e.v;
  adj_[e.v] |= std::uint64_t{1} << e.u;
  ++count_;
  return true;
}

bool EdgeSet::erase(Edge e) {
  if (!contains(e)) return false;
  adj_[e.u] &= ~(std::uint64_t{1} << e.v);
  adj_[e.v] &= ~(std::uint64_t{1} << e.u);
  --count_;
  return true;
}

std::vector<Edge> EdgeSet::to_vector() const { return inside(VertexSet::range(0, n())); }

std::vector<Edge> EdgeSet::inside(VertexSet s) const {
  std::vector<Edge> out;
  for (int u : s) {
    if (u >= n()) break;
    // only the higher endpoint, so each edge is listed once
    VertexSet higher = VertexSet::from_bits(adj_[u]) & s & VertexSet::range(u + 1, kMaxVertices);
    for (int v : higher) out.emplace_back(u, v);
  }
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    std::uint64_t theirs = i < other.adj_.size() ? other.adj_[i] : 0;
    if (adj_[i] & ~theirs) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  std::size_t m = std::min(adj_.size(), other.adj_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (adj_[i] & other.adj_[i]) return true;
  }
  return false;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  if (other.n() > n()) adj_.resize(other.adj_.size(), 0);
  int count = 0;
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if (i < other.adj_.size()) adj_[i] |= other.adj_[i];
    count += std::popcount(adj_[i]);
  }
  count_ = count / 2;
  return *this;
}

Ratio::Ratio(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < 0) throw Error(ErrorKind::kMalformedInput, "ratio needs p >= 0 and q > 0");
  std::int64_t g = std::gcd(p, q);
  if (g == 0) g = 1;
  num = p / g;
  den = q / g;
}

}  // namespace matchgame
