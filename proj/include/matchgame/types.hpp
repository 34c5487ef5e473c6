#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchgame {

// Fixed capacity of every vertex subset and edge set.
inline constexpr int kMaxVertices = 64;

enum class ErrorKind {
  kMalformedInput,
  kWrongGraphClass,
  kSizeLimit,
  kInvalidStructure,
  kProtocol,
  kOracleFault,
  kAdversaryFault,
  kUnsupportedRound,
  kConfiguration,
  kFormat,
  kAborted,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// All vertices in [lo, hi).
  static constexpr VertexSet range(int lo, int hi) {
    if (hi <= lo) return {};
    std::uint64_t upper = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    std::uint64_t lower = (std::uint64_t{1} << lo) - 1;
    return from_bits(upper & ~lower);
  }
  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge stored with the smaller endpoint first.
struct Edge {
  std::uint8_t u = 0;
  std::uint8_t v = 0;

  Edge() = default;
  Edge(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices) {
      throw Error(ErrorKind::kMalformedInput,
                  "invalid edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    u = static_cast<std::uint8_t>(a < b ? a : b);
    v = static_cast<std::uint8_t>(a < b ? b : a);
  }
  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return w == u || w == v; }
  VertexSet endpoints() const { return VertexSet::of({u, v}); }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Symmetric adjacency bitmask over n vertices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  bool contains(Edge e) const { return e.v < adj_.size() && ((adj_[e.u] >> e.v) & 1U); }
  bool contains(int a, int b) const { return contains(Edge(a, b)); }
  /// Returns false if the edge was already present.
  bool insert(Edge e);
  bool erase(Edge e);
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  VertexSet neighbors(int v) const { return VertexSet::from_bits(adj_[v]); }

  /// Edges in lexicographic order.
  std::vector<Edge> to_vector() const;
  /// Edges with both endpoints inside `s`, lexicographic order.
  std::vector<Edge> inside(VertexSet s) const;
  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;
  EdgeSet& operator|=(const EdgeSet& other);

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.adj_ == b.adj_; }

 private:
  void check(Edge e) const;

  std::vector<std::uint64_t> adj_;
  int count_ = 0;
};

/// Exact non-negative rational, always reduced.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t p, std::int64_t q);

  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

}  // namespace matchgame
