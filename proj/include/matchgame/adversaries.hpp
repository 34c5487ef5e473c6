#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matchgame/oracle.hpp"

namespace matchgame {

/// Shared machinery of the in/out adversaries. Each side of size `half` is
/// split into `in` in-vertices and `half - in` out-vertices. The adversary
/// reasons on canonical labels (a1.. = in-vertices of A, then out-vertices;
/// same for B) and maps them to actual vertices through the label map.
/// In round 1 it commits the matching a_i b_i over the in-vertices and
/// forbids every out×out pair.
class InOutOracle : public CommitOracle {
 public:
  InOutOracle(int half, int in);

  VertexNaming naming() const override { return VertexNaming::kBipartite; }
  Matching respond(int round, VertexSet query) override;
  std::optional<std::vector<VertexSet>> round1_representatives() const override;

  int half() const { return half_; }
  int in_size() const { return in_; }
  /// Commitments in canonical labels.
  const StructureGraph& canonical() const { return canon_; }
  /// Canonical structure pushed through the label map.
  StructureGraph relabeled_canonical() const;
  /// Actual vertices playing canonical A-out / B-out.
  VertexSet out_vertices_a() const;
  VertexSet out_vertices_b() const;

 protected:
  Extension extend(int round, VertexSet residual) override;
  /// Case table for rounds 2..budget on canonical labels; `residual` is
  /// actual and carries no committed pair.
  virtual void later_round(int round, VertexSet residual, Extension& canonical_ext) = 0;

  int a(int i) const { return i; }
  int b(int i) const { return half_ + i; }
  VertexSet to_canonical(VertexSet actual) const;
  Edge to_actual(Edge canonical) const;
  /// Renames canonical vertex x to target[x]; must be an automorphism of
  /// the canonical commitments.
  void rename(const std::vector<int>& target);
  /// Swaps the two sides (a_i <-> b_i).
  void mirror();
  /// Permutes the in-pairs (a_i, b_i) so that pair order[k] becomes pair k.
  void reorder_pairs(const std::vector<int>& order);
  void swap_vertices(int x, int y);

 private:
  void first_round(VertexSet residual, Extension& canonical_ext);
  Extension fallback(VertexSet residual);

  int half_;
  int in_;
  StructureGraph canon_;
};

/// Adversary that keeps every 2-round player at n/4 matched edges.
class TwoRoundOracle : public InOutOracle {
 public:
  /// n must be a positive multiple of 4.
  explicit TwoRoundOracle(int n);

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<TwoRoundOracle>(*this); }
  std::string name() const override { return "two-round"; }
  int round_budget() const override { return 2; }

 protected:
  void later_round(int round, VertexSet residual, Extension& ext) override;
};

/// Ten-vertex gadget adversary that keeps every 3-round player at 3 of 5.
class ThreeRoundOracle : public InOutOracle {
 public:
  ThreeRoundOracle();

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<ThreeRoundOracle>(*this); }
  std::string name() const override { return "three-round"; }
  int round_budget() const override { return 3; }

 protected:
  void later_round(int round, VertexSet residual, Extension& ext) override;

 private:
  void second_round(VertexSet c, Extension& ext);
  void third_round(VertexSet c, Extension& ext);
};

/// Bipartite [c]x[c] gadget with a_i b_j adjacent iff j >= i. Its only
/// perfect matching is a_i b_i, and every answer holds at most one of those.
class SemiCompleteOracle : public CommitOracle {
 public:
  explicit SemiCompleteOracle(int c);

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<SemiCompleteOracle>(*this); }
  std::string name() const override { return "semi-complete"; }
  VertexNaming naming() const override { return VertexNaming::kBipartite; }
  Matching declared_perfect_matching() const override { return optimal_; }

  int c() const { return c_; }
  const Matching& optimal() const { return optimal_; }

 protected:
  Extension extend(int round, VertexSet residual) override;
  std::vector<Edge> tail_order(std::vector<Edge> undelivered) const override;

 private:
  int c_;
  Matching optimal_;
};

/// Clique on V = v1..vh plus the perfect matching u_i v_i; U is independent.
class BombOracle : public CommitOracle {
 public:
  /// n must be even.
  explicit BombOracle(int n);

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<BombOracle>(*this); }
  std::string name() const override { return "bomb"; }
  VertexNaming naming() const override { return VertexNaming::kBomb; }
  Matching declared_perfect_matching() const override { return optimal_; }

  const Matching& optimal() const { return optimal_; }

 protected:
  Extension extend(int round, VertexSet residual) override;
  std::vector<Edge> tail_order(std::vector<Edge> undelivered) const override;

 private:
  int half_;
  Matching optimal_;
};

/// Answers with greedy over a fixed stream of a fixed input graph.
class HonestGraphOracle : public CommitOracle {
 public:
  /// `stream` must list every edge of `g` exactly once.
  HonestGraphOracle(const Graph& g, std::vector<Edge> stream);

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<HonestGraphOracle>(*this); }
  std::string name() const override { return "honest-graph"; }
  VertexNaming naming() const override {
    return state_.structure.bipartition ? VertexNaming::kBipartite : VertexNaming::kIndex;
  }
  Matching declared_perfect_matching() const override { return maximum_; }

 protected:
  Extension extend(int round, VertexSet residual) override;
  std::vector<Edge> tail_order(std::vector<Edge> undelivered) const override;

 private:
  std::vector<Edge> order_;
  Matching maximum_;
};

/// Disjoint copies of one gadget oracle. Gadget g owns a_{g*h+1}..a_{g*h+h}
/// and the matching b's, where h is half the gadget size.
class ComposedOracle : public Oracle {
 public:
  ComposedOracle(const OracleFactory& gadget, int count);
  ComposedOracle(const ComposedOracle& other);

  std::unique_ptr<Oracle> clone() const override { return std::make_unique<ComposedOracle>(*this); }
  std::string name() const override;
  int n() const override { return n_; }
  std::optional<Bipartition> bipartition() const override;
  VertexNaming naming() const override { return gadgets_.front()->naming(); }
  int round_budget() const override { return gadgets_.front()->round_budget(); }

  Matching respond(int round, VertexSet query) override;
  StructureGraph structure() const override;
  EdgeStream delivered() const override { return delivered_; }
  Matching declared_perfect_matching() const override;
  EdgeStream final_stream() const override;
  std::optional<std::vector<VertexSet>> round1_representatives() const override;

  int count() const { return static_cast<int>(gadgets_.size()); }
  const Oracle& gadget(int g) const { return *gadgets_[static_cast<std::size_t>(g)]; }
  int to_global(int g, int local) const;
  VertexSet to_local(int g, VertexSet global) const;

 private:
  Edge map_edge(int g, Edge e) const { return Edge(to_global(g, e.u), to_global(g, e.v)); }

  std::vector<std::unique_ptr<Oracle>> gadgets_;
  int gadget_n_ = 0;
  int n_ = 0;
  EdgeStream delivered_;
};

struct OracleConfig {
  /// two-round, three-round, semi-complete or bomb.
  std::string kind;
  int n = 0;
  int c = 0;
  int gadgets = 0;
};

/// Throws kConfiguration on unknown kinds or inconsistent sizes.
std::unique_ptr<Oracle> make_oracle(const OracleConfig& config);
OracleFactory oracle_factory(const OracleConfig& config);

}  // namespace matchgame
