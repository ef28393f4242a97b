#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg::plane {

using Vertex = std::uint64_t;

/// Shortest-path length between two points, or Omega when they lie in
/// different components.
class RankValue {
 public:
  static RankValue finite(std::size_t n) { return RankValue(n); }
  static RankValue omega() { return RankValue(); }

  [[nodiscard]] bool is_finite() const { return value_.has_value(); }
  [[nodiscard]] std::size_t value() const { return value_.value(); }
  [[nodiscard]] std::string str() const { return value_ ? std::to_string(*value_) : std::string("omega"); }

  bool operator==(const RankValue&) const = default;

 private:
  RankValue() = default;
  explicit RankValue(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

/// A finite incidence relation on vertices 0..size()-1. add_edge inserts
/// both arcs; add_arc inserts one, which is how an asymmetric relation can
/// be built for checking. Duplicate arcs are ignored.
class PseudoplaneGraph {
 public:
  explicit PseudoplaneGraph(std::size_t target_branching = 0) : target_branching_(target_branching) {}

  Vertex add_vertex();
  void ensure_vertex(Vertex v);
  void add_edge(Vertex u, Vertex v);
  void add_arc(Vertex from, Vertex to);

  [[nodiscard]] std::size_t size() const { return adjacency_.size(); }
  [[nodiscard]] bool contains(Vertex v) const { return v < adjacency_.size(); }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  [[nodiscard]] bool has_arc(Vertex from, Vertex to) const;
  [[nodiscard]] std::size_t edge_count() const;  ///< undirected edges (u <= v with u->v present)

  [[nodiscard]] std::size_t target_branching() const { return target_branching_; }
  void set_target_branching(std::size_t b) { target_branching_ = b; }

  /// One "u v" line per edge with u < v, then a bare "v" line for each
  /// isolated vertex.
  void write_edge_list(std::ostream& out) const;
  /// Reads "u v" lines (edges, added symmetrically) and bare "v" lines
  /// (isolated vertices). '#' starts a comment. Throws std::invalid_argument.
  static PseudoplaneGraph read_edge_list(std::istream& in, std::size_t target_branching = 0);

 private:
  std::size_t target_branching_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// c disjoint copies of the regular tree of degree b truncated at depth d:
/// the root has b children and every other internal vertex b-1, so each
/// internal vertex has degree exactly b. Vertex labels are a seeded
/// permutation. Throws std::length_error beyond kMaxExplicitVertices.
[[nodiscard]] PseudoplaneGraph generate_tree(std::size_t branching, std::size_t depth, std::size_t components,
                                             std::uint64_t seed);

inline constexpr std::size_t kMaxExplicitVertices = 20'000'000;

/// Vertices per component of generate_tree: 1 + sum_{i<d} b (b-1)^i.
[[nodiscard]] std::size_t tree_vertex_count(std::size_t branching, std::size_t depth);

struct AxiomReport {
  bool symmetric = true;
  bool irreflexive = true;
  bool acyclic = true;
  std::vector<std::string> violations;  ///< each names its witness
  std::vector<Vertex> cycle_witness;    ///< first cycle found, as a closed vertex sequence
  std::vector<Vertex> boundary;         ///< degree below the target branching

  [[nodiscard]] bool passed() const { return symmetric && irreflexive && acyclic; }
};

[[nodiscard]] AxiomReport axiom_check(const PseudoplaneGraph& g);

/// One center per tree component, in increasing vertex order; for
/// generate_tree output these are the roots. For a component of odd
/// diameter the smaller of its two centers is returned. Throws
/// std::invalid_argument when the graph has a cycle.
[[nodiscard]] std::vector<Vertex> tree_centers(const PseudoplaneGraph& g);

/// Breadth-first shortest path. Throws std::out_of_range for unknown vertices.
[[nodiscard]] RankValue rank(const PseudoplaneGraph& g, Vertex a, Vertex b);

/// The same truncated regular forest as generate_tree, materialized on
/// demand so that trees of depth 100 and beyond stay usable. Asking for a
/// vertex's neighbors creates its children. Vertex ids follow creation order.
class LazyRegularForest {
 public:
  LazyRegularForest(std::size_t branching, std::size_t depth, std::size_t components);

  [[nodiscard]] Vertex root(std::size_t component) const { return component; }
  [[nodiscard]] std::size_t components() const { return components_; }
  [[nodiscard]] std::size_t target_branching() const { return branching_; }
  [[nodiscard]] std::size_t materialized() const { return parent_.size(); }
  [[nodiscard]] bool contains(Vertex v) const { return v < parent_.size(); }
  [[nodiscard]] std::size_t depth(Vertex v) const { return depth_.at(v); }

  /// Parent first (if any), then children.
  std::span<const Vertex> neighbors(Vertex v);
  /// Degree in the full (not just materialized) forest.
  [[nodiscard]] std::size_t degree(Vertex v) const;

  /// Path length through the lowest common ancestor.
  [[nodiscard]] RankValue rank(Vertex a, Vertex b) const;

  /// Everything created so far, as an explicit graph with the same ids.
  [[nodiscard]] PseudoplaneGraph snapshot() const;

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  std::size_t branching_;
  std::size_t max_depth_;
  std::size_t components_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> component_;
  std::vector<bool> expanded_;
  std::vector<std::vector<Vertex>> neighbors_;
};

[[nodiscard]] RankValue rank(const LazyRegularForest& g, Vertex a, Vertex b);

class WalkError : public std::runtime_error {
 public:
  WalkError(std::size_t step, const std::string& reason);
  [[nodiscard]] std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// a_0, b_0, a_1, b_1, ..., a_n, b_n and the rank of b_n over b_0.
struct ClaimWalk {
  std::vector<Vertex> sequence;
  RankValue distance = RankValue::omega();

  [[nodiscard]] Vertex a(std::size_t i) const { return sequence[2 * i]; }
  [[nodiscard]] Vertex b(std::size_t i) const { return sequence[2 * i + 1]; }
};

/// Starting from the edge a0-b0, picks a_{i+1} among the neighbors of b_i
/// other than a_i and b_{i+1} among the neighbors of a_{i+1} other than b_i,
/// uniformly with the given seed. A vertex that must supply a further fresh
/// neighbor is never a boundary vertex (degree below the target branching).
/// Throws WalkError naming the step where no admissible choice existed.
[[nodiscard]] ClaimWalk claim_walk(const PseudoplaneGraph& g, Vertex a0, Vertex b0, std::size_t n, std::uint64_t seed);
[[nodiscard]] ClaimWalk claim_walk(LazyRegularForest& g, Vertex a0, Vertex b0, std::size_t n, std::uint64_t seed);

}  // namespace fg::plane
