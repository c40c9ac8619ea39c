#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chipfire/error.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/vertex_set.hpp"

namespace chipfire {

/// Unvalidated graph description as it arrives from JSON or a builder.
struct RawGraph {
  /// (id, weight) pairs; order here fixes the vertex indexing everywhere.
  std::vector<std::pair<std::string, long long>> vertices;
  /// Unordered endpoint pairs; parallel edges repeat, loops have equal ends.
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Connected vertex-weighted multigraph. Immutable after construction; all
/// algorithms address vertices by index in the original insertion order.
class Graph {
 public:
  /// Validates and canonicalizes. Throws Error on: empty vertex list or empty
  /// id (bad_input), repeated id (duplicate_vertex_id), negative weight
  /// (negative_weight), edge endpoint not among the vertices
  /// (unknown_endpoint), disconnected graph (disconnected).
  explicit Graph(const RawGraph& raw);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& id_of(int v) const { return ids_[v]; }
  /// Index of the named vertex; throws Error(unknown_vertex) if absent.
  int index_of(const std::string& id) const;
  bool has_vertex(const std::string& id) const;

  long long weight(int v) const { return weights_[v]; }

  /// Edges with endpoints as index pairs (a <= b), sorted; loops have a == b.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Number of edges between u and v; for u == v this is the loop count.
  int edge_multiplicity(int u, int v) const { return adjacency_[u][v]; }
  int loop_count(int v) const { return adjacency_[v][v]; }

  /// Edge endpoints at v counted with multiplicity; loops contribute two.
  int valence(int v) const { return valence_[v]; }
  /// Valence with loop contributions removed.
  int valence_without_loops(int v) const { return valence_[v] - 2 * adjacency_[v][v]; }

  /// Number of edges between v and the vertices of S (v itself excluded,
  /// loops never counted).
  int edges_to_set(int v, const VertexSet& s) const;

  /// First Betti number of the underlying graph plus the total vertex weight.
  Int genus() const;

  /// Canonical divisor value at v: 2 * weight(v) - 2 + valence(v).
  Int canonical_at(int v) const;

  /// Connected components of the subgraph induced by the complement of
  /// exclude, each as a vertex set over the full graph. Ordered by smallest
  /// member. Empty when exclude covers everything.
  std::vector<VertexSet> components_excluding(const VertexSet& exclude) const;

  /// Graph distance (edge count, loops ignored) from src to every vertex.
  std::vector<int> distances_from(int src) const;

  /// Distance from every vertex to the nearest member of s; members get 0.
  /// Throws Error(empty_vertex_set) when s is empty.
  std::vector<int> distance_to_set(const VertexSet& s) const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const { return VertexSet::all(vertex_count()); }
  /// Set built from vertex ids; throws Error(unknown_vertex) on a bad id.
  VertexSet set_of(const std::vector<std::string>& names) const;

  /// Structural equality: same ids in the same order, same weights, same
  /// edge multiset.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> ids_;
  std::vector<long long> weights_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> valence_;
};

}  // namespace chipfire
