#include "chipfire/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace chipfire {

namespace {

std::unordered_map<std::string, int> build_index(
    const std::vector<std::string>& ids) {
  std::unordered_map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(ids.size()); ++v) index[ids[v]] = v;
  return index;
}

}  // namespace

Graph::Graph(const RawGraph& raw) {
  if (raw.vertices.empty()) fail(Errc::bad_input, "graph has no vertices");

  for (const auto& [id, weight] : raw.vertices) {
    if (id.empty()) fail(Errc::bad_input, "empty vertex id");
    if (weight < 0)
      fail(Errc::negative_weight, "vertex '" + id + "' has negative weight");
    ids_.push_back(id);
    weights_.push_back(weight);
  }

  auto index = build_index(ids_);
  if (static_cast<int>(index.size()) != vertex_count()) {
    for (int v = 0; v < vertex_count(); ++v)
      if (index[ids_[v]] != v)
        fail(Errc::duplicate_vertex_id, "vertex id '" + ids_[v] + "' repeats");
  }

  int n = vertex_count();
  adjacency_.assign(n, std::vector<int>(n, 0));
  for (const auto& [a, b] : raw.edges) {
    auto ia = index.find(a);
    if (ia == index.end())
      fail(Errc::unknown_endpoint, "edge endpoint '" + a + "' is not a vertex");
    auto ib = index.find(b);
    if (ib == index.end())
      fail(Errc::unknown_endpoint, "edge endpoint '" + b + "' is not a vertex");
    int u = ia->second, v = ib->second;
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adjacency_[u][v] += 1;
    if (u != v) adjacency_[v][u] += 1;
  }
  std::sort(edges_.begin(), edges_.end());

  valence_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u)
      valence_[v] += (u == v ? 2 : 1) * adjacency_[v][u];
  }

  // Connectivity over non-loop edges.
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (u != v && adjacency_[v][u] > 0 && !seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      fail(Errc::disconnected, "graph is not connected: vertex '" + ids_[v] +
                                   "' is unreachable from '" + ids_[0] + "'");
}

int Graph::index_of(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (ids_[v] == id) return v;
  fail(Errc::unknown_vertex, "no vertex named '" + id + "'");
}

bool Graph::has_vertex(const std::string& id) const {
  for (const auto& known : ids_)
    if (known == id) return true;
  return false;
}

int Graph::edges_to_set(int v, const VertexSet& s) const {
  int total = 0;
  for (int u : s.members())
    if (u != v) total += adjacency_[v][u];
  return total;
}

Int Graph::genus() const {
  Int g = edge_count() - vertex_count() + 1;
  for (long long w : weights_) g += w;
  return g;
}

Int Graph::canonical_at(int v) const {
  return Int(2) * weights_[v] - 2 + valence_[v];
}

std::vector<VertexSet> Graph::components_excluding(const VertexSet& exclude) const {
  int n = vertex_count();
  std::vector<VertexSet> components;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || exclude.contains(start)) continue;
    VertexSet component(n);
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      component.add(v);
      for (int u = 0; u < n; ++u) {
        if (u != v && adjacency_[v][u] > 0 && !seen[u] && !exclude.contains(u)) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    components.push_back(component);
  }
  return components;
}

std::vector<int> Graph::distances_from(int src) const {
  int n = vertex_count();
  std::vector<int> dist(n, -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (u != v && adjacency_[v][u] > 0 && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<int> Graph::distance_to_set(const VertexSet& s) const {
  if (s.empty()) fail(Errc::empty_vertex_set, "distance to an empty set");
  int n = vertex_count();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  for (int v : s.members()) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u) {
      if (u != v && adjacency_[v][u] > 0 && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

VertexSet Graph::set_of(const std::vector<std::string>& names) const {
  VertexSet s(vertex_count());
  for (const auto& name : names) s.add(index_of(name));
  return s;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.ids_ == b.ids_ && a.weights_ == b.weights_ && a.edges_ == b.edges_;
}

}  // namespace chipfire
