#include "fg/pseudoplane.hpp"

#include "fg/sampling.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fg::plane {

Vertex PseudoplaneGraph::add_vertex() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

void PseudoplaneGraph::ensure_vertex(Vertex v) {
  if (v >= adjacency_.size()) {
    adjacency_.resize(v + 1);
  }
}

void PseudoplaneGraph::add_arc(Vertex from, Vertex to) {
  ensure_vertex(std::max(from, to));
  auto& adj = adjacency_[from];
  if (std::find(adj.begin(), adj.end(), to) == adj.end()) {
    adj.push_back(to);
  }
}

void PseudoplaneGraph::add_edge(Vertex u, Vertex v) {
  add_arc(u, v);
  add_arc(v, u);
}

std::span<const Vertex> PseudoplaneGraph::neighbors(Vertex v) const {
  if (!contains(v)) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  return adjacency_[v];
}

bool PseudoplaneGraph::has_arc(Vertex from, Vertex to) const {
  const auto adj = neighbors(from);
  return std::find(adj.begin(), adj.end(), to) != adj.end();
}

std::size_t PseudoplaneGraph::edge_count() const {
  std::size_t count = 0;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      count += u <= v ? 1 : 0;
    }
  }
  return count;
}

void PseudoplaneGraph::write_edge_list(std::ostream& out) const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u <= v) {
        edges.emplace_back(u, v);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) {
    out << u << ' ' << v << '\n';
  }
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    if (adjacency_[u].empty()) {
      out << u << '\n';
    }
  }
}

PseudoplaneGraph PseudoplaneGraph::read_edge_list(std::istream& in, std::size_t target_branching) {
  PseudoplaneGraph g(target_branching);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<long long> ids;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) {
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      }
      ids.push_back(v);
    }
    if (ids.empty()) {
      continue;
    }
    if (ids.size() > 2) {
      throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected 'u v' or 'v'");
    }
    if (ids.size() == 1) {
      g.ensure_vertex(static_cast<Vertex>(ids[0]));
    } else {
      g.add_edge(static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]));
    }
  }
  return g;
}

std::size_t tree_vertex_count(std::size_t branching, std::size_t depth) {
  std::size_t total = 1;
  std::size_t level = branching;  // vertices at depth i+1
  for (std::size_t i = 0; i < depth; ++i) {
    total += level;
    if (total > kMaxExplicitVertices) {
      return kMaxExplicitVertices + 1;
    }
    level *= branching - 1;
  }
  return total;
}

PseudoplaneGraph generate_tree(std::size_t branching, std::size_t depth, std::size_t components, std::uint64_t seed) {
  if (branching < 2 || depth < 1 || components < 1) {
    throw std::invalid_argument("generate_tree needs branching >= 2, depth >= 1, components >= 1");
  }
  const std::size_t per_tree = tree_vertex_count(branching, depth);
  if (per_tree > kMaxExplicitVertices || per_tree * components > kMaxExplicitVertices) {
    throw std::length_error("tree too large to materialize; use LazyRegularForest");
  }
  const std::size_t total = per_tree * components;

  // Seeded relabelling (Fisher-Yates over the construction order).
  std::vector<Vertex> label(total);
  std::iota(label.begin(), label.end(), Vertex{0});
  Sampler rng({seed, 0});
  for (std::size_t i = total; i > 1; --i) {
    std::swap(label[i - 1], label[rng.below(i)]);
  }

  PseudoplaneGraph g(branching);
  g.ensure_vertex(total - 1);
  std::size_t next = 0;
  for (std::size_t c = 0; c < components; ++c) {
    std::vector<std::size_t> frontier{next++};
    for (std::size_t level = 0; level < depth; ++level) {
      const std::size_t kids = level == 0 ? branching : branching - 1;
      std::vector<std::size_t> below;
      below.reserve(frontier.size() * kids);
      for (std::size_t parent : frontier) {
        for (std::size_t k = 0; k < kids; ++k) {
          const std::size_t child = next++;
          g.add_edge(label[parent], label[child]);
          below.push_back(child);
        }
      }
      frontier = std::move(below);
    }
  }
  return g;
}

AxiomReport axiom_check(const PseudoplaneGraph& g) {
  AxiomReport r;
  const std::size_t n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u == v) {
        r.irreflexive = false;
        r.violations.push_back("self-loop at " + std::to_string(u));
      } else if (!g.has_arc(v, u)) {
        r.symmetric = false;
        r.violations.push_back("arc " + std::to_string(u) + "->" + std::to_string(v) + " has no reverse");
      }
    }
  }

  // Union-find over undirected edges; the first edge closing a loop yields
  // the witness cycle via the tree path between its endpoints.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::vector<Vertex>> forest(n);
  for (Vertex u = 0; u < n && r.acyclic; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) {
        continue;
      }
      const Vertex ru = find(u);
      const Vertex rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        forest[u].push_back(v);
        forest[v].push_back(u);
        continue;
      }
      r.acyclic = false;
      std::vector<Vertex> prev(n, n);
      std::deque<Vertex> queue{u};
      prev[u] = u;
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (x == v) {
          break;
        }
        for (Vertex y : forest[x]) {
          if (prev[y] == n) {
            prev[y] = x;
            queue.push_back(y);
          }
        }
      }
      for (Vertex x = v; x != u; x = prev[x]) {
        r.cycle_witness.push_back(x);
      }
      r.cycle_witness.push_back(u);
      r.cycle_witness.push_back(v);
      std::ostringstream os;
      os << "loop of length " << r.cycle_witness.size() - 1 << ":";
      for (Vertex x : r.cycle_witness) {
        os << ' ' << x;
      }
      r.violations.push_back(os.str());
      break;
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < g.target_branching()) {
      r.boundary.push_back(u);
    }
  }
  return r;
}

std::vector<Vertex> tree_centers(const PseudoplaneGraph& g) {
  // Peel leaves layer by layer; the last layer of each component is its
  // center (one vertex, or two adjacent ones for odd diameter).
  const std::size_t n = g.size();
  std::vector<std::size_t> remaining(n);
  std::vector<std::size_t> layer_of(n, 0);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    if (remaining[v] <= 1) {
      layer.push_back(v);
    }
  }
  std::vector<bool> removed(n, false);
  std::size_t depth = 0;
  while (!layer.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      removed[v] = true;
      layer_of[v] = depth;
    }
    for (Vertex v : layer) {
      for (Vertex u : g.neighbors(v)) {
        if (!removed[u] && --remaining[u] == 1) {
          next.push_back(u);
        }
      }
    }
    layer = std::move(next);
    ++depth;
  }
  // A center has no neighbor peeled later; of two tied centers keep the smaller.
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      throw std::invalid_argument("tree_centers: graph has a cycle");
    }
    const auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) {
          return layer_of[u] > layer_of[v] || (layer_of[u] == layer_of[v] && u < v);
        })) {
      out.push_back(v);
    }
  }
  return out;
}

RankValue rank(const PseudoplaneGraph& g, Vertex a, Vertex b) {
  if (!g.contains(a) || !g.contains(b)) {
    throw std::out_of_range("rank: unknown vertex");
  }
  if (a == b) {
    return RankValue::finite(0);
  }
  std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == std::numeric_limits<std::size_t>::max()) {
        dist[y] = dist[x] + 1;
        if (y == b) {
          return RankValue::finite(dist[y]);
        }
        queue.push_back(y);
      }
    }
  }
  return RankValue::omega();
}

LazyRegularForest::LazyRegularForest(std::size_t branching, std::size_t depth, std::size_t components)
    : branching_(branching), max_depth_(depth), components_(components) {
  if (branching < 2 || depth < 1 || components < 1) {
    throw std::invalid_argument("LazyRegularForest needs branching >= 2, depth >= 1, components >= 1");
  }
  for (std::size_t c = 0; c < components; ++c) {
    parent_.push_back(kNone);
    depth_.push_back(0);
    component_.push_back(c);
    expanded_.push_back(false);
    neighbors_.emplace_back();
  }
}

std::span<const Vertex> LazyRegularForest::neighbors(Vertex v) {
  if (!contains(v)) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  if (!expanded_[v]) {
    expanded_[v] = true;
    if (parent_[v] != kNone) {
      neighbors_[v].push_back(parent_[v]);
    }
    if (depth_[v] < max_depth_) {
      const std::size_t kids = parent_[v] == kNone ? branching_ : branching_ - 1;
      for (std::size_t k = 0; k < kids; ++k) {
        const Vertex child = parent_.size();
        parent_.push_back(v);
        depth_.push_back(depth_[v] + 1);
        component_.push_back(component_[v]);
        expanded_.push_back(false);
        neighbors_.emplace_back();
        neighbors_[v].push_back(child);
      }
    }
  }
  return neighbors_[v];
}

std::size_t LazyRegularForest::degree(Vertex v) const {
  if (!contains(v)) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  const std::size_t up = parent_[v] == kNone ? 0 : 1;
  if (depth_[v] == max_depth_) {
    return up;
  }
  return up + (parent_[v] == kNone ? branching_ : branching_ - 1);
}

RankValue LazyRegularForest::rank(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) {
    throw std::out_of_range("rank: unknown vertex");
  }
  if (component_[a] != component_[b]) {
    return RankValue::omega();
  }
  std::size_t steps = 0;
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      a = parent_[a];
    } else {
      b = parent_[b];
    }
    ++steps;
  }
  return RankValue::finite(steps);
}

PseudoplaneGraph LazyRegularForest::snapshot() const {
  PseudoplaneGraph g(branching_);
  g.ensure_vertex(parent_.size() - 1);
  for (Vertex v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kNone) {
      g.add_edge(parent_[v], v);
    }
  }
  return g;
}

RankValue rank(const LazyRegularForest& g, Vertex a, Vertex b) { return g.rank(a, b); }

WalkError::WalkError(std::size_t step, const std::string& reason)
    : std::runtime_error("claim walk step " + std::to_string(step) + ": " + reason), step_(step) {}

namespace {

template <typename Graph>
bool is_boundary(const Graph& g, Vertex v) {
  return g.degree(v) < g.target_branching();
}

// Picks uniformly among neighbors of `from` other than `previous`. When the
// chosen vertex must later supply a fresh neighbor of its own, boundary
// vertices are not eligible.
template <typename Graph>
Vertex fresh_neighbor(Graph& g, Vertex from, Vertex previous, bool needs_onward, std::size_t step, Sampler& rng) {
  std::vector<Vertex> options;
  for (Vertex v : g.neighbors(from)) {
    if (v != previous && !(needs_onward && is_boundary(g, v))) {
      options.push_back(v);
    }
  }
  if (options.empty()) {
    throw WalkError(step, "vertex " + std::to_string(from) + " has no admissible fresh neighbor");
  }
  return options[rng.below(options.size())];
}

template <typename Graph>
ClaimWalk walk_impl(Graph& g, Vertex a0, Vertex b0, std::size_t n, std::uint64_t seed) {
  if (!g.contains(a0) || !g.contains(b0)) {
    throw std::out_of_range("claim_walk: unknown start vertex");
  }
  const auto adj = g.neighbors(a0);
  if (std::find(adj.begin(), adj.end(), b0) == adj.end()) {
    throw std::invalid_argument("claim_walk: a0 and b0 must be adjacent");
  }
  ClaimWalk walk;
  walk.sequence = {a0, b0};
  Sampler rng({seed, n});
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a_prev = walk.a(i);
    const Vertex b_prev = walk.b(i);
    const Vertex a_next = fresh_neighbor(g, b_prev, a_prev, true, i + 1, rng);
    const Vertex b_next = fresh_neighbor(g, a_next, b_prev, i + 1 < n, i + 1, rng);
    walk.sequence.push_back(a_next);
    walk.sequence.push_back(b_next);
  }
  walk.distance = rank(g, walk.b(0), walk.b(n));
  return walk;
}

}  // namespace

ClaimWalk claim_walk(const PseudoplaneGraph& g, Vertex a0, Vertex b0, std::size_t n, std::uint64_t seed) {
  return walk_impl(g, a0, b0, n, seed);
}

ClaimWalk claim_walk(LazyRegularForest& g, Vertex a0, Vertex b0, std::size_t n, std::uint64_t seed) {
  return walk_impl(g, a0, b0, n, seed);
}

}  // namespace fg::plane
