#include "wdrd/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wdrd {

std::string to_string(DistancePair p) {
  auto part = [](int v) { return v == kUnreachable ? std::string("inf") : std::to_string(v); };
  return "(" + part(p.forward) + "," + part(p.backward) + ")";
}

Digraph::Digraph(int n, std::vector<std::vector<Vertex>> out_adjacency)
    : n_(n), out_(std::move(out_adjacency)) {
  if (n <= 0) throw std::invalid_argument("digraph needs at least one vertex");
  if (out_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("adjacency list count does not match vertex count");
  for (Vertex u = 0; u < n; ++u) {
    auto& nbrs = out_[static_cast<std::size_t>(u)];
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      Vertex v = nbrs[k];
      if (v < 0 || v >= n)
        throw std::invalid_argument("arc " + std::to_string(u) + "->" + std::to_string(v) +
                                    " leaves the vertex range");
      if (v == u) throw std::invalid_argument("loop at vertex " + std::to_string(u));
      if (k > 0 && nbrs[k - 1] == v)
        throw std::invalid_argument("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    }
  }
}

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
  if (n <= 0) throw std::invalid_argument("digraph needs at least one vertex");
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n) throw std::invalid_argument("arc tail out of range");
    out[static_cast<std::size_t>(u)].push_back(v);
  }
  return Digraph(n, std::move(out));
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto nbrs = out(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : out_) total += nbrs.size();
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) result.emplace_back(u, v);
  return result;
}

Digraph directed_cycle(int n) {
  if (n < 3) throw std::invalid_argument("directed cycle needs n >= 3");
  const int step[] = {1};
  return circulant(n, step);
}

Digraph circulant(int n, std::span<const int> connection) {
  if (n < 2) throw std::invalid_argument("circulant needs n >= 2");
  std::vector<int> steps;
  for (int s : connection) {
    int r = ((s % n) + n) % n;
    if (r == 0) throw std::invalid_argument("connection set contains 0 mod n");
    steps.push_back(r);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (steps.empty()) throw std::invalid_argument("empty connection set");
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    for (int s : steps) out[static_cast<std::size_t>(v)].push_back((v + s) % n);
  return Digraph(n, std::move(out));
}

Digraph lex_product(const Digraph& base, int m, FiberKind kind) {
  if (m < 2) throw std::invalid_argument("lexicographic product needs fiber size >= 2");
  if (!is_strongly_connected(base))
    throw std::invalid_argument("lexicographic product needs a strongly connected base");
  const int n = base.size();
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (Vertex x = 0; x < n; ++x) {
    for (int a = 0; a < m; ++a) {
      auto& nbrs = out[static_cast<std::size_t>(x * m + a)];
      for (Vertex y : base.out(x))
        for (int b = 0; b < m; ++b) nbrs.push_back(y * m + b);
      if (kind == FiberKind::complete)
        for (int b = 0; b < m; ++b)
          if (b != a) nbrs.push_back(x * m + b);
    }
  }
  return Digraph(n * m, std::move(out));
}

Digraph transpose(const Digraph& g) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.size()));
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u)) out[static_cast<std::size_t>(v)].push_back(u);
  return Digraph(g.size(), std::move(out));
}

std::vector<int> bfs_distances(const Digraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.out(u)) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Digraph& g) : n_(g.size()) {
  d_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs_distances(g, s);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

DistancePair two_way_distance(const Digraph& g, Vertex x, Vertex y) {
  if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
    throw std::out_of_range("vertex out of range");
  return {bfs_distances(g, x)[static_cast<std::size_t>(y)],
          bfs_distances(g, y)[static_cast<std::size_t>(x)]};
}

bool is_strongly_connected(const Digraph& g) {
  auto reaches_all = [](const std::vector<int>& d) {
    return std::none_of(d.begin(), d.end(), [](int v) { return v == kUnreachable; });
  };
  return reaches_all(bfs_distances(g, 0)) && reaches_all(bfs_distances(transpose(g), 0));
}

bool is_undirected(const Digraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.out(u))
      if (!g.has_arc(v, u)) return false;
  return true;
}

std::optional<int> girth(const Digraph& g) {
  // Shortest circuit through v is min over arcs u->v of d(v,u) + 1.
  const Digraph rev = transpose(g);
  std::optional<int> best;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto dist = bfs_distances(g, v);
    for (Vertex u : rev.out(v)) {
      int d = dist[static_cast<std::size_t>(u)];
      if (d == kUnreachable) continue;
      if (!best || d + 1 < *best) best = d + 1;
    }
  }
  return best;
}

Metrics metrics(const Digraph& g) {
  Metrics m;
  DistanceMatrix dist(g);
  int diameter = 0;
  bool connected = true;
  for (Vertex x = 0; x < g.size() && connected; ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      int d = dist.at(x, y);
      if (d == kUnreachable) {
        connected = false;
        break;
      }
      diameter = std::max(diameter, d);
    }
  m.strongly_connected = connected;
  if (connected) m.diameter = diameter;
  m.girth = girth(g);
  m.undirected = is_undirected(g);
  return m;
}

}  // namespace wdrd
