#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wdrd {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Sentinel for "no path".
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Two-way distance (d(x,y), d(y,x)). Components are kUnreachable when no
/// path exists.
struct DistancePair {
  int forward = 0;
  int backward = 0;

  auto operator<=>(const DistancePair&) const = default;

  DistancePair swapped() const { return {backward, forward}; }
  bool finite() const { return forward != kUnreachable && backward != kUnreachable; }
};

/// "(1,2)", with "inf" for unreachable components.
std::string to_string(DistancePair p);

/// Finite simple loop-free digraph on vertices 0..n-1. Immutable.
class Digraph {
 public:
  /// Throws std::invalid_argument on loops, duplicate arcs or out-of-range
  /// neighbours. Neighbour lists are stored sorted.
  Digraph(int n, std::vector<std::vector<Vertex>> out_adjacency);

  static Digraph from_arcs(int n, std::span<const Arc> arcs);

  int size() const { return n_; }
  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  bool has_arc(Vertex u, Vertex v) const;
  std::size_t arc_count() const;
  /// Arcs in row-major order.
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_;
  std::vector<std::vector<Vertex>> out_;
};

enum class FiberKind { complete, empty };

/// v -> v+1 mod n. Requires n >= 3.
Digraph directed_cycle(int n);

/// Cayley digraph of Z_n: v -> v+s for s in the connection set. Requires
/// n >= 2 and a nonempty connection set without 0 (mod n).
Digraph circulant(int n, std::span<const int> connection);

/// Vertex (x,a) of the product is x*m + a. Arcs (x,a)->(y,b) whenever x->y in
/// base; with complete fibers also (x,a)->(x,b) for a != b.
/// Requires base strongly connected and m >= 2.
Digraph lex_product(const Digraph& base, int m, FiberKind kind);

Digraph transpose(const Digraph& g);

/// BFS distances from source; kUnreachable where unreachable.
std::vector<int> bfs_distances(const Digraph& g, Vertex source);

/// All-pairs forward distances, one BFS per source.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Digraph& g);

  int size() const { return n_; }
  int at(Vertex x, Vertex y) const {
    return d_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  DistancePair two_way(Vertex x, Vertex y) const { return {at(x, y), at(y, x)}; }

 private:
  int n_;
  std::vector<int> d_;
};

DistancePair two_way_distance(const Digraph& g, Vertex x, Vertex y);

struct Metrics {
  std::optional<int> diameter;  // empty when not strongly connected
  std::optional<int> girth;     // empty when acyclic
  bool strongly_connected = false;
  bool undirected = false;
};

Metrics metrics(const Digraph& g);

bool is_strongly_connected(const Digraph& g);
/// True iff the arc relation is symmetric.
bool is_undirected(const Digraph& g);
/// Length of a shortest directed circuit.
std::optional<int> girth(const Digraph& g);

}  // namespace wdrd
