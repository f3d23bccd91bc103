#include "wdrd/attached.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdrd {

TwoWayPartition two_way_partition(const Digraph& g) {
  const int n = g.size();
  DistanceMatrix dist(g);
  std::vector<DistancePair> classes;
  classes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      auto p = dist.two_way(x, y);
      if (!p.finite()) throw std::invalid_argument("two-way distance needs a strongly connected digraph");
      classes.push_back(p);
    }
  std::vector<DistancePair> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> labels(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k)
    labels[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), classes[k]) - sorted.begin());
  const int d = static_cast<int>(sorted.size()) - 1;
  return {std::move(sorted), RelationPartition(n, d, std::move(labels))};
}

AttachedResult attached_scheme(const Digraph& g, const BuildOptions& options) {
  if (is_undirected(g)) throw std::invalid_argument("digraph is undirected (arc relation is symmetric)");
  auto twp = two_way_partition(g);
  auto result = build_scheme(twp.partition, options);
  if (auto* scheme = std::get_if<AssociationScheme>(&result))
    return AttachedScheme{std::move(*scheme), std::move(twp.classes)};
  return WdrdViolation{std::get<SchemeViolation>(std::move(result)), std::move(twp.classes)};
}

bool is_weakly_distance_regular(const Digraph& g, int jobs) {
  return is_scheme(two_way_partition(g).partition, jobs);
}

}  // namespace wdrd
