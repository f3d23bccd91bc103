#pragma once

#include <variant>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

/// Partition of V x V by two-way distance. Class c carries the pair
/// classes[c]; classes are sorted lexicographically so (0,0) is class 0.
struct TwoWayPartition {
  std::vector<DistancePair> classes;
  RelationPartition partition;
};

/// Throws std::invalid_argument when g is not strongly connected.
TwoWayPartition two_way_partition(const Digraph& g);

struct AttachedScheme {
  AssociationScheme scheme;
  std::vector<DistancePair> labels;
};

/// The digraph is not weakly distance-regular; `violation` is expressed in
/// class indices, `labels` maps them to two-way distances.
struct WdrdViolation {
  SchemeViolation violation;
  std::vector<DistancePair> labels;
};

using AttachedResult = std::variant<AttachedScheme, WdrdViolation>;

/// Attached scheme of a strongly connected, not undirected digraph. Throws
/// std::invalid_argument when either precondition fails.
AttachedResult attached_scheme(const Digraph& g, const BuildOptions& options = {});

bool is_weakly_distance_regular(const Digraph& g, int jobs = 1);

}  // namespace wdrd
