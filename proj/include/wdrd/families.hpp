#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wdrd/digraph.hpp"
#include "wdrd/ppoly.hpp"

namespace wdrd {

/// Sorted set of ordering positions in 1..d.
using PositionSet = std::vector<int>;

/// The six relation-union shapes of the classification.
enum class TheoremCase { i, ii, iii, iv, v, vi };

const char* to_string(TheoremCase c);

struct UnionCandidate {
  PositionSet positions;
  std::optional<TheoremCase> case_tag;

  bool operator==(const UnionCandidate&) const = default;
};

/// Unions allowed by the side conditions on (g, d, k_1, k_g):
///   i   {1}, {g-1}
///   ii  {2}, {g-2}            k_1 > k_g+1, g in {6,8}
///   iii {1,2}, {g-2,g-1}      g even
///   iv  {1,g}, {g-1,g}        d = g
///   v   {2,g}, {g-2,g}        k_1 > k_g+1, d = g, g in {6,8}
///   vi  {1,2,g}, {g-2,g-1,g}  d = g, g even, g > 4
/// Listed in case order; a union already listed is not repeated.
std::vector<UnionCandidate> theorem_menu(const PPolyProfile& profile);

/// (X, union of R_i for i in positions). Throws std::invalid_argument for an
/// empty set, position 0, or positions beyond d.
Digraph build_union(const AssociationScheme& scheme, const Ordering& ordering, const PositionSet& positions);

/// Image of a position set under i -> position of star(R_i).
PositionSet star_image(const AssociationScheme& scheme, const Ordering& ordering, const PositionSet& positions);

std::string to_string(const PositionSet& positions);

}  // namespace wdrd
