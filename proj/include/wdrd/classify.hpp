#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdrd/families.hpp"
#include "wdrd/ppoly.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

enum class RejectionReason { not_strongly_connected, undirected, not_wdrd, attached_scheme_differs };

const char* to_string(RejectionReason r);

struct UnionRejection {
  PositionSet positions;
  RejectionReason reason;

  bool operator==(const UnionRejection&) const = default;
};

struct UnionEnumeration {
  /// Ordered by size, then lexicographically.
  std::vector<PositionSet> found;
  std::vector<UnionRejection> rejections;
};

struct EnumerateOptions {
  /// Refuse to enumerate 2^d - 1 unions beyond this d.
  int max_d = 24;
  /// 0 means hardware concurrency.
  int jobs = 0;
};

/// Every nonempty position set whose union digraph is strongly connected,
/// not undirected, weakly distance-regular, and has exactly the scheme's
/// partition as its attached partition. Throws std::invalid_argument when d
/// exceeds options.max_d.
UnionEnumeration enumerate_valid_unions(const AssociationScheme& scheme, const Ordering& ordering,
                                        const EnumerateOptions& options = {});

enum class Verdict { match, found_minus_predicted, predicted_minus_found };

const char* to_string(Verdict v);

struct ClassificationReport {
  std::string scheme_id;
  PPolyProfile profile;
  std::vector<PositionSet> found;
  std::vector<UnionCandidate> predicted;
  /// found_minus_predicted whenever found is not contained in predicted,
  /// predicted_minus_found when only the converse fails.
  Verdict verdict = Verdict::match;
  std::vector<PositionSet> found_not_predicted;
  std::vector<PositionSet> predicted_not_found;
  std::vector<UnionRejection> rejections;
};

/// Enumerates the valid unions and compares them with theorem_menu.
/// Throws std::invalid_argument if the ordering is not P-polynomial.
ClassificationReport verify_theorem(const AssociationScheme& scheme, const Ordering& ordering,
                                    const EnumerateOptions& options = {}, std::string scheme_id = {});

enum class LemmaId {
  two_step_meets_arc,       // p^1_{2,i} != 0,                 1 <= i <= g-1
  forward_below_backward,   // p^i_{1,i+1} < p^i_{g-1,i+1},    0 <= i <= min{3, g-3}
  level_counts_increase,    // p^i_{1,i} < p^{i+1}_{1,i+1},    0 <= i <= min{2, g/2-1}
  equal_steps_meet_arc,     // p^1_{i,i} != 0,                 0 < i <= (g+1)/2
  two_two_reaches,          // p^i_{2,2} != 0,                 1 <= i <= min{4, g-1}
};

enum class LemmaStatus { holds, violated, hypothesis_not_met };

const char* to_string(LemmaId id);
const char* formula(LemmaId id);
const char* to_string(LemmaStatus s);

struct LemmaResult {
  LemmaId id;
  LemmaStatus status;
  /// First failing index i when violated.
  std::optional<int> witness;
};

struct LemmaReport {
  std::vector<LemmaResult> results;
};

/// Evaluates the five intersection-number inequalities that hold for
/// distance-regular digraphs with k_1 > k_g + 1. Indices are ordering
/// positions. Accepts unvalidated numbers so the checker itself can be tested.
LemmaReport check_lemmas(const IntersectionNumbers& numbers, const PPolyProfile& profile);
inline LemmaReport check_lemmas(const AssociationScheme& s, const PPolyProfile& profile) {
  return check_lemmas(s.numbers(), profile);
}

}  // namespace wdrd
