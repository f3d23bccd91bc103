#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wdrd/exact.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

/// An ordering R_0, R_1, ..., R_d of the classes of a scheme. Position 0 is
/// always class 0; `classes()` lists the classes at positions 1..d.
class Ordering {
 public:
  Ordering() = default;
  /// Throws std::invalid_argument unless `classes` is a permutation of 1..d.
  explicit Ordering(std::vector<int> classes);
  static Ordering identity(int d);

  int d() const { return static_cast<int>(classes_.size()); }
  int class_at(int position) const { return position == 0 ? 0 : classes_[static_cast<std::size_t>(position - 1)]; }
  int position_of(int cls) const { return positions_[static_cast<std::size_t>(cls)]; }
  const std::vector<int>& classes() const { return classes_; }

  auto operator<=>(const Ordering& other) const { return classes_ <=> other.classes_; }
  bool operator==(const Ordering& other) const { return classes_ == other.classes_; }

 private:
  std::vector<int> classes_;
  std::vector<int> positions_;
};

enum class SchemeType { short_type, long_type };

const char* to_string(SchemeType t);

struct PPolyProfile {
  Ordering ordering;
  int girth = 0;
  int d = 0;
  SchemeType type = SchemeType::short_type;
  bool stable = false;
  Count k1 = 0;
  /// Valency of R_g when d = g, else 0.
  Count kg = 0;
};

enum class RejectReason {
  /// p^h_{1,i} != 0 for some position h > i+1.
  nonzero_above_subdiagonal,
  /// p^{i+1}_{1,i} == 0.
  zero_subdiagonal,
  /// R_1 is symmetric, so the scheme is symmetric.
  symmetric_first_relation,
  /// d is neither g-1 nor g.
  diameter_not_girth_related,
};

const char* to_string(RejectReason r);

struct PPolyRejection {
  RejectReason reason;
  /// Ordering positions of the first failing entry p^h_{1,i}.
  int i = 0;
  int h = 0;
};

using PPolyResult = std::variant<PPolyProfile, PPolyRejection>;

/// Decides P-polynomiality by the tensor condition: p^h_{1,i} = 0 whenever
/// h > i+1 and p^{i+1}_{1,i} != 0 for i < d (positions w.r.t. `ordering`).
/// On success also computes girth, type, stability and the valencies.
PPolyResult is_p_polynomial(const AssociationScheme& scheme, const Ordering& ordering);

struct OracleResult {
  bool accept = false;
  std::optional<PolySequence> polys;
  std::string reason;
};

/// Independent check through adjacency matrices: builds v_i from the
/// three-term-style recursion and verifies A_i = v_i(A_1) exactly.
OracleResult matrix_oracle(const AssociationScheme& scheme, const Ordering& ordering);

/// A greedy extension that met more than one admissible next class.
struct AmbiguousBranch {
  int first_class = 0;
  int position = 0;
  std::vector<int> candidates;
};

struct OrderingSearch {
  std::vector<Ordering> orderings;  // sorted
  std::vector<AmbiguousBranch> ambiguous;
};

/// Every accepted ordering: each class is tried as R_1 and extended greedily
/// (R_{i+1} is forced to be the unique unused h with p^h_{1,i} != 0).
OrderingSearch search_p_poly_orderings(const AssociationScheme& scheme, int jobs = 1);
std::vector<Ordering> find_p_poly_orderings(const AssociationScheme& scheme, int jobs = 1);

/// star(R_i) = R_{g-i} for 0 < i < g.
bool check_stability(const AssociationScheme& scheme, const PPolyProfile& profile);

struct LongTypeStructure {
  int fiber_size = 0;
  /// Equivalence classes of R_0 u R_g, each sorted, ordered by least member.
  std::vector<std::vector<Vertex>> fibers;
  /// Quotient labelled by ordering positions 0..g-1.
  RelationPartition quotient;
  PPolyProfile quotient_profile;
};

struct NotLong {};

/// For long type, verifies that R_0 u R_g is an equivalence relation with
/// classes of size k_g + 1 and that the quotient is a short-type
/// P-polynomial scheme. Structural failure on long-type input throws
/// std::logic_error.
std::variant<LongTypeStructure, NotLong> long_type_structure(const AssociationScheme& scheme,
                                                            const PPolyProfile& profile);

}  // namespace wdrd
