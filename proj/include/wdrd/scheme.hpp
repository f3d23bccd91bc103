#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wdrd/digraph.hpp"

namespace wdrd {

using Count = std::int64_t;

struct VertexPair {
  Vertex x = 0;
  Vertex y = 0;
  auto operator<=>(const VertexPair&) const = default;
};

/// Labelling of X x X into classes 0..d; class 0 is exactly the diagonal and
/// every class is nonempty. Labels are stored row-major.
class RelationPartition {
 public:
  /// Throws std::invalid_argument when the diagonal or nonemptiness
  /// invariants fail or a label lies outside [0, d].
  RelationPartition(int n, int d, std::vector<int> labels);

  int points() const { return n_; }
  /// Number of non-diagonal classes.
  int d() const { return d_; }
  int label(Vertex x, Vertex y) const {
    return labels_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  }
  std::span<const int> labels() const { return labels_; }

  bool operator==(const RelationPartition&) const = default;

 private:
  int n_;
  int d_;
  std::vector<int> labels_;
};

/// True iff both partitions have the same classes as sets of pairs, whatever
/// the labels.
bool same_partition(const RelationPartition& a, const RelationPartition& b);

/// Dense intersection tensor p^h_{i,j} with valencies and the involution.
/// Deliberately unvalidated so hand-built fixtures can be fed to checkers.
class IntersectionNumbers {
 public:
  IntersectionNumbers() = default;
  explicit IntersectionNumbers(int d);

  int d() const { return d_; }
  Count p(int h, int i, int j) const { return p_[index(h, i, j)]; }
  void set_p(int h, int i, int j, Count value) { p_[index(h, i, j)] = value; }
  Count k(int i) const { return k_[static_cast<std::size_t>(i)]; }
  void set_k(int i, Count value) { k_[static_cast<std::size_t>(i)] = value; }
  int star(int i) const { return star_[static_cast<std::size_t>(i)]; }
  void set_star(int i, int value) { star_[static_cast<std::size_t>(i)] = value; }

  bool operator==(const IntersectionNumbers&) const = default;

 private:
  std::size_t index(int h, int i, int j) const {
    const auto c = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(h) * c + static_cast<std::size_t>(i)) * c + static_cast<std::size_t>(j);
  }

  int d_ = 0;
  std::vector<Count> p_;
  std::vector<Count> k_;
  std::vector<int> star_;
};

/// A partition that passed the scheme axioms, together with its numbers.
/// Only build_scheme creates these.
class AssociationScheme {
 public:
  const RelationPartition& partition() const { return partition_; }
  const IntersectionNumbers& numbers() const { return numbers_; }

  int points() const { return partition_.points(); }
  int d() const { return partition_.d(); }
  Count p(int h, int i, int j) const { return numbers_.p(h, i, j); }
  Count valency(int i) const { return numbers_.k(i); }
  int star(int i) const { return numbers_.star(i); }
  int label(Vertex x, Vertex y) const { return partition_.label(x, y); }

 private:
  friend struct SchemeBuilder;
  AssociationScheme(RelationPartition partition, IntersectionNumbers numbers)
      : partition_(std::move(partition)), numbers_(std::move(numbers)) {}

  RelationPartition partition_;
  IntersectionNumbers numbers_;
};

/// Transpose failure: pair lies in class `label`, but its transpose is not
/// in the class holding the transpose of the class's first pair.
struct TransposeWitness {
  VertexPair first;     // first pair of the class, row-major
  VertexPair offender;  // first pair whose transpose lands elsewhere
  int label = 0;
  int expected_reverse = 0;
  int actual_reverse = 0;
};

/// Constancy failure: |{z : (x,z) in R_i, (z,y) in R_j}| differs between two
/// pairs of R_h. `first` is the first pair of R_h in row-major order and
/// `second` the first pair whose count differs from it.
struct ConstancyWitness {
  int h = 0, i = 0, j = 0;
  VertexPair first;
  VertexPair second;
  Count count_first = 0;
  Count count_second = 0;

  auto operator<=>(const ConstancyWitness&) const = default;
};

struct SchemeViolation {
  /// Lexicographically first witness (scan order h, i, j, then pairs).
  std::variant<TransposeWitness, ConstancyWitness> first;
  /// Every failing (h,i,j), sorted; empty for transpose failures or when
  /// the build stopped early.
  std::vector<ConstancyWitness> constancy;
};

struct BuildOptions {
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
  /// When false the scan stops at the first failing row and only `first`
  /// is meaningful (it is then not guaranteed lexicographically minimal).
  bool collect_all = true;
};

using SchemeResult = std::variant<AssociationScheme, SchemeViolation>;

/// Checks transpose closure and constant triple counts exhaustively; returns
/// the scheme with its full tensor or a witness.
SchemeResult build_scheme(const RelationPartition& partition, const BuildOptions& options = {});

/// Cheap yes/no variant of build_scheme.
bool is_scheme(const RelationPartition& partition, int jobs = 1);

/// Result of checking the standard intersection-number identities
///   p^h_{i,j} k_h = p^i_{h,j*} k_i = p^j_{i*,h} k_j
///   sum_r p^r_{e,l} p^h_{m,r} = sum_t p^t_{m,e} p^h_{t,l}
struct ConsistencyReport {
  bool holds = true;
  /// "valency" or "associativity" for the first failure.
  std::string identity;
  /// (h,i,j) or (e,l,m,h).
  std::vector<int> indices;
  Count lhs = 0;
  Count rhs = 0;
};

ConsistencyReport check_consistency(const IntersectionNumbers& numbers);
inline ConsistencyReport check_consistency(const AssociationScheme& s) { return check_consistency(s.numbers()); }

bool is_commutative(const IntersectionNumbers& numbers);
inline bool is_commutative(const AssociationScheme& s) { return is_commutative(s.numbers()); }

}  // namespace wdrd
