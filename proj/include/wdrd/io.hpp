#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdrd/attached.hpp"
#include "wdrd/classify.hpp"
#include "wdrd/digraph.hpp"
#include "wdrd/families.hpp"
#include "wdrd/ppoly.hpp"
#include "wdrd/scheme.hpp"

namespace wdrd {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error(reason + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line 1: "n"; then one "u v" arc per line. Blank lines are ignored.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& g);

struct SchemeFile {
  RelationPartition partition;
  std::optional<std::vector<DistancePair>> labels;
};

/// Line 1: "n d"; then n rows of n labels; optionally "labels: (0,0) ...".
SchemeFile parse_scheme_file(std::string_view text);
std::string format_scheme_file(const RelationPartition& partition,
                               const std::optional<std::vector<DistancePair>>& labels = std::nullopt);

/// Parses "3,1,2" into an ordering.
Ordering parse_ordering(std::string_view text);

std::string format_profile(const PPolyProfile& profile);
std::string format_rejection(const PPolyRejection& rejection);
std::string format_menu(const std::vector<UnionCandidate>& menu);
/// `labels` names classes by two-way distance when available.
std::string format_violation(const SchemeViolation& violation,
                             const std::optional<std::vector<DistancePair>>& labels = std::nullopt);
std::string format_enumeration(const UnionEnumeration& enumeration);
std::string format_report(const ClassificationReport& report);
std::string format_lemmas(const LemmaReport& report);

}  // namespace wdrd
