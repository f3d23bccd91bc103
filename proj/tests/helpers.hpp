#pragma once

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "oracle.hpp"
#include "wdrd/attached.hpp"
#include "wdrd/classify.hpp"
#include "wdrd/digraph.hpp"
#include "wdrd/families.hpp"
#include "wdrd/ppoly.hpp"

namespace testing {

inline wdrd::Digraph circ(int n, std::vector<int> steps) { return wdrd::circulant(n, steps); }

inline wdrd::Digraph lex(int n, int m, wdrd::FiberKind kind) {
  return wdrd::lex_product(wdrd::directed_cycle(n), m, kind);
}

inline wdrd::AttachedScheme attached_ok(const wdrd::Digraph& g, int jobs = 1) {
  wdrd::BuildOptions options;
  options.jobs = jobs;
  auto result = wdrd::attached_scheme(g, options);
  if (!std::holds_alternative<wdrd::AttachedScheme>(result)) throw std::runtime_error("expected a scheme");
  return std::get<wdrd::AttachedScheme>(std::move(result));
}

inline wdrd::PPolyProfile profile_ok(const wdrd::AssociationScheme& s, const wdrd::Ordering& o) {
  auto result = wdrd::is_p_polynomial(s, o);
  if (!std::holds_alternative<wdrd::PPolyProfile>(result)) throw std::runtime_error("expected P-polynomial");
  return std::get<wdrd::PPolyProfile>(result);
}

inline std::vector<wdrd::PositionSet> positions_of(const std::vector<wdrd::UnionCandidate>& menu) {
  std::vector<wdrd::PositionSet> out;
  for (const auto& c : menu) out.push_back(c.positions);
  return out;
}

inline oracle::Matrix labels_matrix(const wdrd::RelationPartition& p) {
  oracle::Matrix m(p.points(), std::vector<int>(p.points()));
  for (int x = 0; x < p.points(); ++x)
    for (int y = 0; y < p.points(); ++y) m[x][y] = p.label(x, y);
  return m;
}

/// Cycles C_3..C_12 and lex products of C_3..C_8 with m in {2,3}, both fiber kinds.
inline std::vector<std::pair<std::string, wdrd::Digraph>> corpus() {
  std::vector<std::pair<std::string, wdrd::Digraph>> out;
  for (int n = 3; n <= 12; ++n) out.emplace_back("C" + std::to_string(n), wdrd::directed_cycle(n));
  for (int n = 3; n <= 8; ++n)
    for (int m : {2, 3})
      for (auto kind : {wdrd::FiberKind::complete, wdrd::FiberKind::empty})
        out.emplace_back("lex(C" + std::to_string(n) + "," + std::to_string(m) + "," +
                             (kind == wdrd::FiberKind::complete ? "complete" : "empty") + ")",
                         lex(n, m, kind));
  return out;
}

}  // namespace testing
