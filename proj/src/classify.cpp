#include "wdrd/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "parallel.hpp"
#include "wdrd/attached.hpp"

namespace wdrd {

const char* to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::not_strongly_connected: return "not_strongly_connected";
    case RejectionReason::undirected: return "undirected";
    case RejectionReason::not_wdrd: return "not_wdrd";
    case RejectionReason::attached_scheme_differs: return "attached_scheme_differs";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::found_minus_predicted: return "found_minus_predicted";
    case Verdict::predicted_minus_found: return "predicted_minus_found";
  }
  return "unknown";
}

namespace {

bool size_then_lex(const PositionSet& a, const PositionSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

PositionSet positions_of_mask(std::uint32_t mask) {
  PositionSet out;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1)
    if (mask & 1U) out.push_back(bit + 1);
  return out;
}

constexpr std::uint8_t kValid = 0xff;

}  // namespace

UnionEnumeration enumerate_valid_unions(const AssociationScheme& s, const Ordering& o,
                                        const EnumerateOptions& options) {
  const int d = s.d();
  if (d > options.max_d)
    throw std::invalid_argument("d = " + std::to_string(d) + " exceeds the enumeration cap " +
                                std::to_string(options.max_d));
  if (d > 31) throw std::invalid_argument("enumeration supports d <= 31");
  const std::size_t total = (std::size_t{1} << d) - 1;
  std::vector<std::uint8_t> status(total, 0);

  detail::parallel_for(total, options.jobs, [&](std::size_t slot) {
    const auto positions = positions_of_mask(static_cast<std::uint32_t>(slot + 1));
    const Digraph g = build_union(s, o, positions);
    std::uint8_t verdict;
    if (!is_strongly_connected(g)) {
      verdict = static_cast<std::uint8_t>(RejectionReason::not_strongly_connected);
    } else if (is_undirected(g)) {
      verdict = static_cast<std::uint8_t>(RejectionReason::undirected);
    } else {
      auto twp = two_way_partition(g);
      // Equal partitions make the candidate's attached partition the
      // already-verified scheme, so weak distance-regularity follows.
      if (same_partition(twp.partition, s.partition()))
        verdict = kValid;
      else if (!is_scheme(twp.partition, 1))
        verdict = static_cast<std::uint8_t>(RejectionReason::not_wdrd);
      else
        verdict = static_cast<std::uint8_t>(RejectionReason::attached_scheme_differs);
    }
    status[slot] = verdict;
  });

  UnionEnumeration out;
  for (std::size_t slot = 0; slot < total; ++slot) {
    auto positions = positions_of_mask(static_cast<std::uint32_t>(slot + 1));
    if (status[slot] == kValid)
      out.found.push_back(std::move(positions));
    else
      out.rejections.push_back({std::move(positions), static_cast<RejectionReason>(status[slot])});
  }
  std::sort(out.found.begin(), out.found.end(), size_then_lex);
  std::sort(out.rejections.begin(), out.rejections.end(),
            [](const auto& a, const auto& b) { return size_then_lex(a.positions, b.positions); });
  return out;
}

ClassificationReport verify_theorem(const AssociationScheme& s, const Ordering& o, const EnumerateOptions& options,
                                    std::string scheme_id) {
  auto checked = is_p_polynomial(s, o);
  auto* profile = std::get_if<PPolyProfile>(&checked);
  if (!profile) throw std::invalid_argument("ordering is not P-polynomial");

  ClassificationReport report;
  report.scheme_id = std::move(scheme_id);
  report.profile = *profile;
  auto enumeration = enumerate_valid_unions(s, o, options);
  report.found = std::move(enumeration.found);
  report.rejections = std::move(enumeration.rejections);
  report.predicted = theorem_menu(*profile);

  auto predicted_has = [&](const PositionSet& p) {
    return std::any_of(report.predicted.begin(), report.predicted.end(),
                       [&](const auto& u) { return u.positions == p; });
  };
  for (const auto& f : report.found)
    if (!predicted_has(f)) report.found_not_predicted.push_back(f);
  for (const auto& u : report.predicted)
    if (std::find(report.found.begin(), report.found.end(), u.positions) == report.found.end())
      report.predicted_not_found.push_back(u.positions);

  if (!report.found_not_predicted.empty())
    report.verdict = Verdict::found_minus_predicted;
  else if (!report.predicted_not_found.empty())
    report.verdict = Verdict::predicted_minus_found;
  else
    report.verdict = Verdict::match;
  return report;
}

const char* to_string(LemmaId id) {
  switch (id) {
    case LemmaId::two_step_meets_arc: return "two_step_meets_arc";
    case LemmaId::forward_below_backward: return "forward_below_backward";
    case LemmaId::level_counts_increase: return "level_counts_increase";
    case LemmaId::equal_steps_meet_arc: return "equal_steps_meet_arc";
    case LemmaId::two_two_reaches: return "two_two_reaches";
  }
  return "unknown";
}

const char* formula(LemmaId id) {
  switch (id) {
    case LemmaId::two_step_meets_arc: return "p^1_{2,i}!=0 for 1<=i<=g-1";
    case LemmaId::forward_below_backward: return "p^i_{1,i+1}<p^i_{g-1,i+1} for 0<=i<=min(3,g-3)";
    case LemmaId::level_counts_increase: return "p^i_{1,i}<p^{i+1}_{1,i+1} for 0<=i<=min(2,g/2-1)";
    case LemmaId::equal_steps_meet_arc: return "p^1_{i,i}!=0 for 0<i<=(g+1)/2";
    case LemmaId::two_two_reaches: return "p^i_{2,2}!=0 for 1<=i<=min(4,g-1)";
  }
  return "";
}

const char* to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::holds: return "holds";
    case LemmaStatus::violated: return "violated";
    case LemmaStatus::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "unknown";
}

LemmaReport check_lemmas(const IntersectionNumbers& numbers, const PPolyProfile& profile) {
  const auto& o = profile.ordering;
  const int g = profile.girth;
  const int d = o.d();
  if (d != numbers.d()) throw std::invalid_argument("profile ordering does not match the tensor");

  // Intersection number addressed by ordering positions.
  auto P = [&](int h, int i, int j) -> Count {
    if (h > d || i > d || j > d) throw std::invalid_argument("position beyond d in lemma check");
    return numbers.p(o.class_at(h), o.class_at(i), o.class_at(j));
  };

  struct Check {
    LemmaId id;
    int lo;
    int hi;
    std::function<bool(int)> ok;
  };
  const std::vector<Check> checks = {
      {LemmaId::two_step_meets_arc, 1, g - 1, [&](int i) { return P(1, 2, i) != 0; }},
      {LemmaId::forward_below_backward, 0, std::min(3, g - 3), [&](int i) { return P(i, 1, i + 1) < P(i, g - 1, i + 1); }},
      // i <= g/2 - 1  <=>  2i <= g - 2
      {LemmaId::level_counts_increase, 0, std::min(2, (g - 2) / 2), [&](int i) { return P(i, 1, i) < P(i + 1, 1, i + 1); }},
      // i <= (g+1)/2  <=>  2i <= g + 1
      {LemmaId::equal_steps_meet_arc, 1, (g + 1) / 2, [&](int i) { return P(1, i, i) != 0; }},
      {LemmaId::two_two_reaches, 1, std::min(4, g - 1), [&](int i) { return P(i, 2, 2) != 0; }},
  };

  LemmaReport report;
  const bool hypothesis = profile.k1 > profile.kg + 1;
  for (const auto& c : checks) {
    if (!hypothesis) {
      report.results.push_back({c.id, LemmaStatus::hypothesis_not_met, std::nullopt});
      continue;
    }
    LemmaResult r{c.id, LemmaStatus::holds, std::nullopt};
    for (int i = c.lo; i <= c.hi; ++i)
      if (!c.ok(i)) {
        r.status = LemmaStatus::violated;
        r.witness = i;
        break;
      }
    report.results.push_back(r);
  }
  return report;
}

}  // namespace wdrd
