#include <doctest.h>

#include <map>

#include "helpers.hpp"

using namespace wdrd;
using testing::attached_ok;
using testing::lex;
using testing::profile_ok;

namespace {

using Sets = std::vector<PositionSet>;

Sets enumerate(const Digraph& g, int jobs = 1) {
  auto s = attached_ok(g).scheme;
  EnumerateOptions options;
  options.jobs = jobs;
  return enumerate_valid_unions(s, find_p_poly_orderings(s).front(), options).found;
}

}  // namespace

// Expected sets were computed by an exhaustive search over all unions and are
// rechecked against the in-tree oracle below.
TEST_CASE("valid unions: frozen values") {
  CHECK(enumerate(directed_cycle(5)) == Sets{{1}, {2}, {3}, {4}});
  CHECK(enumerate(directed_cycle(6)) == Sets{{1}, {5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(enumerate(lex(4, 2, FiberKind::empty)) == Sets{{1}, {3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(enumerate(lex(6, 2, FiberKind::empty)) ==
        Sets{{1}, {5}, {1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 2, 6}, {4, 5, 6}});
}

TEST_CASE("valid unions agree with the oracle") {
  std::vector<Digraph> cases{directed_cycle(3), directed_cycle(4), directed_cycle(5), directed_cycle(6),
                             directed_cycle(7), lex(3, 2, FiberKind::empty), lex(3, 2, FiberKind::complete),
                             lex(4, 2, FiberKind::empty), lex(4, 2, FiberKind::complete), lex(5, 2, FiberKind::empty)};
  for (const auto& g : cases) {
    auto s = attached_ok(g).scheme;
    for (const auto& o : find_p_poly_orderings(s)) {
      CAPTURE(to_string(o.classes()));
      auto expected = oracle::valid_unions(testing::labels_matrix(s.partition()), o.classes());
      CHECK(enumerate_valid_unions(s, o).found == expected);
    }
  }
}

TEST_CASE("rejection reasons") {
  auto s = attached_ok(directed_cycle(6)).scheme;
  auto e = enumerate_valid_unions(s, Ordering::identity(5));
  CHECK(e.found.size() + e.rejections.size() == 31);
  auto reason = [&](PositionSet p) {
    for (const auto& r : e.rejections)
      if (r.positions == p) return r.reason;
    FAIL("not rejected");
    return RejectionReason::not_wdrd;
  };
  CHECK(reason({2}) == RejectionReason::not_strongly_connected);
  CHECK(reason({1, 5}) == RejectionReason::undirected);
  CHECK(reason({1, 3}) == RejectionReason::not_wdrd);
  CHECK(reason({1, 4}) == RejectionReason::attached_scheme_differs);
}

TEST_CASE("enumeration limits and determinism") {
  auto s = attached_ok(lex(6, 2, FiberKind::empty)).scheme;
  EnumerateOptions small;
  small.max_d = 5;
  CHECK_THROWS_AS(enumerate_valid_unions(s, Ordering::identity(6), small), std::invalid_argument);
  CHECK(enumerate(lex(6, 2, FiberKind::empty), 1) == enumerate(lex(6, 2, FiberKind::empty), 4));
}

TEST_CASE("verdicts") {
  auto l4 = attached_ok(lex(4, 2, FiberKind::empty)).scheme;
  auto r4 = verify_theorem(l4, Ordering::identity(4));
  CHECK(r4.verdict == Verdict::match);
  CHECK(r4.found.size() == 6);

  auto c6 = attached_ok(directed_cycle(6)).scheme;
  auto r6 = verify_theorem(c6, Ordering::identity(5), {}, "c6");
  CHECK(r6.verdict == Verdict::found_minus_predicted);
  CHECK(r6.found_not_predicted == Sets{{2, 3}, {3, 4}});
  CHECK(r6.predicted_not_found.empty());
  CHECK(r6.scheme_id == "c6");

  CHECK_THROWS_AS(verify_theorem(c6, Ordering({2, 4, 1, 3, 5})), std::invalid_argument);
}

TEST_CASE("lemma gating on cycles and products") {
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    auto s = attached_ok(g).scheme;
    for (const auto& o : find_p_poly_orderings(s)) {
      auto report = check_lemmas(s, profile_ok(s, o));
      REQUIRE(report.results.size() == 5);
      for (const auto& r : report.results) CHECK(r.status == LemmaStatus::hypothesis_not_met);
    }
  }
}

TEST_CASE("lemma checker on a hand-built tensor") {
  const int d = 5;
  IntersectionNumbers t(d);
  for (int h = 0; h <= d; ++h)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) t.set_p(h, i, j, 1);
  for (int i = 0; i <= d; ++i) {
    t.set_k(i, i == 0 ? 1 : 3);
    t.set_star(i, i == 0 ? 0 : 6 - i);
  }
  t.set_p(1, 2, 2, 0);
  PPolyProfile p;
  p.ordering = Ordering::identity(d);
  p.girth = 6;
  p.d = d;
  p.k1 = 3;
  p.kg = 0;
  auto report = check_lemmas(t, p);
  REQUIRE(report.results.size() == 5);
  // p^1_{2,2} = 0 feeds three of the checks; the strict inequalities fail at
  // i = 0 because all entries are equal
  const std::map<LemmaId, int> witness{{LemmaId::two_step_meets_arc, 2},
                                       {LemmaId::forward_below_backward, 0},
                                       {LemmaId::level_counts_increase, 0},
                                       {LemmaId::equal_steps_meet_arc, 2},
                                       {LemmaId::two_two_reaches, 1}};
  for (const auto& r : report.results) {
    CAPTURE(to_string(r.id));
    CHECK(r.status == LemmaStatus::violated);
    CHECK(r.witness == witness.at(r.id));
  }

  t.set_p(1, 2, 2, 1);
  p.k1 = 1;
  for (const auto& r : check_lemmas(t, p).results) CHECK(r.status == LemmaStatus::hypothesis_not_met);
}
