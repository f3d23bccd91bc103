#include <doctest.h>

#include "helpers.hpp"

using namespace wdrd;
using testing::attached_ok;
using testing::circ;
using testing::lex;

namespace {

RelationPartition partition_of(const Digraph& g) { return two_way_partition(g).partition; }

}  // namespace

TEST_CASE("relation partition validation") {
  CHECK_NOTHROW(RelationPartition(2, 1, {0, 1, 1, 0}));
  CHECK_THROWS_AS(RelationPartition(2, 1, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RelationPartition(2, 1, {0, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RelationPartition(2, 2, {0, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RelationPartition(2, 1, {0, 3, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RelationPartition(2, 1, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("same_partition ignores labels") {
  RelationPartition a(3, 2, {0, 1, 2, 2, 0, 1, 1, 2, 0});
  RelationPartition b(3, 2, {0, 2, 1, 1, 0, 2, 2, 1, 0});
  RelationPartition c(3, 1, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(same_partition(a, b));
  CHECK_FALSE(same_partition(a, c));
}

TEST_CASE("cyclic scheme of C5") {
  auto result = build_scheme(partition_of(directed_cycle(5)));
  REQUIRE(std::holds_alternative<AssociationScheme>(result));
  const auto& s = std::get<AssociationScheme>(result);
  CHECK(s.d() == 4);
  for (int h = 0; h <= 4; ++h)
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) CHECK(s.p(h, i, j) == ((i + j) % 5 == h ? 1 : 0));
  for (int i = 0; i <= 4; ++i) {
    CHECK(s.valency(i) == 1);
    CHECK(s.star(i) == (5 - i) % 5);
  }
}

TEST_CASE("tensor matches the brute-force triple count") {
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    auto s = attached_ok(g).scheme;
    auto expected = oracle::triple_check(testing::labels_matrix(s.partition()));
    REQUIRE(expected.scheme());
    bool same = true;
    for (int h = 0; h <= s.d(); ++h)
      for (int i = 0; i <= s.d(); ++i)
        for (int j = 0; j <= s.d(); ++j) same = same && s.p(h, i, j) == expected.p[h][i][j];
    CHECK(same);
  }
}

TEST_CASE("Z6 with steps 1,3 is not a scheme") {
  auto p = partition_of(circ(6, {1, 3}));
  auto result = build_scheme(p);
  REQUIRE(std::holds_alternative<SchemeViolation>(result));
  const auto& v = std::get<SchemeViolation>(result);
  REQUIRE(std::holds_alternative<ConstancyWitness>(v.first));
  const auto& w = std::get<ConstancyWitness>(v.first);
  // classes: 0 (0,0), 1 (1,1), 2 (1,3), 3 (2,2), 4 (3,1)
  CHECK(w.h == 3);
  CHECK(w.i == 1);
  CHECK(w.j == 2);
  CHECK(w.first == VertexPair{0, 2});
  CHECK(w.second == VertexPair{0, 4});
  CHECK(w.count_first == 0);
  CHECK(w.count_second == 1);

  std::vector<std::array<int, 3>> triples;
  for (const auto& c : v.constancy) triples.push_back({c.h, c.i, c.j});
  CHECK(triples == std::vector<std::array<int, 3>>{{3, 1, 2}, {3, 1, 4}, {3, 2, 1}, {3, 2, 2}, {3, 4, 1}, {3, 4, 4}});

  auto quoted = std::find_if(v.constancy.begin(), v.constancy.end(),
                             [](const ConstancyWitness& c) { return c.h == 3 && c.i == 2 && c.j == 2; });
  REQUIRE(quoted != v.constancy.end());
  CHECK(quoted->count_first == 1);
  CHECK(quoted->count_second == 0);

  auto brute = oracle::triple_check(testing::labels_matrix(p));
  REQUIRE(brute.failures.size() == v.constancy.size());
  for (std::size_t k = 0; k < v.constancy.size(); ++k) {
    const auto& c = v.constancy[k];
    const auto& f = brute.failures[k];
    CHECK(std::array{f.h, f.i, f.j} == std::array{c.h, c.i, c.j});
    CHECK(f.counts.at({c.first.x, c.first.y}) == c.count_first);
    CHECK(f.counts.at({c.second.x, c.second.y}) == c.count_second);
  }
  CHECK_FALSE(is_scheme(p));
}

TEST_CASE("transpose failure is reported") {
  // class 1 = {(0,1),(1,0)} together with (0,2); its transposes split
  RelationPartition p(3, 2, {0, 1, 1, 1, 0, 2, 2, 2, 0});
  auto result = build_scheme(p);
  REQUIRE(std::holds_alternative<SchemeViolation>(result));
  CHECK(std::holds_alternative<TransposeWitness>(std::get<SchemeViolation>(result).first));
}

TEST_CASE("early exit still yields a violation") {
  BuildOptions options;
  options.collect_all = false;
  auto result = build_scheme(partition_of(circ(6, {1, 3})), options);
  CHECK(std::holds_alternative<SchemeViolation>(result));
}

TEST_CASE("lex product of C6 by an empty graph") {
  auto s = attached_ok(lex(6, 2, FiberKind::empty)).scheme;
  CHECK(s.d() == 6);
  CHECK(s.valency(6) == 1);
  CHECK(is_commutative(s));
}

TEST_CASE("intersection-number identities") {
  for (const auto& [name, g] : testing::corpus()) {
    CAPTURE(name);
    CHECK(check_consistency(attached_ok(g).scheme).holds);
  }
  CHECK(check_consistency(attached_ok(lex(4, 3, FiberKind::complete)).scheme).holds);

  auto numbers = attached_ok(directed_cycle(5)).scheme.numbers();
  numbers.set_p(2, 1, 1, 2);
  auto report = check_consistency(numbers);
  CHECK_FALSE(report.holds);
  CHECK_FALSE(report.identity.empty());
}

TEST_CASE("commutativity") {
  for (int n = 3; n <= 8; ++n) CHECK(is_commutative(attached_ok(directed_cycle(n)).scheme));
  auto one = build_scheme(RelationPartition(3, 1, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
  REQUIRE(std::holds_alternative<AssociationScheme>(one));
  CHECK(is_commutative(std::get<AssociationScheme>(one)));

  IntersectionNumbers skew(2);
  skew.set_p(0, 1, 2, 1);
  CHECK_FALSE(is_commutative(skew));
}

TEST_CASE("results do not depend on the worker count") {
  for (const auto& g : {lex(6, 3, FiberKind::empty), lex(5, 2, FiberKind::complete), circ(6, {1, 3})}) {
    auto p = partition_of(g);
    BuildOptions one, many;
    one.jobs = 1;
    many.jobs = 4;
    auto a = build_scheme(p, one);
    auto b = build_scheme(p, many);
    REQUIRE(a.index() == b.index());
    if (auto* s = std::get_if<AssociationScheme>(&a)) {
      CHECK(s->numbers() == std::get<AssociationScheme>(b).numbers());
    } else {
      const auto& va = std::get<SchemeViolation>(a);
      const auto& vb = std::get<SchemeViolation>(b);
      CHECK(va.constancy == vb.constancy);
      CHECK(std::get<ConstancyWitness>(va.first) == std::get<ConstancyWitness>(vb.first));
    }
    CHECK(is_scheme(p, 1) == is_scheme(p, 3));
  }
}
