#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace wdrd;
using testing::attached_ok;
using testing::lex;
using testing::profile_ok;

TEST_CASE("ordering validation") {
  CHECK_NOTHROW(Ordering({2, 1, 3}));
  CHECK_THROWS_AS(Ordering({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering({1, 3}), std::invalid_argument);
  Ordering o({3, 1, 2});
  CHECK(o.class_at(0) == 0);
  CHECK(o.class_at(1) == 3);
  CHECK(o.position_of(3) == 1);
  CHECK(o.position_of(2) == 3);
  CHECK(Ordering::identity(3).classes() == std::vector<int>{1, 2, 3});
}

TEST_CASE("cycle C6 natural ordering") {
  auto s = attached_ok(directed_cycle(6)).scheme;
  auto p = profile_ok(s, Ordering::identity(5));
  CHECK(p.girth == 6);
  CHECK(p.d == 5);
  CHECK(p.type == SchemeType::short_type);
  CHECK(p.stable);
  CHECK(p.k1 == 1);
  CHECK(p.kg == 0);
}

TEST_CASE("lex(C6,2,empty) ordered by forward distance") {
  auto s = attached_ok(lex(6, 2, FiberKind::empty)).scheme;
  auto p = profile_ok(s, Ordering::identity(6));
  CHECK(p.girth == 6);
  CHECK(p.d == 6);
  CHECK(p.type == SchemeType::long_type);
  CHECK(p.k1 == 2);
  CHECK(p.kg == 1);
  auto oracle = matrix_oracle(s, Ordering::identity(6));
  CHECK(oracle.accept);
  REQUIRE(oracle.polys);
  CHECK(oracle.polys->to_string(2) == "1/2*x^2");
  CHECK(oracle.polys->degree(2) == 2);
}

TEST_CASE("R_2 first is rejected") {
  auto s = attached_ok(directed_cycle(6)).scheme;
  Ordering o({2, 4, 1, 3, 5});
  auto r = is_p_polynomial(s, o);
  REQUIRE(std::holds_alternative<PPolyRejection>(r));
  CHECK(std::get<PPolyRejection>(r).reason == RejectReason::zero_subdiagonal);
  // R_2 o R_2 lands in R_4, then R_2 o R_4 lands in R_0
  CHECK(std::get<PPolyRejection>(r).i == 2);
  CHECK(std::get<PPolyRejection>(r).h == 3);
  CHECK_FALSE(matrix_oracle(s, o).accept);
}

TEST_CASE("symmetric first relation is rejected") {
  auto s = attached_ok(lex(4, 2, FiberKind::empty)).scheme;
  // class 2 is (2,2), a symmetric relation
  auto r = is_p_polynomial(s, Ordering({2, 1, 3, 4}));
  REQUIRE(std::holds_alternative<PPolyRejection>(r));
}

TEST_CASE("cycle polynomials are powers") {
  auto s = attached_ok(directed_cycle(4)).scheme;
  auto r = matrix_oracle(s, Ordering::identity(3));
  REQUIRE(r.accept);
  CHECK(r.polys->to_string(0) == "1");
  CHECK(r.polys->to_string(1) == "x");
  CHECK(r.polys->to_string(2) == "x^2");
  CHECK(r.polys->to_string(3) == "x^3");
}

TEST_CASE("tensor test and matrix oracle agree on every ordering") {
  for (const auto& g : {directed_cycle(5), directed_cycle(6), lex(4, 2, FiberKind::empty), lex(3, 2, FiberKind::complete),
                        testing::circ(6, {1, 2})}) {
    auto s = attached_ok(g).scheme;
    std::vector<int> perm(static_cast<std::size_t>(s.d()));
    std::iota(perm.begin(), perm.end(), 1);
    int accepted = 0;
    do {
      Ordering o(perm);
      bool tensor = std::holds_alternative<PPolyProfile>(is_p_polynomial(s, o));
      bool matrix = matrix_oracle(s, o).accept;
      CAPTURE(to_string(perm));
      CHECK(tensor == matrix);
      accepted += tensor;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(static_cast<std::size_t>(accepted) == find_p_poly_orderings(s).size());
  }
}

TEST_CASE("ordering search") {
  CHECK(find_p_poly_orderings(attached_ok(directed_cycle(6)).scheme).size() == 2);
  CHECK(find_p_poly_orderings(attached_ok(lex(4, 2, FiberKind::empty)).scheme).size() == 2);
  auto z = find_p_poly_orderings(attached_ok(testing::circ(6, {1, 2})).scheme);
  for (const auto& o : z) CHECK(std::holds_alternative<PPolyProfile>(is_p_polynomial(attached_ok(testing::circ(6, {1, 2})).scheme, o)));
  auto s = attached_ok(lex(6, 3, FiberKind::empty)).scheme;
  CHECK(find_p_poly_orderings(s, 1) == find_p_poly_orderings(s, 4));
}

TEST_CASE("stability") {
  for (const auto& g : {directed_cycle(6), lex(6, 2, FiberKind::empty), lex(4, 3, FiberKind::empty)}) {
    auto s = attached_ok(g).scheme;
    auto p = profile_ok(s, find_p_poly_orderings(s).front());
    CHECK(p.stable);
    CHECK(check_stability(s, p));
  }
}

TEST_CASE("long type structure") {
  auto c6 = attached_ok(directed_cycle(6)).scheme;
  CHECK(std::holds_alternative<NotLong>(long_type_structure(c6, profile_ok(c6, Ordering::identity(5)))));

  for (auto [n, m] : {std::pair{6, 2}, std::pair{4, 3}}) {
    CAPTURE(n);
    auto s = attached_ok(lex(n, m, FiberKind::empty)).scheme;
    auto r = long_type_structure(s, profile_ok(s, Ordering::identity(n)));
    REQUIRE(std::holds_alternative<LongTypeStructure>(r));
    const auto& l = std::get<LongTypeStructure>(r);
    CHECK(l.fiber_size == m);
    CHECK(static_cast<int>(l.fibers.size()) == n);
    CHECK(l.fibers[0].size() == static_cast<std::size_t>(m));
    CHECK(same_partition(l.quotient, attached_ok(directed_cycle(n)).scheme.partition()));
    CHECK(l.quotient_profile.type == SchemeType::short_type);
  }
}
