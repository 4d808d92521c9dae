#include <doctest.h>

#include <algorithm>
#include <random>

#include "hgs/error.hpp"
#include "hgs/perm.hpp"
#include "oracles.hpp"

using namespace hgs;

namespace {

Perm cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Perm::from_cycles(n, cycles); }

PermSet klein() {
  return PermSet(4, {Perm::identity(4), cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}}),
                     cyc(4, {{0, 3}, {1, 2}})},
                 true);
}

std::vector<Perm> s4_gens() { return {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}; }

}  // namespace

TEST_CASE("construction rejects non-permutations") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(Perm({0, 3}), InvalidArgument);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_NOTHROW(Perm({2, 0, 1}));
}

TEST_CASE("compose follows p(q(i))") {
  const Perm p = cyc(3, {{0, 1}});
  const Perm q = cyc(3, {{1, 2}});
  const Perm pq = compose(p, q);
  for (Point i = 0; i < 3; ++i) CHECK(pq(i) == p(q(i)));
  CHECK(pq == Perm({1, 2, 0}));
  CHECK(compose(Perm::identity(3), p) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Perm::identity(4)), InvalidArgument);
}

TEST_CASE("compose is associative on random permutations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> a(7), b(7), c(7);
    for (auto* v : {&a, &b, &c}) {
      std::iota(v->begin(), v->end(), Point{0});
      std::shuffle(v->begin(), v->end(), rng);
    }
    const Perm p(a), q(b), r(c);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, q).images() == oracle::mul(a, b));
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(to_cycle_string(Perm::identity(5)) == "()");
  const Perm p = cyc(5, {{0, 1, 2}, {3, 4}});
  CHECK(to_cycle_string(p) == "(0 1 2)(3 4)");
  CHECK(parse_cycles("(0 1 2)(3 4)", 5) == p);
  CHECK(parse_cycles("(3 4)(2 0 1)", 5) == p);
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(cycle_string_extent("(0 7)(2 3)") == 8);
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), InvalidArgument);
  CHECK(p.order() == 6);
}

TEST_CASE("semiregular cycle type") {
  CHECK(semiregular_cycle_type(Perm::identity(4)) == 1u);
  CHECK(semiregular_cycle_type(cyc(4, {{0, 1}, {2, 3}})) == 2u);
  CHECK_FALSE(semiregular_cycle_type(cyc(4, {{0, 1, 2}})).has_value());
  CHECK(semiregular_cycle_type(cyc(6, {{0, 1, 2}, {3, 4, 5}})) == 3u);
}

TEST_CASE("closure") {
  CHECK(closure({}, 4).size() == 1);
  CHECK(closure({}, 4).elements().front().is_identity());
  const Perm gens3[] = {cyc(3, {{0, 1}}), cyc(3, {{1, 2}})};
  CHECK(closure(gens3, 3).size() == 6);
  const Perm four[] = {cyc(4, {{0, 1, 2, 3}})};
  CHECK(closure(four, 4).size() == 4);
  CHECK(closure(s4_gens(), 4).size() == 24);
  CHECK_THROWS_AS(closure(s4_gens(), 4, 10), CapExceeded);
}

TEST_CASE("closure agrees with the oracle and ignores generator order") {
  const std::vector<Perm> gens{cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})};
  std::vector<oracle::Images> raw;
  for (const auto& g : gens) raw.push_back(g.images());
  const auto expected = oracle::close(raw, 6);
  const PermSet s = closure(gens, 6);
  REQUIRE(s.size() == expected.size());
  std::size_t i = 0;
  for (const auto& e : expected) CHECK(s.elements()[i++].images() == e);

  std::vector<Perm> shuffled = gens;
  std::reverse(shuffled.begin(), shuffled.end());
  CHECK(closure(shuffled, 6) == s);
  CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("closed sets satisfy the group laws") {
  const PermSet s = closure(s4_gens(), 4);
  REQUIRE(s.is_group());
  CHECK(s.contains(Perm::identity(4)));
  for (const auto& p : s) {
    CHECK(s.contains(p.inverse()));
    for (const auto& q : s) CHECK(s.contains(compose(p, q)));
  }
}

TEST_CASE("regularity") {
  const Perm c4[] = {cyc(4, {{0, 1, 2, 3}})};
  CHECK(is_regular(closure(c4, 4)));
  const Perm t[] = {cyc(4, {{0, 1}})};
  CHECK_FALSE(is_regular(closure(t, 4)));
  CHECK_FALSE(is_transitive(closure(t, 4)));
  CHECK(is_regular(klein()));
  CHECK_FALSE(is_regular(closure(s4_gens(), 4)));
  for (const auto& p : klein()) {
    if (p.is_identity()) continue;
    const auto d = semiregular_cycle_type(p);
    REQUIRE(d.has_value());
    CHECK(*d > 1);
    CHECK(4 % *d == 0);
  }
}

TEST_CASE("normalization") {
  const PermSet v = klein();
  CHECK(is_normalized_by(v, v.elements()));
  CHECK(is_normalized_by(v, s4_gens()));
  const Perm c4[] = {cyc(4, {{0, 1, 2, 3}})};
  const PermSet c = closure(c4, 4);
  CHECK_FALSE(is_normalized_by(c, s4_gens()));

  // Oracle: conjugate by (0 1) by hand and compare element sets.
  const Perm t = cyc(4, {{0, 1}});
  bool all_inside = true;
  for (const auto& p : c) all_inside = all_inside && c.contains(compose(compose(t, p), t.inverse()));
  CHECK_FALSE(all_inside);

  // Generators suffice.
  const PermSet s4 = closure(s4_gens(), 4);
  CHECK(is_normalized_by(v, s4.elements()) == is_normalized_by(v, s4_gens()));
  CHECK(is_normalized_by(c, s4.elements()) == is_normalized_by(c, s4_gens()));
}
