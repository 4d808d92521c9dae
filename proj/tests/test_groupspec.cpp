#include <doctest.h>

#include "hgs/constructions.hpp"
#include "hgs/error.hpp"
#include "hgs/groupspec.hpp"
#include "hgs/isomorphism.hpp"

using namespace hgs;
using Kind = GroupExpr::Kind;

TEST_CASE("parse simple constructors") {
  const GroupExpr s4 = parse_group_expr("S(4)");
  CHECK(s4.kind == Kind::Symmetric);
  CHECK(s4.numbers == std::vector<long long>{4});
  CHECK(parse_group_expr("  E( 2 , 3 ) ").kind == Kind::Elementary);
  CHECK(parse_group_expr("Q(8)").kind == Kind::Quaternion);
}

TEST_CASE("parse semidirect with a matrix group") {
  const GroupExpr e = parse_group_expr("SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))");
  REQUIRE(e.kind == Kind::Semidirect);
  REQUIRE(e.operands.size() == 2);
  CHECK(e.operands[0].kind == Kind::Elementary);
  CHECK(e.operands[1].kind == Kind::MatrixGroup);
  CHECK(e.operands[1].matrices.size() == 1);
  CHECK(e.operands[1].matrices[0][1] == std::vector<long long>{1, 1, 0});
  CHECK(build(e).group.order() == 56);
}

TEST_CASE("products") {
  const GroupExpr e = parse_group_expr("C(2) x C(3) x S(3)");
  REQUIRE(e.kind == Kind::Product);
  CHECK(e.operands.size() == 3);
  const GroupExpr nested = parse_group_expr("(C(2) x C(2)) x C(3)");
  REQUIRE(nested.kind == Kind::Product);
  CHECK(nested.operands.size() == 2);
  CHECK(nested.operands[0].kind == Kind::Product);
  CHECK(build(nested).group.order() == 12);
  CHECK(are_isomorphic(build_group("E(2,2) x C(1)").group, elementary_abelian(2, 2)));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_group_expr("Hol(E(3,2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 11);
  }
  try {
    parse_group_expr("C(2) x\n  Z(3)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("unknown constructor") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_expr(""), ParseError);
  CHECK_THROWS_AS(parse_group_expr("S(4) S(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("E(2)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("C(x)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("gens[(0 1]"), ParseError);
}

TEST_CASE("render round trip") {
  for (const char* text :
       {"S(4)", "C(2) x C(3)", "(C(2) x C(2)) x C(3)", "Hol(E(3,2))", "SD(C(7),C(3),pow(2))",
        "SD(E(3,2),matgrp(3,2,[[[0,1],[-1,0]]]))", "gens[(0 1 2),(0 1)]", "gens[]", "Q(16)",
        "Hol(C(2) x C(2))", "D(5) x (A(4) x E(2,2))"}) {
    CAPTURE(text);
    const GroupExpr e = parse_group_expr(text);
    CHECK(parse_group_expr(render(e)) == e);
    CHECK(render(parse_group_expr(render(e))) == render(e));
  }
  CHECK(render(parse_group_expr("gens[(1 2)(0 3), ( 2 0 1 )]")) == "gens[(0 3)(1 2),(0 1 2)]");
}

TEST_CASE("build") {
  const BuiltGroup g36 = build_group("SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))");
  CHECK(g36.group.order() == 36);
  REQUIRE(g36.complement.has_value());
  CHECK(g36.complement->order() == 4);
  CHECK(iso_type(g36.complement->as_group()) == "C(4)");
  CHECK(g36.normal->order() == 9);

  const BuiltGroup hol = build_group("Hol(E(2,2))");
  CHECK(hol.group.order() == 24);
  CHECK(hol.complement->order() == 6);

  CHECK(build_group("SD(C(7), C(3), pow(2))").group.order() == 21);
  CHECK(build_group("gens[(0 1 2 3), (0 1)]").group.order() == 24);
  CHECK(build_group("S(4)").group.name() == "S(4)");

  for (const auto& [n, h] : std::vector<std::pair<const char*, std::size_t>>{
           {"SD(C(5),C(4),pow(2))", 20}, {"SD(C(8),C(2),pow(3))", 16}, {"SD(C(3),C(2),pow(1))", 6}}) {
    CAPTURE(n);
    CHECK(build_group(n).group.order() == h);
  }
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(build_group("E(4,2)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("SD(E(2,2), matgrp(2,2,[[[1,1],[1,1]]]))"), InvalidArgument);
  CHECK_THROWS_AS(build_group("SD(E(2,3), matgrp(2,2,[[[1,1],[1,0]]]))"), InvalidArgument);
  CHECK_THROWS_AS(build_group("SD(C(7), C(3), pow(3))"), InvalidArgument);
  CHECK_THROWS_AS(build_group("pow(2)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("C(0)"), InvalidArgument);
  CHECK_THROWS_AS(build_group("S(9)"), CapExceeded);
}

TEST_CASE("matrix group orders") {
  const BuiltGroup g = build_group("matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]])");
  CHECK(g.group.order() == 7);
  CHECK(build_group("matgrp(3,2,[[[0,1],[-1,0]]])").group.order() == 4);
  CHECK(build_group("matgrp(2,2,[[[1,1],[1,0]]])").group.order() == 3);
  CHECK(build_group("matgrp(2,2,[[[1,1],[1,0]],[[0,1],[1,0]]])").group.order() == 6);
}

TEST_CASE("subgroup selectors") {
  const FiniteGroup s4 = build_group("S(4)").group;
  CHECK(parse_subgroup(s4, "gens[(0 1 2)]").order() == 3);
  CHECK(parse_subgroup(s4, "(0 1),(2 3)").order() == 4);
  CHECK_THROWS_AS(parse_subgroup(build_group("A(4)").group, "gens[(0 1)]"), InvalidArgument);
  CHECK_THROWS_AS(parse_subgroup(s4, "gens[(0 7)]"), InvalidArgument);
  CHECK_THROWS_AS(parse_subgroup(build_group("Q(8)").group, "gens[(0 1)]"), InvalidArgument);
}
