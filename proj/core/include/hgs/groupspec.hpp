#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// Syntax tree of a group expression.
///
///   expression := term ('x' term)*
///   term       := NAME '(' args ')' | 'gens' '[' perm (',' perm)* ']' | '(' expression ')'
///   args       := comma-separated integers, expressions or matrix lists [[[..],..],..]
///
/// Constructors: C(n) D(n) S(m) A(m) E(p,k) Q(2^k) SD(N,H[,pow(r)]) Hol(N)
/// matgrp(p,k,[matrices]) gens[...]; pow(r) only appears as the third SD argument.
struct GroupExpr {
  enum class Kind {
    Cyclic,
    Dihedral,
    Symmetric,
    Alternating,
    Elementary,
    Quaternion,
    Product,
    Semidirect,
    Holomorph,
    Generators,
    MatrixGroup,
    Power,
  };

  Kind kind = Kind::Cyclic;
  std::vector<long long> numbers;
  std::vector<GroupExpr> operands;
  std::vector<std::vector<std::vector<long long>>> matrices;
  std::vector<std::string> permutations;  // cycle notation, one entry per generator
  std::size_t line = 1;
  std::size_t column = 1;

  /// Structural equality; source positions are ignored.
  friend bool operator==(const GroupExpr& a, const GroupExpr& b) {
    return a.kind == b.kind && a.numbers == b.numbers && a.operands == b.operands &&
           a.matrices == b.matrices && a.permutations == b.permutations;
  }
};

/// Throws ParseError (with line and column) on malformed input or an unknown constructor.
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text form; parse_group_expr(render(e)) == e.
std::string render(const GroupExpr& e);

/// A constructed group plus the subgroups a semidirect or holomorph
/// expression distinguishes.
struct BuiltGroup {
  FiniteGroup group;
  std::optional<SubgroupRef> complement;  // H in N ⋊ H, Aut(N) in Hol(N)
  std::optional<SubgroupRef> normal;      // N in N ⋊ H
};

/// Throws InvalidArgument for out-of-range parameters, singular matrices or
/// unsupported actions, and CapExceeded beyond the order caps.
BuiltGroup build(const GroupExpr& e);

/// parse + build.
BuiltGroup build_group(std::string_view text);

/// Subgroup of g generated by permutations of its natural action ("gens[...]"
/// or a bare list "(0 1),(1 2)"). Throws InvalidArgument when a permutation is
/// not an element of g.
SubgroupRef parse_subgroup(const FiniteGroup& g, std::string_view text);

}  // namespace hgs
