#include "hgs/groupspec.hpp"

#include <cctype>
#include <map>

#include "hgs/automorphisms.hpp"
#include "hgs/constructions.hpp"
#include "hgs/engine.hpp"
#include "hgs/error.hpp"

namespace hgs {

namespace {

using Kind = GroupExpr::Kind;

const std::map<std::string, Kind, std::less<>>& constructor_names() {
  static const std::map<std::string, Kind, std::less<>> names{
      {"C", Kind::Cyclic},       {"D", Kind::Dihedral},    {"S", Kind::Symmetric},
      {"A", Kind::Alternating},  {"E", Kind::Elementary},  {"Q", Kind::Quaternion},
      {"SD", Kind::Semidirect},  {"Hol", Kind::Holomorph}, {"gens", Kind::Generators},
      {"matgrp", Kind::MatrixGroup}, {"pow", Kind::Power},
  };
  return names;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expression();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input '" + std::string(1, peek()) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      fail(at_end() ? std::string("expected '") + c + "' but input ended"
                    : std::string("expected '") + c + "', found '" + peek() + "'");
    }
    advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  long long integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) fail("integer too large");
      advance();
    }
    return negative ? -value : value;
  }

  GroupExpr expression() {
    GroupExpr first = term();
    skip_ws();
    if (peek() != 'x') return first;
    GroupExpr product;
    product.kind = Kind::Product;
    product.line = first.line;
    product.column = first.column;
    product.operands.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (peek() != 'x') break;
      advance();
      product.operands.push_back(term());
    }
    return product;
  }

  GroupExpr term() {
    skip_ws();
    const std::size_t line = line_, column = column_;
    if (accept('(')) {
      GroupExpr inner = expression();
      expect(')');
      return inner;
    }
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      name += peek();
      advance();
    }
    if (name.empty()) {
      fail(at_end() ? "expected a group expression but input ended"
                    : "expected a group constructor, found '" + std::string(1, peek()) + "'");
    }
    auto it = constructor_names().find(name);
    if (it == constructor_names().end()) {
      throw ParseError("unknown constructor '" + name + "'", line, column);
    }
    GroupExpr e;
    e.kind = it->second;
    e.line = line;
    e.column = column;
    switch (e.kind) {
      case Kind::Cyclic:
      case Kind::Dihedral:
      case Kind::Symmetric:
      case Kind::Alternating:
      case Kind::Quaternion:
      case Kind::Power:
        expect('(');
        e.numbers.push_back(integer());
        expect(')');
        break;
      case Kind::Elementary:
        expect('(');
        e.numbers.push_back(integer());
        expect(',');
        e.numbers.push_back(integer());
        expect(')');
        break;
      case Kind::Holomorph:
        expect('(');
        e.operands.push_back(expression());
        expect(')');
        break;
      case Kind::Semidirect:
        expect('(');
        e.operands.push_back(expression());
        expect(',');
        e.operands.push_back(expression());
        if (accept(',')) e.operands.push_back(term());
        expect(')');
        break;
      case Kind::MatrixGroup:
        expect('(');
        e.numbers.push_back(integer());
        expect(',');
        e.numbers.push_back(integer());
        expect(',');
        matrix_list(e);
        expect(')');
        break;
      case Kind::Generators:
        expect('[');
        if (!accept(']')) {
          do {
            e.permutations.push_back(permutation());
          } while (accept(','));
          expect(']');
        }
        break;
      case Kind::Product:
        fail("internal: product is not a constructor");
    }
    return e;
  }

  // [[[a,b],[c,d]], ...]
  void matrix_list(GroupExpr& e) {
    expect('[');
    do {
      std::vector<std::vector<long long>> matrix;
      expect('[');
      do {
        std::vector<long long> row;
        expect('[');
        do {
          row.push_back(integer());
        } while (accept(','));
        expect(']');
        matrix.push_back(std::move(row));
      } while (accept(','));
      expect(']');
      e.matrices.push_back(std::move(matrix));
    } while (accept(','));
    expect(']');
  }

  // One permutation as a run of cycles "(0 1 2)(3 4)"; canonicalised.
  std::string permutation() {
    skip_ws();
    std::vector<std::vector<Point>> cycles;
    if (peek() != '(') fail("expected '(' starting a cycle");
    while (accept('(')) {
      std::vector<Point> cycle;
      skip_ws();
      while (peek() != ')') {
        const long long v = integer();
        if (v < 0 || v > 0xFFFF) fail("cycle point out of range");
        cycle.push_back(static_cast<Point>(v));
        skip_ws();
        if (peek() == ',') advance();
        skip_ws();
        if (at_end()) fail("unterminated cycle");
      }
      advance();
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
      if (peek() != '(') break;
    }
    std::size_t degree = 0;
    for (const auto& c : cycles) {
      for (Point x : c) degree = std::max<std::size_t>(degree, x + 1u);
    }
    try {
      return to_cycle_string(Perm::from_cycles(degree, cycles));
    } catch (const InvalidArgument& err) {
      fail(err.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string render_matrix_list(const std::vector<std::vector<std::vector<long long>>>& ms) {
  auto join = [](const auto& items, auto&& fn) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += fn(items[i]);
    }
    return out + "]";
  };
  return join(ms, [&](const auto& m) {
    return join(m, [&](const auto& row) {
      return join(row, [](long long v) { return std::to_string(v); });
    });
  });
}

std::size_t positive(long long v, const char* what) {
  if (v < 1) throw InvalidArgument(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupExpr& e) {
  auto num = [&](std::size_t i) { return std::to_string(e.numbers[i]); };
  switch (e.kind) {
    case Kind::Cyclic: return "C(" + num(0) + ")";
    case Kind::Dihedral: return "D(" + num(0) + ")";
    case Kind::Symmetric: return "S(" + num(0) + ")";
    case Kind::Alternating: return "A(" + num(0) + ")";
    case Kind::Quaternion: return "Q(" + num(0) + ")";
    case Kind::Power: return "pow(" + num(0) + ")";
    case Kind::Elementary: return "E(" + num(0) + "," + num(1) + ")";
    case Kind::Holomorph: return "Hol(" + render(e.operands[0]) + ")";
    case Kind::Semidirect: {
      std::string out = "SD(";
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += ",";
        out += render(e.operands[i]);
      }
      return out + ")";
    }
    case Kind::MatrixGroup:
      return "matgrp(" + num(0) + "," + num(1) + "," + render_matrix_list(e.matrices) + ")";
    case Kind::Generators: {
      std::string out = "gens[";
      for (std::size_t i = 0; i < e.permutations.size(); ++i) {
        if (i) out += ",";
        out += e.permutations[i];
      }
      return out + "]";
    }
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += " x ";
        const std::string inner = render(e.operands[i]);
        out += e.operands[i].kind == Kind::Product ? "(" + inner + ")" : inner;
      }
      return out;
    }
  }
  return {};
}

namespace {

MatrixGroup build_matrix_group(const GroupExpr& e) {
  const std::size_t p = positive(e.numbers[0], "matgrp modulus");
  const std::size_t k = positive(e.numbers[1], "matgrp dimension");
  if (!is_prime(p)) throw InvalidArgument("matgrp: modulus " + std::to_string(p) + " is not prime");
  std::vector<Matrix> gens;
  for (const auto& rows : e.matrices) {
    if (rows.size() != k) {
      throw InvalidArgument("matgrp: expected " + std::to_string(k) + "x" + std::to_string(k) +
                            " matrices");
    }
    gens.push_back(Matrix::from_rows(p, rows));
  }
  return matrix_group(p, k, gens);
}

BuiltGroup build_semidirect(const GroupExpr& e) {
  const GroupExpr& n_expr = e.operands[0];
  const GroupExpr& h_expr = e.operands[1];
  SemidirectProduct product;
  if (e.operands.size() == 2) {
    if (h_expr.kind != Kind::MatrixGroup) {
      throw InvalidArgument("SD(N, H) needs H = matgrp(...) or a third argument pow(r)");
    }
    if (n_expr.kind != Kind::Elementary || n_expr.numbers != h_expr.numbers) {
      throw InvalidArgument("SD(N, matgrp(p,k,...)) needs N = E(p,k) with the same p and k");
    }
    const MatrixGroup mg = build_matrix_group(h_expr);
    const FiniteGroup n = build(n_expr).group;
    product = semidirect_product(n, mg.group, mg.action);
  } else {
    const GroupExpr& action = e.operands[2];
    if (action.kind != Kind::Power || n_expr.kind != Kind::Cyclic || h_expr.kind != Kind::Cyclic) {
      throw InvalidArgument("SD(N, H, pow(r)) needs N = C(n) and H = C(m)");
    }
    const std::size_t n = positive(n_expr.numbers[0], "C(n) order");
    const std::size_t m = positive(h_expr.numbers[0], "C(m) order");
    product = semidirect_product(cyclic(n), cyclic(m), power_action(n, m, action.numbers[0]));
  }
  product.group = product.group.renamed(render(e));
  return BuiltGroup{product.group, product.complement_subgroup(), product.normal_subgroup()};
}

}  // namespace

BuiltGroup build(const GroupExpr& e) {
  const std::string name = render(e);
  auto plain = [&](FiniteGroup g) { return BuiltGroup{g.renamed(name), std::nullopt, std::nullopt}; };
  switch (e.kind) {
    case Kind::Cyclic: return plain(cyclic(positive(e.numbers[0], "C(n) order")));
    case Kind::Dihedral: return plain(dihedral(positive(e.numbers[0], "D(n) parameter")));
    case Kind::Symmetric: return plain(symmetric(positive(e.numbers[0], "S(m) degree")));
    case Kind::Alternating: return plain(alternating(positive(e.numbers[0], "A(m) degree")));
    case Kind::Quaternion: return plain(quaternion(positive(e.numbers[0], "Q(n) order")));
    case Kind::Elementary:
      return plain(elementary_abelian(positive(e.numbers[0], "E(p,k) prime"),
                                      positive(e.numbers[1], "E(p,k) rank")));
    case Kind::Product: {
      FiniteGroup g = build(e.operands[0]).group;
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        g = direct_product(g, build(e.operands[i]).group);
      }
      return plain(g);
    }
    case Kind::Semidirect: return build_semidirect(e);
    case Kind::Holomorph: {
      const Holomorph hol = holomorph(build(e.operands[0]).group);
      return BuiltGroup{hol.group().renamed(name), hol.product.complement_subgroup(),
                        hol.product.normal_subgroup()};
    }
    case Kind::MatrixGroup: return plain(build_matrix_group(e).group);
    case Kind::Generators: {
      std::size_t degree = 1;
      for (const auto& text : e.permutations) degree = std::max(degree, cycle_string_extent(text));
      std::vector<Perm> gens;
      for (const auto& text : e.permutations) gens.push_back(parse_cycles(text, degree));
      return plain(permutation_group(gens, degree));
    }
    case Kind::Power:
      throw InvalidArgument("pow(r) is only meaningful as the action argument of SD");
  }
  throw InvalidArgument("unsupported group expression");
}

BuiltGroup build_group(std::string_view text) { return build(parse_group_expr(text)); }

SubgroupRef parse_subgroup(const FiniteGroup& g, std::string_view text) {
  const auto* perms = g.natural_perms();
  if (perms == nullptr) throw InvalidArgument(g.name() + " has no natural permutation action");
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\n");
  if (first != std::string::npos && body.compare(first, 4, "gens") == 0) {
    const auto open = body.find('[');
    const auto close = body.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError("gens[...] needs matching brackets", 1, first + 1);
    }
    body = body.substr(open + 1, close - open - 1);
  }
  const GroupExpr e = parse_group_expr("gens[" + body + "]");
  const std::size_t degree = perms->front().degree();
  std::vector<Elem> gens;
  for (const auto& cycle_text : e.permutations) {
    if (cycle_string_extent(cycle_text) > degree) {
      throw InvalidArgument("subgroup generator " + cycle_text + " moves points outside degree " +
                            std::to_string(degree));
    }
    const Perm p = parse_cycles(cycle_text, degree);
    const auto x = find_element(g, p);
    if (!x) throw InvalidArgument("subgroup generator " + cycle_text + " is not in " + g.name());
    gens.push_back(*x);
  }
  return generated_subgroup(g, gens);
}

}  // namespace hgs
