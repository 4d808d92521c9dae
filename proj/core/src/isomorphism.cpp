#include "hgs/isomorphism.hpp"

#include <map>

#include "hgs/automorphisms.hpp"
#include "hgs/constructions.hpp"
#include "hgs/error.hpp"

namespace hgs {

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.center_order = center(g).order();
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t o : g.element_orders()) ++hist[o];
  f.order_histogram.assign(hist.begin(), hist.end());
  return f;
}

std::string fingerprint_label(const Fingerprint& f) {
  std::string out = "order=" + std::to_string(f.order) + ";abelian=" + (f.abelian ? "1" : "0") +
                    ";center=" + std::to_string(f.center_order) + ";orders=";
  for (std::size_t i = 0; i < f.order_histogram.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.order_histogram[i].first) + ":" +
           std::to_string(f.order_histogram[i].second);
  }
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                  std::size_t cap) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > cap) {
    throw CapExceeded("isomorphism test: order " + std::to_string(a.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  std::optional<std::vector<Elem>> found;
  for_each_embedding(a, b, [&](const std::vector<Elem>& map) {
    found = map;
    return false;
  });
  return found;
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  return find_isomorphism(a, b, cap).has_value();
}

namespace {

FiniteGroup cyclic_by_cyclic(std::size_t n, std::size_t m, long long r) {
  return semidirect_product(cyclic(n), cyclic(m), power_action(n, m, r)).group;
}

FiniteGroup product_of(std::initializer_list<FiniteGroup> factors) {
  auto it = factors.begin();
  FiniteGroup out = *it++;
  for (; it != factors.end(); ++it) out = direct_product(out, *it);
  return out;
}

/// Action of C(2) on C(4) x C(2) given by where the generators a = (1,0) and
/// b = (0,1) go. Pair index is a_exp * 2 + b_exp.
FiniteGroup c4c2_by_c2(Elem image_a, Elem image_b) {
  const FiniteGroup base = direct_product(cyclic(4), cyclic(2));
  AutomorphismTable t(8);
  for (Elem i = 0; i < 4; ++i) {
    for (Elem j = 0; j < 2; ++j) {
      Elem img = 0;
      for (Elem s = 0; s < i; ++s) img = base.mul(img, image_a);
      for (Elem s = 0; s < j; ++s) img = base.mul(img, image_b);
      t[i * 2 + j] = img;
    }
  }
  AutomorphismTable id(8);
  for (Elem x = 0; x < 8; ++x) id[x] = x;
  return semidirect_product(base, cyclic(2), {id, t}).group;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, FiniteGroup g) {
    c.push_back({name, g.renamed(name)});
  };
  for (std::size_t n : {1, 2, 3, 5, 7, 11, 13}) add("C(" + std::to_string(n) + ")", cyclic(n));
  add("C(4)", cyclic(4));
  add("E(2,2)", elementary_abelian(2, 2));
  add("C(6)", cyclic(6));
  add("S(3)", symmetric(3));
  add("C(8)", cyclic(8));
  add("C(4) x C(2)", product_of({cyclic(4), cyclic(2)}));
  add("E(2,3)", elementary_abelian(2, 3));
  add("D(4)", dihedral(4));
  add("Q(8)", quaternion(8));
  add("C(9)", cyclic(9));
  add("E(3,2)", elementary_abelian(3, 2));
  add("C(10)", cyclic(10));
  add("D(5)", dihedral(5));
  add("C(12)", cyclic(12));
  add("C(6) x C(2)", product_of({cyclic(6), cyclic(2)}));
  add("D(6)", dihedral(6));
  add("A(4)", alternating(4));
  add("SD(C(3),C(4),pow(-1))", cyclic_by_cyclic(3, 4, -1));
  add("C(14)", cyclic(14));
  add("D(7)", dihedral(7));
  add("C(15)", cyclic(15));
  add("C(16)", cyclic(16));
  add("C(4) x C(4)", product_of({cyclic(4), cyclic(4)}));
  add("C(8) x C(2)", product_of({cyclic(8), cyclic(2)}));
  add("C(4) x C(2) x C(2)", product_of({cyclic(4), cyclic(2), cyclic(2)}));
  add("E(2,4)", elementary_abelian(2, 4));
  add("D(8)", dihedral(8));
  add("Q(16)", quaternion(16));
  add("SD(C(8),C(2),pow(3))", cyclic_by_cyclic(8, 2, 3));
  add("SD(C(8),C(2),pow(5))", cyclic_by_cyclic(8, 2, 5));
  add("SD(C(4),C(4),pow(-1))", cyclic_by_cyclic(4, 4, -1));
  add("D(4) x C(2)", product_of({dihedral(4), cyclic(2)}));
  add("Q(8) x C(2)", product_of({quaternion(8), cyclic(2)}));
  // In C(4) x C(2): a = (1,0) has index 2, b = (0,1) index 1, a^2 index 4.
  add("(C(4) x C(2)) : C(2)", c4c2_by_c2(/*ab*/ 3, /*b*/ 1));
  add("C(4) o D(4)", c4c2_by_c2(/*a*/ 2, /*a^2 b*/ 5));
  return c;
}

std::size_t factorial(std::size_t m) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::string iso_type(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const Fingerprint fp = fingerprint(g);
  if (n <= 16) {
    for (const auto& entry : small_group_catalog()) {
      if (entry.group.order() == n && are_isomorphic(g, entry.group)) return entry.name;
    }
    throw Error("iso_type: order " + std::to_string(n) + " group missing from catalog");
  }

  auto matches = [&](const FiniteGroup& candidate) {
    return candidate.order() == n && n <= kDefaultIsoCap && are_isomorphic(g, candidate);
  };
  for (std::size_t o : g.element_orders()) {
    if (o == n) return "C(" + std::to_string(n) + ")";
  }
  if (fp.abelian && fp.order_histogram.size() == 2 && is_prime(fp.order_histogram[1].first)) {
    const std::size_t p = fp.order_histogram[1].first;
    std::size_t k = 0;
    for (std::size_t r = n; r > 1; r /= p) ++k;
    return "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
  }
  for (std::size_t m = 4; factorial(m) / 2 <= n && factorial(m) / 2 <= kDefaultIsoCap; ++m) {
    if (factorial(m) == n && matches(symmetric(m))) return "S(" + std::to_string(m) + ")";
    if (factorial(m) / 2 == n && matches(alternating(m))) return "A(" + std::to_string(m) + ")";
  }
  if (n % 2 == 0 && matches(dihedral(n / 2))) return "D(" + std::to_string(n / 2) + ")";
  if ((n & (n - 1)) == 0 && matches(quaternion(n))) return "Q(" + std::to_string(n) + ")";
  for (const auto& entry : small_group_catalog()) {
    if (entry.group.order() > 9 || entry.group.order() < 3) continue;
    const std::size_t aut_order = automorphism_group(entry.group).group.order();
    if (entry.group.order() * aut_order != n) continue;
    if (matches(holomorph(entry.group).group())) return "Hol(" + entry.name + ")";
  }
  return fingerprint_label(fp);
}

}  // namespace hgs
