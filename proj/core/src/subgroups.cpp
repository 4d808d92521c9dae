#include "hgs/subgroups.hpp"

#include <algorithm>
#include <set>

#include "hgs/error.hpp"

namespace hgs {

namespace {

struct LatticeNode {
  std::vector<Elem> generators;
  std::vector<bool> member;
};

/// One representative generator per distinct cyclic subgroup.
std::vector<Elem> cyclic_subgroup_generators(const FiniteGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Elem> reps;
  for (Elem x = 1; x < g.order(); ++x) {
    const Elem gen[] = {x};
    if (seen.insert(generated_subgroup(g, gen).members()).second) reps.push_back(x);
  }
  return reps;
}

}  // namespace

std::vector<SubgroupRef> subgroups_containing(const SubgroupRef& h, std::size_t cap) {
  const FiniteGroup& g = h.parent();
  const std::size_t index = g.order() / h.order();
  if (index > cap) {
    throw CapExceeded("subgroup enumeration: index " + std::to_string(index) + " exceeds cap " +
                      std::to_string(cap));
  }
  const std::vector<Elem> cyclic = cyclic_subgroup_generators(g);

  std::set<std::vector<Elem>> seen;
  std::vector<LatticeNode> queue;
  auto visit = [&](std::vector<Elem> gens) {
    SubgroupRef s = generated_subgroup(g, gens);
    if (!seen.insert(s.members()).second) return;
    LatticeNode node{std::move(gens), std::vector<bool>(g.order(), false)};
    for (Elem x : s.members()) node.member[x] = true;
    queue.push_back(std::move(node));
  };

  std::vector<Elem> base;
  for (Elem x : h.members()) {
    if (!generated_subgroup(g, base).contains(x)) base.push_back(x);
  }
  visit(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem c : cyclic) {
      if (queue[head].member[c]) continue;
      std::vector<Elem> gens = queue[head].generators;
      gens.push_back(c);
      visit(std::move(gens));
    }
  }

  std::vector<SubgroupRef> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.emplace_back(g, members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g, std::size_t cap) {
  return subgroups_containing(SubgroupRef::trivial(g), cap);
}

std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("normal subgroup enumeration: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
  // Conjugacy classes; a normal subgroup is generated by the classes it contains.
  std::vector<std::vector<Elem>> classes;
  std::vector<bool> classified(g.order(), false);
  for (Elem x = 1; x < g.order(); ++x) {
    if (classified[x]) continue;
    std::vector<Elem> cls{x};
    classified[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (Elem gen : g.generators()) {
        const Elem y = g.conj(gen, cls[head]);
        if (!classified[y]) {
          classified[y] = true;
          cls.push_back(y);
        }
      }
    }
    classes.push_back(std::move(cls));
  }

  std::set<std::vector<Elem>> seen;
  std::vector<LatticeNode> queue;
  auto visit = [&](std::vector<Elem> gens) {
    SubgroupRef s = generated_subgroup(g, gens);
    if (!seen.insert(s.members()).second) return;
    LatticeNode node{std::move(gens), std::vector<bool>(g.order(), false)};
    for (Elem x : s.members()) node.member[x] = true;
    queue.push_back(std::move(node));
  };
  visit({});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& cls : classes) {
      if (queue[head].member[cls.front()]) continue;
      std::vector<Elem> gens = queue[head].generators;
      gens.insert(gens.end(), cls.begin(), cls.end());
      visit(std::move(gens));
    }
  }
  std::vector<SubgroupRef> out;
  for (const auto& members : seen) out.emplace_back(g, members);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_stable_under(const SubgroupRef& s, const AutomorphismGroup& aut) {
  for (Elem a : aut.group.generators()) {
    for (Elem x : s.members()) {
      if (!s.contains(aut.tables[a][x])) return false;
    }
  }
  return true;
}

std::vector<SubgroupRef> characteristic_subgroups(const FiniteGroup& g, const AutomorphismGroup& aut,
                                                  std::size_t cap) {
  std::vector<SubgroupRef> out;
  for (auto& s : all_subgroups(g, cap)) {
    if (is_stable_under(s, aut)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<SubgroupRef> characteristic_subgroups(const FiniteGroup& g, std::size_t cap) {
  return characteristic_subgroups(g, automorphism_group(g), cap);
}

bool is_characteristically_simple(const FiniteGroup& g) {
  return characteristic_subgroups(g).size() == (g.order() == 1 ? 1u : 2u);
}

std::optional<SubgroupRef> unique_sylow(const FiniteGroup& g, std::size_t p) {
  if (!is_prime(p) || g.order() % p != 0) {
    throw InvalidArgument("unique_sylow: " + std::to_string(p) + " is not a prime dividing |G| = " +
                          std::to_string(g.order()));
  }
  std::size_t sylow_order = 1;
  for (std::size_t rest = g.order(); rest % p == 0; rest /= p) sylow_order *= p;

  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  // Every p-element lies in some Sylow p-subgroup, so the p-elements number
  // exactly p^a precisely when there is only one Sylow p-subgroup.
  std::vector<Elem> p_elements;
  for (Elem x = 0; x < g.order(); ++x) {
    if (is_p_power(g.element_order(x))) p_elements.push_back(x);
  }
  if (p_elements.size() != sylow_order) return std::nullopt;
  return SubgroupRef(g, std::move(p_elements));
}

}  // namespace hgs
