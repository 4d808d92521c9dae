#include "hgs/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "hgs/error.hpp"

namespace hgs {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

/// Backtracking state for extending generator images to an injective homomorphism.
class EmbeddingSearch {
public:
  EmbeddingSearch(const FiniteGroup& source, const FiniteGroup& target,
                  const std::function<bool(const std::vector<Elem>&)>& visit)
      : source_(source), target_(target), visit_(visit), gens_(source.generators()) {
    for (Elem g : gens_) {
      std::vector<Elem> cands;
      for (Elem y = 0; y < target.order(); ++y) {
        if (target.element_order(y) == source.element_order(g)) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
  }

  void run() {
    if (source_.order() > target_.order()) return;
    if (gens_.empty()) {
      visit_(std::vector<Elem>{0});
      return;
    }
    images_.assign(gens_.size(), 0);
    descend(0);
  }

private:
  // Extends the assignment gens_[0..depth] to <gens_[0..depth]> and checks that
  // it is a well-defined injective homomorphism there.
  bool extend(std::size_t depth, std::vector<Elem>& map) const {
    map.assign(source_.order(), kUnset);
    std::vector<bool> used(target_.order(), false);
    std::vector<Elem> queue{0};
    map[0] = 0;
    used[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (std::size_t i = 0; i <= depth; ++i) {
        const Elem y = source_.mul(x, gens_[i]);
        const Elem fy = target_.mul(map[x], images_[i]);
        if (map[y] == kUnset) {
          if (used[fy]) return false;
          used[fy] = true;
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(std::size_t depth) {
    std::vector<Elem> map;
    for (Elem candidate : candidates_[depth]) {
      images_[depth] = candidate;
      if (!extend(depth, map)) continue;
      if (depth + 1 == gens_.size()) {
        if (!visit_(map)) return false;
      } else if (!descend(depth + 1)) {
        return false;
      }
    }
    return true;
  }

  const FiniteGroup& source_;
  const FiniteGroup& target_;
  const std::function<bool(const std::vector<Elem>&)>& visit_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> images_;
};

}  // namespace

void for_each_embedding(const FiniteGroup& source, const FiniteGroup& target,
                        const std::function<bool(const std::vector<Elem>&)>& visit) {
  EmbeddingSearch(source, target, visit).run();
}

Elem AutomorphismGroup::index_of(const AutomorphismTable& table) const {
  auto it = std::lower_bound(tables.begin(), tables.end(), table);
  if (it == tables.end() || *it != table) {
    throw InvalidArgument("map is not an automorphism in this group");
  }
  return static_cast<Elem>(it - tables.begin());
}

AutomorphismGroup automorphism_group(const FiniteGroup& n, std::size_t cap) {
  if (n.order() > cap) {
    throw CapExceeded("automorphism group: |N| = " + std::to_string(n.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<AutomorphismTable> tables;
  for_each_embedding(n, n, [&](const std::vector<Elem>& map) {
    tables.push_back(map);
    return true;
  });
  // The identity table is the lexicographically smallest bijection, so it lands at index 0.
  std::sort(tables.begin(), tables.end());
  const std::size_t order = tables.size();
  std::vector<Elem> table(order * order);
  std::map<AutomorphismTable, Elem> index;
  for (std::size_t i = 0; i < order; ++i) index.emplace(tables[i], static_cast<Elem>(i));
  AutomorphismTable composed(n.order());
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n.order(); ++x) composed[x] = tables[a][tables[b][x]];
      table[a * order + b] = index.at(composed);
    }
  }
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string l = "{";
    for (std::size_t i = 0; i < n.generators().size(); ++i) {
      const Elem g = n.generators()[i];
      if (i) l += ", ";
      l += n.label(g) + "->" + n.label(tables[a][g]);
    }
    labels[a] = a == 0 ? "id" : l + "}";
  }
  AutomorphismGroup out{FiniteGroup::from_table(order, std::move(table), "Aut(" + n.name() + ")",
                                                std::move(labels)),
                        std::move(tables)};
  return out;
}

AutomorphismTable inner_automorphism(const FiniteGroup& n, Elem g) {
  AutomorphismTable t(n.order());
  for (Elem x = 0; x < n.order(); ++x) t[x] = n.conj(g, x);
  return t;
}

Holomorph holomorph(const FiniteGroup& n, std::size_t aut_cap, std::size_t order_cap) {
  AutomorphismGroup aut = automorphism_group(n, aut_cap);
  SemidirectProduct product = semidirect_product(n, aut.group, aut.tables, order_cap);
  product.group = product.group.renamed("Hol(" + n.name() + ")");
  return Holomorph{std::move(product), std::move(aut)};
}

GammaSubgroups gamma_subgroups(const Holomorph& hol) {
  const FiniteGroup& n = hol.product.normal;
  std::vector<Elem> g1, g2;
  for (Elem g = 0; g < n.order(); ++g) {
    g1.push_back(hol.element(g, 0));
    g2.push_back(hol.element(n.inv(g), hol.aut.index_of(inner_automorphism(n, g))));
  }
  return GammaSubgroups{SubgroupRef(hol.group(), std::move(g1)),
                        SubgroupRef(hol.group(), std::move(g2))};
}

std::optional<GammaWitness> gamma2_conjugation_counterexample(const Holomorph& hol) {
  const FiniteGroup& n = hol.product.normal;
  const FiniteGroup& hg = hol.group();
  const AutomorphismGroup& aut = hol.aut;
  std::vector<Elem> sigma(n.order());
  for (Elem g = 0; g < n.order(); ++g) sigma[g] = aut.index_of(inner_automorphism(n, g));

  for (Elem theta = 0; theta < aut.tables.size(); ++theta) {
    const AutomorphismTable& t = aut.tables[theta];
    const Elem theta_inv = aut.group.inv(theta);
    const AutomorphismTable& t_inv = aut.tables[theta_inv];
    for (Elem x = 0; x < n.order(); ++x) {
      const Elem left = hol.element(x, theta);
      const Elem right = hol.element(t_inv[n.inv(x)], theta_inv);
      for (Elem g = 0; g < n.order(); ++g) {
        const Elem middle = hol.element(n.inv(g), sigma[g]);
        const Elem lhs = hg.mul(hg.mul(left, middle), right);
        const Elem rhs = hol.element(t[n.inv(g)], sigma[t[g]]);
        if (lhs != rhs) return GammaWitness{x, g, theta};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hgs
