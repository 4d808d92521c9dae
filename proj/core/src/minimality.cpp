#include "hgs/minimality.hpp"

#include <algorithm>
#include <set>

#include "hgs/error.hpp"
#include "hgs/subgroups.hpp"

namespace hgs {

namespace {

/// Automorphism tables of N induced by G's generators.
std::vector<const AutomorphismTable*> generator_actions(const HGStructure& s) {
  std::vector<const AutomorphismTable*> out;
  const GroupHom& hom = s.action.hom;
  for (Elem g : hom.source.generators()) out.push_back(&s.action.aut.tables[hom(g)]);
  return out;
}

bool is_g_stable(const SubgroupRef& u, const std::vector<const AutomorphismTable*>& actions) {
  for (const auto* t : actions) {
    for (Elem x : u.members()) {
      if (!u.contains((*t)[x])) return false;
    }
  }
  return true;
}

}  // namespace

SubHopfLattice g_stable_subgroups(const HGStructure& s) {
  const auto actions = generator_actions(s);
  SubHopfLattice lattice;
  for (auto& u : all_subgroups(s.action.n_group)) {
    if (is_g_stable(u, actions)) lattice.stable_subgroups.push_back(std::move(u));
  }
  return lattice;
}

SubHopfLattice g_stable_subgroups_by_orbits(const HGStructure& s) {
  const FiniteGroup& n = s.action.n_group;
  const auto actions = generator_actions(s);

  std::vector<std::vector<Elem>> orbits(n.order());
  for (Elem x = 0; x < n.order(); ++x) {
    auto& orbit = orbits[x];
    orbit.push_back(x);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto* t : actions) {
        const Elem y = (*t)[orbit[head]];
        if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
      }
    }
  }

  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue{{}};  // generator lists
  seen.insert({0});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const SubgroupRef current = generated_subgroup(n, queue[head]);
    for (Elem x = 1; x < n.order(); ++x) {
      if (current.contains(x)) continue;
      std::vector<Elem> gens = queue[head];
      gens.insert(gens.end(), orbits[x].begin(), orbits[x].end());
      if (seen.insert(generated_subgroup(n, gens).members()).second) queue.push_back(std::move(gens));
    }
  }
  SubHopfLattice lattice;
  for (const auto& members : seen) lattice.stable_subgroups.emplace_back(n, members);
  std::sort(lattice.stable_subgroups.begin(), lattice.stable_subgroups.end());
  return lattice;
}

bool is_minimal(const HGStructure& s) {
  if (s.n.size() < 2) throw InvalidArgument("is_minimal: N must be nontrivial");
  return g_stable_subgroups(s).size() == 2;
}

std::optional<SubgroupRef> characteristic_obstruction(const HGStructure& s) {
  std::optional<SubgroupRef> best;
  for (auto& u : characteristic_subgroups(s.action.n_group, s.action.aut)) {
    if (u.is_trivial() || u.is_whole()) continue;
    best = std::move(u);  // sorted ascending, so the last one is the largest
  }
  return best;
}

std::vector<SubgroupRef> normal_complements(const ExtensionProblem& prob) {
  const FiniteGroup& g = prob.group();
  std::vector<SubgroupRef> out;
  for (auto& m : normal_subgroups(g)) {
    if (m.order() != prob.degree()) continue;
    if (intersection(m, prob.g_prime()).is_trivial()) out.push_back(std::move(m));
  }
  return out;
}

std::size_t minimal_lower_bound(const ExtensionProblem& prob) {
  const auto normals = normal_subgroups(prob.group());
  std::size_t count = 0;
  for (const auto& m : normal_complements(prob)) {
    bool has_normal_part = false;
    for (const auto& u : normals) {
      if (!u.is_trivial() && u.order() < m.order() && u.is_subset_of(m)) {
        has_normal_part = true;
        break;
      }
    }
    if (!has_normal_part) ++count;
  }
  return count;
}

HGStructure complement_structure(const CosetAction& act, const SubgroupRef& complement) {
  std::vector<Perm> perms;
  for (Elem m : complement.members()) perms.push_back(act.lambda(m));
  return make_structure(PermSet(act.degree(), std::move(perms), true), act);
}

namespace {

bool certify(const ExtensionProblem& prob, const SubgroupRef& n) {
  const CosetAction act(prob);
  const HGStructure s = complement_structure(act, n);
  return is_regular(s.n) && is_normalized_by(s.n, act.generator_images()) && is_minimal(s);
}

}  // namespace

bool lemma1_certificate(const FiniteGroup& n) {
  if (!is_characteristically_simple(n)) {
    throw InvalidArgument("lemma1_certificate: " + n.name() + " is not characteristically simple");
  }
  const Holomorph hol = holomorph(n);
  const ExtensionProblem prob(hol.group(), hol.product.complement_subgroup(),
                              "(Hol(" + n.name() + "), Aut(" + n.name() + "))");
  return certify(prob, hol.product.normal_subgroup());
}

bool semidirect_certificate(const SemidirectProduct& product) {
  const ExtensionProblem prob(product.group, product.complement_subgroup());
  return certify(prob, product.normal_subgroup());
}

CorrespondenceStats correspondence_stats(const ExtensionProblem& prob, const HGStructure& s) {
  return CorrespondenceStats{g_stable_subgroups(s).size(),
                             subgroups_containing(prob.g_prime()).size()};
}

ClassificationReport classify(const ExtensionProblem& prob, const EngineOptions& options) {
  ClassificationReport report;
  report.problem = prob.description();
  report.group_order = prob.group().order();
  report.degree = prob.degree();

  const CosetAction act(prob);
  for (auto& s : enumerate_regular_normalized(act, options, &report.engine)) {
    ClassifiedStructure entry{std::move(s), {}, false, std::nullopt, false};
    entry.lattice = g_stable_subgroups(entry.structure);
    entry.minimal = entry.lattice.size() == 2;
    entry.obstruction = characteristic_obstruction(entry.structure);
    entry.contained_in_lambda = std::all_of(entry.structure.n.begin(), entry.structure.n.end(),
                                            [&](const Perm& p) { return act.preimage(p).has_value(); });
    if (entry.minimal) ++report.minimal_count;
    report.structures.push_back(std::move(entry));
  }
  std::sort(report.structures.begin(), report.structures.end(), [](const auto& a, const auto& b) {
    if (a.structure.type_name != b.structure.type_name) {
      return a.structure.type_name < b.structure.type_name;
    }
    return a.structure.n < b.structure.n;
  });
  report.intermediate_count = subgroups_containing(prob.g_prime()).size();
  report.normal_complement_count = normal_complements(prob).size();
  report.normal_complement_bound = minimal_lower_bound(prob);
  return report;
}

}  // namespace hgs
