#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgs/constructions.hpp"
#include "hgs/engine.hpp"
#include "hgs/group.hpp"

namespace hgs {

/// λ(G)-stable subgroups of N, i.e. the sub-Hopf algebra lattice of the
/// structure. Members are subgroups of the structure's abstract N, sorted by
/// (order, members), so the trivial subgroup is first and N itself last.
struct SubHopfLattice {
  std::vector<SubgroupRef> stable_subgroups;
  std::size_t size() const noexcept { return stable_subgroups.size(); }
};

/// Filters all subgroups of N by stability under the induced G-action.
SubHopfLattice g_stable_subgroups(const HGStructure& s);

/// Second route: the lattice of subgroups generated by unions of G-orbits of
/// elements, grown from the trivial subgroup. Must agree with g_stable_subgroups.
SubHopfLattice g_stable_subgroups_by_orbits(const HGStructure& s);

/// Exactly two stable subgroups: {1} and N.
bool is_minimal(const HGStructure& s);

/// Largest nontrivial proper characteristic subgroup of N, if any.
std::optional<SubgroupRef> characteristic_obstruction(const HGStructure& s);

/// Normal subgroups M of G with M ∩ G' = 1 and M G' = G.
std::vector<SubgroupRef> normal_complements(const ExtensionProblem& prob);

/// Normal complements with no proper nontrivial subgroup normal in G.
std::size_t minimal_lower_bound(const ExtensionProblem& prob);

/// The structure N = λ(M) for a normal complement M of G'.
HGStructure complement_structure(const CosetAction& act, const SubgroupRef& complement);

/// For characteristically simple N, builds (Hol(N), Aut(N)) and checks that
/// the structure given by the translations {(g, 1)} is minimal.
/// Throws InvalidArgument when N is not characteristically simple.
bool lemma1_certificate(const FiniteGroup& n);

/// The same check for a semidirect product N ⋊ H with G' = H.
bool semidirect_certificate(const SemidirectProduct& product);

struct CorrespondenceStats {
  std::size_t subhopf_count = 0;
  std::size_t intermediate_count = 0;  // subgroups H with G' <= H <= G, both ends included
};

CorrespondenceStats correspondence_stats(const ExtensionProblem& prob, const HGStructure& s);

struct ClassifiedStructure {
  HGStructure structure;
  SubHopfLattice lattice;
  bool minimal = false;
  std::optional<SubgroupRef> obstruction;
  bool contained_in_lambda = false;
};

struct ClassificationReport {
  std::string problem;
  std::size_t group_order = 0;
  std::size_t degree = 0;
  std::vector<ClassifiedStructure> structures;  // sorted by (type name, key)
  std::size_t intermediate_count = 0;
  std::size_t normal_complement_count = 0;
  std::size_t normal_complement_bound = 0;
  std::size_t minimal_count = 0;
  EngineStats engine;
};

ClassificationReport classify(const ExtensionProblem& prob, const EngineOptions& options = {});

}  // namespace hgs
