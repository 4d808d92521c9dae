#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgs/automorphisms.hpp"
#include "hgs/group.hpp"
#include "hgs/perm.hpp"

namespace hgs {

/// A pair G ⊇ G' with G' core-free in G; the degree is [G : G'].
class ExtensionProblem {
public:
  /// Throws InvalidArgument for a foreign subgroup or degree 1, and
  /// NotNormalClosure when G' contains a nontrivial normal subgroup of G.
  ExtensionProblem(FiniteGroup g, SubgroupRef g_prime, std::string description = {});

  /// G' = {1}.
  static ExtensionProblem galois(const FiniteGroup& g);

  /// G' = stabilizer of point 0 in G's natural permutation action.
  static ExtensionProblem point_stabilizer(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return g_; }
  const SubgroupRef& g_prime() const noexcept { return g_prime_; }
  std::size_t degree() const noexcept { return g_.order() / g_prime_.order(); }
  bool is_galois() const noexcept { return g_prime_.is_trivial(); }
  const std::string& description() const noexcept { return description_; }

private:
  FiniteGroup g_;
  SubgroupRef g_prime_;
  std::string description_;
};

/// Index of the element of g whose natural permutation is `p`, if any.
std::optional<Elem> find_element(const FiniteGroup& g, const Perm& p);

/// Left translation λ of G on the left cosets of G'.
/// Point i is the i-th coset in order of smallest element; G' itself is point 0.
class CosetAction {
public:
  explicit CosetAction(ExtensionProblem problem);

  const ExtensionProblem& problem() const noexcept { return problem_; }
  const FiniteGroup& group() const noexcept { return problem_.group(); }
  std::size_t degree() const noexcept { return problem_.degree(); }

  /// λ(g) for every element g of G.
  const Perm& lambda(Elem g) const { return lambda_[g]; }
  /// λ of G's generators.
  const std::vector<Perm>& generator_images() const noexcept { return generator_images_; }
  /// λ(G) as a permutation group.
  PermSet image() const;
  /// The g with λ(g) = p, if p lies in λ(G).
  std::optional<Elem> preimage(const Perm& p) const;
  std::size_t point_of(Elem g) const { return coset_of_[g]; }

private:
  ExtensionProblem problem_;
  std::vector<std::size_t> coset_of_;
  std::vector<Perm> lambda_;
  std::vector<Perm> generator_images_;
};

CosetAction coset_action(const ExtensionProblem& problem);

/// Conjugation action of G on a λ(G)-normalized N: g -> (n -> λ(g) n λ(g)^-1).
struct InducedAction {
  FiniteGroup n_group;     // N as an abstract group, elements in PermSet order
  AutomorphismGroup aut;   // Aut(N)
  GroupHom hom;            // G -> aut.group
};

/// Throws InvalidArgument when N is not normalized by λ(G).
InducedAction induced_g_action(const PermSet& n, const CosetAction& act);

/// One Hopf-Galois structure: a regular subgroup N normalized by λ(G).
struct HGStructure {
  PermSet n;
  std::string type_name;
  InducedAction action;

  /// Canonical key: the sorted elements in cycle notation.
  std::string key() const;
  /// A small generating set of N in cycle notation.
  std::vector<std::string> generator_strings() const;
};

HGStructure make_structure(const PermSet& n, const CosetAction& act);

struct EngineOptions {
  std::size_t degree_cap = 12;
  std::size_t cross_check_cap = 8;
  std::uint64_t node_budget = 10'000'000;
  std::size_t candidate_cap = 5'000'000;
  unsigned workers = 1;
};

/// Search counters, for reports and benchmarks.
struct EngineStats {
  std::uint64_t nodes = 0;
  std::size_t candidates = 0;
  std::size_t orbits = 0;
};

/// Every regular subgroup of Sym(points) normalized by λ(G), sorted.
///
/// Walks the lattice of λ(G)-stable semiregular subgroups: each is generated by
/// the λ(G)-conjugacy orbits of semiregular permutations it contains.
/// Throws CapExceeded above degree_cap or candidate_cap and BudgetExceeded once
/// node_budget closures have been attempted.
std::vector<PermSet> enumerate_regular_sets(const CosetAction& act, const EngineOptions& options = {},
                                            EngineStats* stats = nullptr);

/// Independent second engine for degree <= cross_check_cap: N is determined by
/// its elements sending point 0 to each point, chosen point by point.
std::vector<PermSet> enumerate_by_point_transversal(const CosetAction& act,
                                                    const EngineOptions& options = {},
                                                    EngineStats* stats = nullptr);

/// enumerate_regular_sets wrapped as structures (type name and induced action).
std::vector<HGStructure> enumerate_regular_normalized(const CosetAction& act,
                                                      const EngineOptions& options = {},
                                                      EngineStats* stats = nullptr);

}  // namespace hgs
