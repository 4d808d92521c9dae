#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hgs/constructions.hpp"
#include "hgs/group.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultAutCap = 120;

/// Aut(N) as an abstract group; element i acts on N by tables[i].
/// Multiplication is composition: (a · b)(x) = a(b(x)). Element 0 is the identity map.
struct AutomorphismGroup {
  FiniteGroup group;
  std::vector<AutomorphismTable> tables;

  /// Throws InvalidArgument when the table is not in the group.
  Elem index_of(const AutomorphismTable& table) const;
};

/// All automorphisms of `n`, found by backtracking over images of a small
/// generating sequence with order and partial-relation pruning.
/// Throws CapExceeded when |n| > cap.
AutomorphismGroup automorphism_group(const FiniteGroup& n, std::size_t cap = kDefaultAutCap);

/// σ_g : x -> g x g^-1
AutomorphismTable inner_automorphism(const FiniteGroup& n, Elem g);

/// Enumerates homomorphisms source -> target that are injective. The callback
/// receives the full image table and returns false to stop the search.
void for_each_embedding(const FiniteGroup& source, const FiniteGroup& target,
                        const std::function<bool(const std::vector<Elem>&)>& visit);

/// Hol(N) = N ⋊ Aut(N) with (x, θ)(g, σ) = (x θ(g), θσ).
struct Holomorph {
  SemidirectProduct product;
  AutomorphismGroup aut;

  const FiniteGroup& group() const { return product.group; }
  Elem element(Elem n, Elem aut_index) const { return product.pair(n, aut_index); }
};

Holomorph holomorph(const FiniteGroup& n, std::size_t aut_cap = kDefaultAutCap,
                    std::size_t order_cap = kDefaultOrderCap);

/// Γ1 = {(g, 1)} and Γ2 = {(g^-1, σ_g)} inside Hol(N).
struct GammaSubgroups {
  SubgroupRef gamma1;
  SubgroupRef gamma2;
};

GammaSubgroups gamma_subgroups(const Holomorph& hol);

/// A triple (x, g, θ) violating
///   (x, θ)(g^-1, σ_g)(θ^-1(x^-1), θ^-1) = (θ(g^-1), σ_θ(g)),
/// or nullopt when the identity holds for every triple.
struct GammaWitness {
  Elem x;
  Elem g;
  Elem theta;
};
std::optional<GammaWitness> gamma2_conjugation_counterexample(const Holomorph& hol);

}  // namespace hgs
