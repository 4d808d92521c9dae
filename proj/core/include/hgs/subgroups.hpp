#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hgs/automorphisms.hpp"
#include "hgs/group.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultSubgroupCap = 200;

/// Every subgroup K with H <= K <= G, each exactly once, sorted by (order, members).
///
/// Built bottom-up: start at H and keep joining with cyclic subgroups until
/// nothing new appears. `cap` bounds the index [G : H]; exceeding it throws
/// CapExceeded.
std::vector<SubgroupRef> subgroups_containing(const SubgroupRef& h,
                                              std::size_t cap = kDefaultSubgroupCap);

/// All subgroups of g (cap bounds |g|).
std::vector<SubgroupRef> all_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap);

/// Normal subgroups, built as joins of conjugacy classes (cap bounds |g|).
std::vector<SubgroupRef> normal_subgroups(const FiniteGroup& g,
                                          std::size_t cap = kDefaultOrderCap);

/// Subgroups fixed setwise by every automorphism of g.
std::vector<SubgroupRef> characteristic_subgroups(const FiniteGroup& g,
                                                  std::size_t cap = kDefaultSubgroupCap);
std::vector<SubgroupRef> characteristic_subgroups(const FiniteGroup& g, const AutomorphismGroup& aut,
                                                  std::size_t cap = kDefaultSubgroupCap);

bool is_characteristically_simple(const FiniteGroup& g);

/// Whether the subgroup is mapped onto itself by every automorphism in `aut`.
bool is_stable_under(const SubgroupRef& s, const AutomorphismGroup& aut);

/// The Sylow p-subgroup of g when it is unique (equivalently normal).
/// Throws InvalidArgument unless p is a prime dividing |g|.
std::optional<SubgroupRef> unique_sylow(const FiniteGroup& g, std::size_t p);

}  // namespace hgs
