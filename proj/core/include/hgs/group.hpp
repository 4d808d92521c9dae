#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hgs/perm.hpp"

namespace hgs {

/// Index of a group element. Element 0 is always the identity.
using Elem = std::uint32_t;

namespace detail {

/// Multiplication rule behind a FiniteGroup. Implementations are immutable.
class GroupBackend {
public:
  virtual ~GroupBackend() = default;
  virtual std::size_t order() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::string label(Elem a) const = 0;
  /// Faithful permutation images of every element, when the group has a natural action.
  virtual const std::vector<Perm>* natural_perms() const { return nullptr; }
};

}  // namespace detail

/// Groups up to this order get a materialised Cayley table.
inline constexpr std::size_t kCayleyTableCap = 1024;

/// An abstract finite group on element indices 0..order-1.
///
/// Copies share the same immutable state, so passing by value is cheap and
/// concurrent read-only use is safe.
class FiniteGroup {
public:
  /// The trivial group.
  FiniteGroup();

  /// `generator_hint`, when non-empty, must generate the group; otherwise a
  /// small generating set is chosen greedily from elements of largest order.
  FiniteGroup(std::shared_ptr<const detail::GroupBackend> backend, std::string name,
              std::vector<Elem> generator_hint = {});

  /// Group from a full multiplication table (row-major, element 0 = identity).
  /// Group axioms are checked.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> table, std::string name,
                                std::vector<std::string> labels = {});

  /// The group formed by a set of permutations closed under composition.
  /// Elements are indexed in the set's canonical (sorted) order.
  static FiniteGroup from_perms(const PermSet& perms, std::string name = {});

  std::size_t order() const noexcept { return state_->order; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const {
    if (!state_->table.empty()) return state_->table[a * state_->order + b];
    return state_->backend->mul(a, b);
  }
  Elem inv(Elem a) const { return state_->inverses[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem pow(Elem a, long long k) const;

  std::size_t element_order(Elem a) const { return state_->orders[a]; }
  const std::vector<std::size_t>& element_orders() const noexcept { return state_->orders; }
  const std::vector<Elem>& generators() const noexcept { return state_->generators; }

  std::string label(Elem a) const { return state_->backend->label(a); }
  const std::string& name() const noexcept { return state_->name; }
  FiniteGroup renamed(std::string name) const;

  const std::vector<Perm>* natural_perms() const { return state_->backend->natural_perms(); }

  bool is_abelian() const;

  /// True when both handles refer to the same constructed group.
  bool same_as(const FiniteGroup& other) const noexcept { return state_ == other.state_; }

private:
  struct State {
    std::shared_ptr<const detail::GroupBackend> backend;
    std::size_t order = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverses;
    std::vector<std::size_t> orders;
    std::vector<Elem> generators;
    std::string name;
  };
  std::shared_ptr<const State> state_;
};

/// A subgroup given by its sorted member indices in a parent group.
class SubgroupRef {
public:
  SubgroupRef() = default;
  /// `members` must be closed; they are sorted and deduplicated here.
  SubgroupRef(FiniteGroup parent, std::vector<Elem> members);

  static SubgroupRef trivial(const FiniteGroup& parent);
  static SubgroupRef whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const;
  bool is_subset_of(const SubgroupRef& other) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

  /// The subgroup as a group in its own right, elements in member order.
  FiniteGroup as_group(std::string name = {}) const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.members_ == b.members_;
  }
  /// Order first, then member list.
  friend bool operator<(const SubgroupRef& a, const SubgroupRef& b);

private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
};

/// A homomorphism given by the image of every source element.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  SubgroupRef image() const;
  SubgroupRef kernel() const;
};

/// Subgroup generated by `gens` (breadth-first right multiplication).
SubgroupRef generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);

/// Whether the sorted member list is closed under multiplication (finite case).
bool is_closed(const FiniteGroup& g, std::span<const Elem> sorted_members);

bool is_normal(const SubgroupRef& h);

/// Normal in `g`, testing conjugation by g's generators only.
bool is_normalized_by_generators(const FiniteGroup& g, const SubgroupRef& h);

/// Largest normal subgroup of the parent contained in h.
SubgroupRef normal_core(const SubgroupRef& h);

SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b);

SubgroupRef center(const FiniteGroup& g);

/// Left cosets xH: coset_of[x] is the index of the coset containing x, with
/// H itself at index 0 and others numbered by their smallest element.
std::vector<std::size_t> left_coset_indices(const SubgroupRef& h);

}  // namespace hgs
