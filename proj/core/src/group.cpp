#include "hgs/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hgs/error.hpp"

namespace hgs {

namespace {

class TableBackend final : public detail::GroupBackend {
public:
  TableBackend(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels)
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {}

  std::size_t order() const override { return order_; }
  Elem mul(Elem a, Elem b) const override { return table_[a * order_ + b]; }
  std::string label(Elem a) const override {
    if (a < labels_.size()) return labels_[a];
    return a == 0 ? "e" : "g" + std::to_string(a);
  }

private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
};

class PermBackend final : public detail::GroupBackend {
public:
  explicit PermBackend(std::vector<Perm> perms) : perms_(std::move(perms)) {
    index_.reserve(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) index_.emplace(perms_[i], static_cast<Elem>(i));
  }

  std::size_t order() const override { return perms_.size(); }
  Elem mul(Elem a, Elem b) const override {
    auto it = index_.find(compose(perms_[a], perms_[b]));
    if (it == index_.end()) throw InvalidArgument("permutation set is not closed");
    return it->second;
  }
  std::string label(Elem a) const override { return to_cycle_string(perms_[a]); }
  const std::vector<Perm>* natural_perms() const override { return &perms_; }

private:
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Elem, PermHash> index_;
};

}  // namespace

FiniteGroup::FiniteGroup()
    : FiniteGroup(std::make_shared<TableBackend>(1, std::vector<Elem>{0}, std::vector<std::string>{}),
                  "C(1)") {}

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupBackend> backend, std::string name,
                         std::vector<Elem> generator_hint) {
  auto state = std::make_shared<State>();
  state->backend = std::move(backend);
  state->name = std::move(name);
  const std::size_t n = state->backend->order();
  state->order = n;
  if (n == 0) throw InvalidArgument("group must have at least one element");

  if (n <= kCayleyTableCap) {
    state->table.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) state->table[a * n + b] = state->backend->mul(a, b);
    }
  }
  auto mul = [&](Elem a, Elem b) {
    return state->table.empty() ? state->backend->mul(a, b) : state->table[a * n + b];
  };

  state->orders.resize(n);
  state->inverses.resize(n);
  for (Elem a = 0; a < n; ++a) {
    // Walk a, a^2, ... until the identity; the last non-identity power is a^-1.
    Elem prev = 0;
    Elem cur = a;
    std::size_t k = 1;
    while (cur != 0) {
      prev = cur;
      cur = mul(cur, a);
      if (++k > n) throw InvalidArgument("element " + std::to_string(a) + " has no finite order");
    }
    state->orders[a] = k;
    state->inverses[a] = prev;
  }

  state_ = state;
  if (!generator_hint.empty()) {
    state->generators = std::move(generator_hint);
  } else if (n > 1) {
    std::vector<Elem> candidates(n - 1);
    std::iota(candidates.begin(), candidates.end(), Elem{1});
    std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
      return state->orders[a] > state->orders[b];
    });
    std::vector<bool> covered(n, false);
    covered[0] = true;
    std::size_t covered_count = 1;
    for (Elem c : candidates) {
      if (covered[c]) continue;
      state->generators.push_back(c);
      const SubgroupRef span = generated_subgroup(*this, state->generators);
      for (Elem x : span.members()) {
        if (!covered[x]) {
          covered[x] = true;
          ++covered_count;
        }
      }
      if (covered_count == n) break;
    }
  }
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> table, std::string name,
                                    std::vector<std::string> labels) {
  if (order == 0 || table.size() != order * order) {
    throw InvalidArgument("multiplication table has wrong size");
  }
  for (std::size_t a = 0; a < order; ++a) {
    if (table[a] != a || table[a * order] != a) {
      throw InvalidArgument("element 0 is not the identity");
    }
    std::vector<bool> row(order, false);
    std::vector<bool> col(order, false);
    for (std::size_t b = 0; b < order; ++b) {
      Elem r = table[a * order + b];
      Elem c = table[b * order + a];
      if (r >= order || c >= order || row[r] || col[c]) {
        throw InvalidArgument("multiplication table is not a Latin square");
      }
      row[r] = col[c] = true;
    }
  }
  FiniteGroup g(std::make_shared<TableBackend>(order, table, std::move(labels)), std::move(name));
  // Light's associativity test: it suffices to check (x g) y = x (g y) for generators g.
  for (Elem gen : g.generators()) {
    for (Elem x = 0; x < order; ++x) {
      for (Elem y = 0; y < order; ++y) {
        if (table[table[x * order + gen] * order + y] != table[x * order + table[gen * order + y]]) {
          throw InvalidArgument("multiplication table is not associative");
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_perms(const PermSet& perms, std::string name) {
  if (perms.size() == 0 || !perms.elements().front().is_identity()) {
    throw InvalidArgument("permutation group must contain the identity");
  }
  return FiniteGroup(std::make_shared<PermBackend>(perms.elements()), std::move(name));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  const auto ord = static_cast<long long>(element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  Elem result = 0;
  for (long long i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup copy = *this;
  auto state = std::make_shared<State>(*state_);
  state->name = std::move(name);
  copy.state_ = std::move(state);
  return copy;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators()) {
    for (Elem b : generators()) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

SubgroupRef::SubgroupRef(FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) {
    throw InvalidArgument("subgroup must contain the identity");
  }
}

SubgroupRef SubgroupRef::trivial(const FiniteGroup& parent) { return SubgroupRef(parent, {0}); }

SubgroupRef SubgroupRef::whole(const FiniteGroup& parent) {
  std::vector<Elem> all(parent.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return SubgroupRef(parent, std::move(all));
}

bool SubgroupRef::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SubgroupRef::is_subset_of(const SubgroupRef& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool operator<(const SubgroupRef& a, const SubgroupRef& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members_ < b.members_;
}

namespace {

class SubgroupBackend final : public detail::GroupBackend {
public:
  explicit SubgroupBackend(SubgroupRef sub) : sub_(std::move(sub)) {
    const auto& m = sub_.members();
    for (std::size_t i = 0; i < m.size(); ++i) local_.emplace(m[i], static_cast<Elem>(i));
    if (const auto* perms = sub_.parent().natural_perms()) {
      for (Elem x : m) perms_.push_back((*perms)[x]);
    }
  }
  std::size_t order() const override { return sub_.order(); }
  Elem mul(Elem a, Elem b) const override {
    return local_.at(sub_.parent().mul(sub_.members()[a], sub_.members()[b]));
  }
  std::string label(Elem a) const override { return sub_.parent().label(sub_.members()[a]); }
  const std::vector<Perm>* natural_perms() const override {
    return perms_.empty() ? nullptr : &perms_;
  }

private:
  SubgroupRef sub_;
  std::unordered_map<Elem, Elem> local_;
  std::vector<Perm> perms_;
};

}  // namespace

FiniteGroup SubgroupRef::as_group(std::string name) const {
  return FiniteGroup(std::make_shared<SubgroupBackend>(*this), std::move(name));
}

bool GroupHom::is_homomorphism() const {
  if (images.size() != source.order()) return false;
  for (Elem a : source.generators()) {
    for (Elem x = 0; x < source.order(); ++x) {
      if (images[source.mul(x, a)] != target.mul(images[x], images[a])) return false;
    }
  }
  return images.empty() || images[0] == 0;
}

bool GroupHom::is_injective() const {
  std::vector<Elem> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

SubgroupRef GroupHom::image() const { return SubgroupRef(target, images); }

SubgroupRef GroupHom::kernel() const {
  std::vector<Elem> members;
  for (Elem x = 0; x < source.order(); ++x) {
    if (images[x] == 0) members.push_back(x);
  }
  return SubgroupRef(source, std::move(members));
}

SubgroupRef generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> members{0};
  seen[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Elem gen : gens) {
      Elem next = g.mul(members[head], gen);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  return SubgroupRef(g, std::move(members));
}

bool is_closed(const FiniteGroup& g, std::span<const Elem> sorted_members) {
  for (Elem a : sorted_members) {
    for (Elem b : sorted_members) {
      if (!std::binary_search(sorted_members.begin(), sorted_members.end(), g.mul(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(const SubgroupRef& h) { return is_normalized_by_generators(h.parent(), h); }

bool is_normalized_by_generators(const FiniteGroup& g, const SubgroupRef& h) {
  for (Elem gen : g.generators()) {
    for (Elem x : h.members()) {
      if (!h.contains(g.conj(gen, x))) return false;
    }
  }
  return true;
}

SubgroupRef normal_core(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Elem> core = h.members();
  for (Elem x = 0; x < g.order() && core.size() > 1; ++x) {
    std::vector<Elem> kept;
    for (Elem y : core) {
      // y lies in x H x^-1 iff x^-1 y x lies in H.
      if (h.contains(g.conj(g.inv(x), y))) kept.push_back(y);
    }
    core = std::move(kept);
  }
  return SubgroupRef(g, std::move(core));
}

SubgroupRef intersection(const SubgroupRef& a, const SubgroupRef& b) {
  std::vector<Elem> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return SubgroupRef(a.parent(), std::move(common));
}

SubgroupRef center(const FiniteGroup& g) {
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem gen : g.generators()) {
      if (g.mul(x, gen) != g.mul(gen, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return SubgroupRef(g, std::move(members));
}

std::vector<std::size_t> left_coset_indices(const SubgroupRef& h) {
  const FiniteGroup& g = h.parent();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(g.order(), kUnset);
  std::size_t next = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    for (Elem y : h.members()) coset_of[g.mul(x, y)] = next;
    ++next;
  }
  return coset_of;
}

}  // namespace hgs
