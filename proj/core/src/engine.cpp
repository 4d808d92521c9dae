#include "hgs/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "hgs/error.hpp"
#include "hgs/isomorphism.hpp"

namespace hgs {

ExtensionProblem::ExtensionProblem(FiniteGroup g, SubgroupRef g_prime, std::string description)
    : g_(std::move(g)), g_prime_(std::move(g_prime)), description_(std::move(description)) {
  if (!g_prime_.parent().same_as(g_) && g_prime_.parent().order() != g_.order()) {
    throw InvalidArgument("G' is not a subgroup of G");
  }
  g_prime_ = SubgroupRef(g_, g_prime_.members());
  if (!is_closed(g_, g_prime_.members())) throw InvalidArgument("G' is not closed in G");
  if (degree() < 2) throw InvalidArgument("degree [G : G'] must be at least 2");
  const SubgroupRef core = normal_core(g_prime_);
  if (!core.is_trivial()) {
    throw NotNormalClosure("G' contains a normal subgroup of G of order " +
                           std::to_string(core.order()) +
                           "; (G, G') does not describe a normal closure");
  }
  if (description_.empty()) {
    description_ = "(" + g_.name() + ", subgroup of order " + std::to_string(g_prime_.order()) + ")";
  }
}

ExtensionProblem ExtensionProblem::galois(const FiniteGroup& g) {
  return ExtensionProblem(g, SubgroupRef::trivial(g), "(" + g.name() + ", {1})");
}

ExtensionProblem ExtensionProblem::point_stabilizer(const FiniteGroup& g) {
  const auto* perms = g.natural_perms();
  if (perms == nullptr) {
    throw InvalidArgument(g.name() + " has no natural permutation action");
  }
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    if ((*perms)[x](0) == 0) members.push_back(x);
  }
  return ExtensionProblem(g, SubgroupRef(g, std::move(members)),
                          "(" + g.name() + ", stabilizer of point 0)");
}

std::optional<Elem> find_element(const FiniteGroup& g, const Perm& p) {
  const auto* perms = g.natural_perms();
  if (perms == nullptr) throw InvalidArgument(g.name() + " has no natural permutation action");
  for (Elem x = 0; x < g.order(); ++x) {
    if ((*perms)[x] == p) return x;
  }
  return std::nullopt;
}

CosetAction::CosetAction(ExtensionProblem problem) : problem_(std::move(problem)) {
  const FiniteGroup& g = problem_.group();
  coset_of_ = left_coset_indices(problem_.g_prime());
  const std::size_t n = problem_.degree();
  std::vector<Elem> reps(n);
  for (Elem x = g.order(); x-- > 0;) reps[coset_of_[x]] = x;
  lambda_.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Point> images(n);
    for (std::size_t c = 0; c < n; ++c) images[c] = static_cast<Point>(coset_of_[g.mul(x, reps[c])]);
    lambda_.emplace_back(std::move(images));
  }
  for (Elem gen : g.generators()) generator_images_.push_back(lambda_[gen]);
}

PermSet CosetAction::image() const { return PermSet(degree(), lambda_, true); }

std::optional<Elem> CosetAction::preimage(const Perm& p) const {
  for (Elem x = 0; x < lambda_.size(); ++x) {
    if (lambda_[x] == p) return x;
  }
  return std::nullopt;
}

CosetAction coset_action(const ExtensionProblem& problem) { return CosetAction(problem); }

InducedAction induced_g_action(const PermSet& n, const CosetAction& act) {
  if (!is_normalized_by(n, act.generator_images())) {
    throw InvalidArgument("induced action: N is not normalized by λ(G)");
  }
  FiniteGroup n_group = FiniteGroup::from_perms(n);
  AutomorphismGroup aut = automorphism_group(n_group);
  const FiniteGroup& g = act.group();
  std::vector<Elem> images(g.order());
  AutomorphismTable table(n.size());
  for (Elem x = 0; x < g.order(); ++x) {
    const Perm& lx = act.lambda(x);
    const Perm lx_inv = lx.inverse();
    for (std::size_t i = 0; i < n.size(); ++i) {
      const Perm c = compose(compose(lx, n.elements()[i]), lx_inv);
      auto it = std::lower_bound(n.begin(), n.end(), c);
      table[i] = static_cast<Elem>(it - n.begin());
    }
    images[x] = aut.index_of(table);
  }
  GroupHom hom{g, aut.group, std::move(images)};
  return InducedAction{std::move(n_group), std::move(aut), std::move(hom)};
}

std::string HGStructure::key() const {
  std::string out;
  for (const auto& p : n) {
    if (!out.empty()) out += ' ';
    out += to_cycle_string(p);
  }
  return out;
}

std::vector<std::string> HGStructure::generator_strings() const {
  std::vector<std::string> out;
  for (Elem g : action.n_group.generators()) out.push_back(to_cycle_string(n.elements()[g]));
  return out;
}

HGStructure make_structure(const PermSet& n, const CosetAction& act) {
  InducedAction action = induced_g_action(n, act);
  std::string type = iso_type(action.n_group);
  return HGStructure{n, std::move(type), std::move(action)};
}

namespace {

// Permutations of degree <= 16 packed four bits per point.
using Packed = std::uint64_t;
using Small = std::array<std::uint8_t, 16>;

Packed pack(const Small& s, std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{s[i]} << (4 * i);
  return out;
}

Small unpack(Packed p, std::size_t n) {
  Small s{};
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>((p >> (4 * i)) & 0xF);
  return s;
}

Packed pack_perm(const Perm& p) {
  Small s{};
  for (std::size_t i = 0; i < p.degree(); ++i) s[i] = static_cast<std::uint8_t>(p(static_cast<Point>(i)));
  return pack(s, p.degree());
}

Perm unpack_perm(Packed p, std::size_t n) {
  Small s = unpack(p, n);
  return Perm(std::vector<Point>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n)));
}

// a ∘ b
Packed compose_packed(Packed a, Packed b, std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Packed bi = (b >> (4 * i)) & 0xF;
    out |= ((a >> (4 * bi)) & 0xF) << (4 * i);
  }
  return out;
}

Packed inverse_packed(Packed a, std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{i} << (4 * ((a >> (4 * i)) & 0xF));
  return out;
}

Packed identity_packed(std::size_t n) {
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{i} << (4 * i);
  return out;
}

bool has_fixed_point(Packed a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (((a >> (4 * i)) & 0xF) == i) return true;
  }
  return false;
}

PermSet to_perm_set(const std::vector<Packed>& elements, std::size_t n) {
  std::vector<Perm> perms;
  perms.reserve(elements.size());
  for (Packed p : elements) perms.push_back(unpack_perm(p, n));
  return PermSet(n, std::move(perms), true);
}

void check_degree(const CosetAction& act, std::size_t cap) {
  if (act.degree() > cap || act.degree() > kDefaultDegreeCap) {
    throw CapExceeded("enumeration: degree " + std::to_string(act.degree()) + " exceeds cap " +
                      std::to_string(std::min(cap, kDefaultDegreeCap)));
  }
}

/// All fixed-point-free permutations whose cycles share one length d | n.
std::vector<Packed> semiregular_candidates(std::size_t n, std::size_t cap) {
  std::vector<Packed> out;
  Small img{};
  std::array<bool, 16> used{};
  for (std::size_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    // Each cycle starts at the smallest unused point.
    auto next_cycle = [&](auto&& self) -> void {
      std::size_t start = 0;
      while (start < n && used[start]) ++start;
      if (start == n) {
        if (out.size() >= cap) {
          throw CapExceeded("enumeration: more than " + std::to_string(cap) +
                            " semiregular candidates");
        }
        out.push_back(pack(img, n));
        return;
      }
      used[start] = true;
      auto extend = [&](auto&& ext, std::size_t current, std::size_t remaining) -> void {
        if (remaining == 0) {
          img[current] = static_cast<std::uint8_t>(start);
          self(self);
          return;
        }
        for (std::size_t x = start + 1; x < n; ++x) {
          if (used[x]) continue;
          used[x] = true;
          img[current] = static_cast<std::uint8_t>(x);
          ext(ext, x, remaining - 1);
          used[x] = false;
        }
      };
      extend(extend, start, d - 1);
      used[start] = false;
    };
    next_cycle(next_cycle);
  }
  return out;
}

/// Subgroup generated by `gens` if it is semiregular of order <= n.
bool close_semiregular(const std::vector<Packed>& gens, std::size_t n, std::vector<Packed>& out) {
  out.assign(1, identity_packed(n));
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Packed g : gens) {
      const Packed x = compose_packed(out[head], g, n);
      if (std::find(out.begin(), out.end(), x) != out.end()) continue;
      if (out.size() == n || has_fixed_point(x, n)) return false;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return true;
}

class NodeCounter {
public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (count_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw BudgetExceeded("enumeration: node budget of " + std::to_string(budget_) + " exhausted");
    }
  }
  std::uint64_t count() const { return count_.load(); }

private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> count_{0};
};

}  // namespace

std::vector<PermSet> enumerate_regular_sets(const CosetAction& act, const EngineOptions& options,
                                            EngineStats* stats) {
  check_degree(act, options.degree_cap);
  const std::size_t n = act.degree();

  std::vector<Packed> lambda_gens, lambda_gens_inv;
  for (const auto& p : act.generator_images()) {
    lambda_gens.push_back(pack_perm(p));
    lambda_gens_inv.push_back(inverse_packed(lambda_gens.back(), n));
  }
  auto conj = [&](std::size_t i, Packed x) {
    return compose_packed(compose_packed(lambda_gens[i], x, n), lambda_gens_inv[i], n);
  };

  // λ(G)-conjugacy orbits of semiregular candidates. A regular N has only n-1
  // non-identity elements, so larger orbits can never lie inside one.
  const std::vector<Packed> candidates = semiregular_candidates(n, options.candidate_cap);
  std::unordered_map<Packed, std::uint32_t> index;
  index.reserve(candidates.size());
  for (std::uint32_t i = 0; i < candidates.size(); ++i) index.emplace(candidates[i], i);
  std::vector<bool> done(candidates.size(), false);
  std::vector<std::vector<Packed>> orbits;
  for (std::uint32_t i = 0; i < candidates.size(); ++i) {
    if (done[i]) continue;
    std::vector<Packed> orbit{candidates[i]};
    bool too_big = false;
    for (std::size_t head = 0; head < orbit.size() && !too_big; ++head) {
      for (std::size_t gi = 0; gi < lambda_gens.size(); ++gi) {
        const Packed y = conj(gi, orbit[head]);
        if (std::find(orbit.begin(), orbit.end(), y) != orbit.end()) continue;
        if (orbit.size() == n - 1) {
          too_big = true;
          break;
        }
        orbit.push_back(y);
      }
    }
    for (Packed x : orbit) done[index.at(x)] = true;
    if (!too_big) {
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
  }
  std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
    const std::size_t la = *semiregular_cycle_type(unpack_perm(a.front(), n));
    const std::size_t lb = *semiregular_cycle_type(unpack_perm(b.front(), n));
    return la != lb ? la < lb : a.front() < b.front();
  });

  NodeCounter counter(options.node_budget);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(
                                                                                std::max<std::size_t>(orbits.size(), 1))));
  std::vector<std::set<std::vector<Packed>>> found(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto explore = [&](unsigned w) {
    try {
      struct Node {
        std::vector<Packed> gens;
        std::vector<Packed> elements;
      };
      std::set<std::vector<Packed>> visited;
      std::vector<Node> stack;
      std::vector<Packed> closed;
      auto try_child = [&](const std::vector<Packed>& base_gens, const std::vector<Packed>& orbit) {
        counter.tick();
        std::vector<Packed> gens = base_gens;
        gens.insert(gens.end(), orbit.begin(), orbit.end());
        if (!close_semiregular(gens, n, closed)) return;
        if (!visited.insert(closed).second) return;
        if (closed.size() == n) found[w].insert(closed);
        stack.push_back(Node{std::move(gens), closed});
      };
      for (std::size_t top = w; top < orbits.size(); top += workers) {
        try_child({}, orbits[top]);
        while (!stack.empty()) {
          Node node = std::move(stack.back());
          stack.pop_back();
          if (node.elements.size() == n) continue;
          for (const auto& orbit : orbits) {
            if (std::binary_search(node.elements.begin(), node.elements.end(), orbit.front())) continue;
            try_child(node.gens, orbit);
          }
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    explore(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(explore, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::set<PermSet> merged;
  for (const auto& part : found) {
    for (const auto& elements : part) merged.insert(to_perm_set(elements, n));
  }
  if (stats) {
    stats->nodes = counter.count();
    stats->candidates = candidates.size();
    stats->orbits = orbits.size();
  }
  return {merged.begin(), merged.end()};
}

std::vector<PermSet> enumerate_by_point_transversal(const CosetAction& act,
                                                    const EngineOptions& options,
                                                    EngineStats* stats) {
  const std::size_t n = act.degree();
  if (n > options.cross_check_cap) {
    throw CapExceeded("point-transversal engine: degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(options.cross_check_cap));
  }

  // by_target[j]: fixed-point-free permutations with equal cycle lengths sending 0 to j.
  std::vector<std::vector<Perm>> by_target(n);
  std::size_t candidate_count = 0;
  {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    do {
      Perm p(images);
      if (p(0) == 0) continue;
      bool fixed = false;
      for (std::size_t i = 0; i < n && !fixed; ++i) fixed = p(static_cast<Point>(i)) == i;
      if (fixed || !semiregular_cycle_type(p)) continue;
      by_target[p(0)].push_back(std::move(p));
      ++candidate_count;
    } while (std::next_permutation(images.begin(), images.end()));
  }

  const std::vector<Perm>& gens = act.generator_images();
  std::vector<Perm> gens_inv;
  for (const auto& g : gens) gens_inv.push_back(g.inverse());

  NodeCounter counter(options.node_budget);
  std::set<PermSet> found;

  // Closes `elements` under products and λ(G)-conjugation; fails as soon as two
  // elements send point 0 to the same place or a non-identity element fixes 0.
  auto close = [&](std::vector<Perm>& elements, std::vector<int>& owner) {
    for (std::size_t head = 0; head < elements.size(); ++head) {
      std::vector<Perm> fresh;
      const Perm x = elements[head];
      for (std::size_t j = 0; j <= head; ++j) {
        fresh.push_back(compose(x, elements[j]));
        fresh.push_back(compose(elements[j], x));
      }
      for (std::size_t i = 0; i < gens.size(); ++i) fresh.push_back(compose(compose(gens[i], x), gens_inv[i]));
      for (auto& y : fresh) {
        const int o = owner[y(0)];
        if (o >= 0) {
          if (elements[static_cast<std::size_t>(o)] != y) return false;
          continue;
        }
        owner[y(0)] = static_cast<int>(elements.size());
        elements.push_back(std::move(y));
      }
    }
    return true;
  };

  auto search = [&](auto&& self, const std::vector<Perm>& elements, const std::vector<int>& owner) -> void {
    if (elements.size() == n) {
      found.insert(PermSet(n, elements, true));
      return;
    }
    std::size_t target = 1;
    while (owner[target] >= 0) ++target;
    for (const auto& candidate : by_target[target]) {
      counter.tick();
      std::vector<Perm> next = elements;
      std::vector<int> next_owner = owner;
      next_owner[target] = static_cast<int>(next.size());
      next.push_back(candidate);
      if (!close(next, next_owner)) continue;
      self(self, next, next_owner);
    }
  };

  std::vector<int> owner(n, -1);
  owner[0] = 0;
  search(search, std::vector<Perm>{Perm::identity(n)}, owner);

  if (stats) {
    stats->nodes = counter.count();
    stats->candidates = candidate_count;
    stats->orbits = 0;
  }
  return {found.begin(), found.end()};
}

std::vector<HGStructure> enumerate_regular_normalized(const CosetAction& act,
                                                      const EngineOptions& options,
                                                      EngineStats* stats) {
  std::vector<HGStructure> out;
  for (const auto& n : enumerate_regular_sets(act, options, stats)) {
    out.push_back(make_structure(n, act));
  }
  return out;
}

}  // namespace hgs
