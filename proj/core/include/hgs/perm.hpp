#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgs {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}; images()[i] is the image of point i.
class Perm {
public:
  Perm() = default;

  /// Throws InvalidArgument unless `images` is a permutation of 0..n-1.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// Cycles of length > 1, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Order of the permutation (lcm of cycle lengths).
  std::size_t order() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Perm compose(const Perm&, const Perm&);

  std::vector<Point> images_;
};

/// (p ∘ q)(i) = p(q(i)). Throws InvalidArgument on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

/// g p g^-1
Perm conjugate(const Perm& g, const Perm& p);

/// Cycle notation, "(0 1 2)(3 4)"; the identity renders as "()".
std::string to_cycle_string(const Perm& p);

/// Parses cycle notation on `degree` points. "()" and "" give the identity.
/// Malformed text throws ParseError; points outside the degree throw InvalidArgument.
Perm parse_cycles(std::string_view text, std::size_t degree);

/// Largest point mentioned in a cycle string plus one (0 for the identity).
std::size_t cycle_string_extent(std::string_view text);

/// If every cycle of p (fixed points included) has the same length d, returns d.
std::optional<std::size_t> semiregular_cycle_type(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// A sorted, duplicate-free set of permutations of one degree.
class PermSet {
public:
  PermSet() = default;
  PermSet(std::size_t degree, std::vector<Perm> elements, bool is_group = false);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_group() const noexcept { return is_group_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Perm& p) const;

  friend bool operator==(const PermSet& a, const PermSet& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  friend auto operator<=>(const PermSet& a, const PermSet& b) {
    return a.elements_ <=> b.elements_;
  }

private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  bool is_group_ = false;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000;
inline constexpr std::size_t kDefaultDegreeCap = 16;

/// Smallest group containing `gens`. An empty generating set needs `degree`.
/// Throws CapExceeded once the group grows beyond `cap` elements.
PermSet closure(std::span<const Perm> gens, std::size_t degree, std::size_t cap = kDefaultClosureCap);

bool is_transitive(const PermSet& s);

/// Transitive and |S| = degree.
bool is_regular(const PermSet& s);

/// g S g^-1 = S for every g in gens.
bool is_normalized_by(const PermSet& s, std::span<const Perm> gens);

}  // namespace hgs
