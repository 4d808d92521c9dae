#include "hgs/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "hgs/error.hpp"

namespace hgs {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("not a permutation: image list is not a bijection");
    }
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Perm(std::move(images), Unchecked{});
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree) {
        throw InvalidArgument("cycle point " + std::to_string(from) + " outside degree " +
                              std::to_string(degree));
      }
      if (used[from]) {
        throw InvalidArgument("cycles are not disjoint at point " + std::to_string(from));
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Perm(std::move(inv), Unchecked{});
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  }
  std::vector<Point> images(q.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.images_[q.images_[i]];
  return Perm(std::move(images), Perm::Unchecked{});
}

Perm conjugate(const Perm& g, const Perm& p) { return compose(compose(g, p), g.inverse()); }

std::string to_cycle_string(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

namespace {

std::vector<std::vector<Point>> parse_cycle_list(std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("cycle notation: expected '('", 1, i + 1);
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("cycle notation: unterminated cycle", 1, i + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("cycle notation: unexpected character '" + std::string(1, text[i]) + "'", 1,
                         i + 1);
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 0xFFFF) throw ParseError("cycle notation: point too large", 1, i + 1);
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm parse_cycles(std::string_view text, std::size_t degree) {
  return Perm::from_cycles(degree, parse_cycle_list(text));
}

std::size_t cycle_string_extent(std::string_view text) {
  std::size_t extent = 0;
  for (const auto& cycle : parse_cycle_list(text)) {
    for (Point x : cycle) extent = std::max<std::size_t>(extent, x + 1u);
  }
  return extent;
}

std::optional<std::size_t> semiregular_cycle_type(const Perm& p) {
  if (p.degree() == 0) return 1;
  std::vector<bool> seen(p.degree(), false);
  std::size_t common = 0;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    if (common == 0) {
      common = len;
    } else if (len != common) {
      return std::nullopt;
    }
  }
  return common;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

PermSet::PermSet(std::size_t degree, std::vector<Perm> elements, bool is_group)
    : degree_(degree), elements_(std::move(elements)), is_group_(is_group) {
  for (const auto& p : elements_) {
    if (p.degree() != degree_) throw InvalidArgument("PermSet: element degree mismatch");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermSet::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermSet closure(std::span<const Perm> gens, std::size_t degree, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidArgument("closure: generator degree mismatch");
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> elements{Perm::identity(degree)};
  seen.insert(elements.front());
  // Right multiplication by generators reaches every element of a finite group.
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw CapExceeded("closure: group exceeds cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return PermSet(degree, std::move(elements), true);
}

bool is_transitive(const PermSet& s) {
  const std::size_t n = s.degree();
  if (n == 0) return true;
  std::vector<bool> reached(n, false);
  std::size_t count = 0;
  for (const auto& p : s) {
    if (!reached[p(0)]) {
      reached[p(0)] = true;
      ++count;
    }
  }
  // For a group the orbit of 0 is {p(0) : p in S}.
  return count == n;
}

bool is_regular(const PermSet& s) { return s.size() == s.degree() && is_transitive(s); }

bool is_normalized_by(const PermSet& s, std::span<const Perm> gens) {
  for (const auto& g : gens) {
    if (g.degree() != s.degree()) throw InvalidArgument("is_normalized_by: degree mismatch");
    const Perm g_inv = g.inverse();
    for (const auto& p : s) {
      if (!s.contains(compose(compose(g, p), g_inv))) return false;
    }
  }
  return true;
}

}  // namespace hgs
