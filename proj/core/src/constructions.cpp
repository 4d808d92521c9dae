#include "hgs/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hgs/error.hpp"

namespace hgs {

namespace {

/// Multiplication table with explicit labels and, optionally, a natural action.
class ExplicitBackend final : public detail::GroupBackend {
public:
  ExplicitBackend(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels,
                  std::vector<Perm> perms = {})
      : order_(order), table_(std::move(table)), labels_(std::move(labels)), perms_(std::move(perms)) {}

  std::size_t order() const override { return order_; }
  Elem mul(Elem a, Elem b) const override { return table_[a * order_ + b]; }
  std::string label(Elem a) const override { return labels_[a]; }
  const std::vector<Perm>* natural_perms() const override {
    return perms_.empty() ? nullptr : &perms_;
  }

private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
};

template <typename Mul>
std::vector<Elem> make_table(std::size_t order, Mul&& mul) {
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<Elem>(mul(a, b));
  }
  return table;
}

std::string power_label(const char* base, std::size_t exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return base;
  return std::string(base) + "^" + std::to_string(exponent);
}

void check_order_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw CapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(cap));
  }
}

/// Generic pair multiplication for direct and semidirect products.
class PairBackend final : public detail::GroupBackend {
public:
  PairBackend(FiniteGroup normal, FiniteGroup complement, std::vector<AutomorphismTable> action)
      : normal_(std::move(normal)), complement_(std::move(complement)), action_(std::move(action)) {}

  std::size_t order() const override { return normal_.order() * complement_.order(); }
  Elem mul(Elem a, Elem b) const override {
    const std::size_t m = complement_.order();
    const Elem n1 = static_cast<Elem>(a / m);
    const Elem h1 = static_cast<Elem>(a % m);
    const Elem n2 = static_cast<Elem>(b / m);
    const Elem h2 = static_cast<Elem>(b % m);
    const Elem twisted = action_.empty() ? n2 : action_[h1][n2];
    return static_cast<Elem>(normal_.mul(n1, twisted) * m + complement_.mul(h1, h2));
  }
  std::string label(Elem a) const override {
    const std::size_t m = complement_.order();
    return "(" + normal_.label(static_cast<Elem>(a / m)) + ", " +
           complement_.label(static_cast<Elem>(a % m)) + ")";
  }

private:
  FiniteGroup normal_;
  FiniteGroup complement_;
  std::vector<AutomorphismTable> action_;
};

bool is_automorphism(const FiniteGroup& n, const AutomorphismTable& t) {
  if (t.size() != n.order() || t[0] != 0) return false;
  std::vector<bool> hit(n.order(), false);
  for (Elem x : t) {
    if (x >= n.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (Elem g : n.generators()) {
    for (Elem x = 0; x < n.order(); ++x) {
      if (t[n.mul(x, g)] != n.mul(t[x], t[g])) return false;
    }
  }
  return true;
}

SemidirectProduct make_pair_group(const FiniteGroup& normal, const FiniteGroup& complement,
                                  std::vector<AutomorphismTable> action, std::string name,
                                  std::size_t cap) {
  check_order_cap(normal.order() * complement.order(), cap);
  const auto m = static_cast<Elem>(complement.order());
  std::vector<Elem> gens;
  for (Elem g : normal.generators()) gens.push_back(g * m);
  for (Elem h : complement.generators()) gens.push_back(h);
  auto backend = std::make_shared<PairBackend>(normal, complement, action);
  SemidirectProduct out{FiniteGroup(std::move(backend), std::move(name), std::move(gens)), normal,
                        complement, std::move(action)};
  return out;
}

}  // namespace

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("C(n) needs n >= 1");
  std::vector<std::string> labels(n);
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : power_label("a", i);
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>((x + i) % n);
    perms.emplace_back(std::move(images));
  }
  auto table = make_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
  return FiniteGroup(std::make_shared<ExplicitBackend>(n, std::move(table), std::move(labels),
                                                       std::move(perms)),
                     "C(" + std::to_string(n) + ")", n > 1 ? std::vector<Elem>{1} : std::vector<Elem>{});
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw InvalidArgument("D(n) needs n >= 1");
  // r^i s^j has index i + n j; s r^k = r^-k s.
  const std::size_t order = 2 * n;
  auto table = make_table(order, [n](std::size_t a, std::size_t b) {
    const std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
    const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
    return rot + n * ((j + l) % 2);
  });
  std::vector<std::string> labels(order);
  std::vector<Perm> perms;
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t i = a % n, j = a / n;
    std::string l = power_label("r", i) + (j ? "s" : "");
    labels[a] = l.empty() ? "e" : l;
    if (n >= 3) {
      // Vertex x of the n-gon: r: x -> x+1, s: x -> -x.
      std::vector<Point> images(n);
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t reflected = j ? (n - x) % n : x;
        images[x] = static_cast<Point>((reflected + i) % n);
      }
      perms.emplace_back(std::move(images));
    }
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(static_cast<Elem>(n));
  return FiniteGroup(std::make_shared<ExplicitBackend>(order, std::move(table), std::move(labels),
                                                       std::move(perms)),
                     "D(" + std::to_string(n) + ")", std::move(gens));
}

namespace {

FiniteGroup symmetric_like(std::size_t m, bool even_only, std::string name) {
  if (m == 0) throw InvalidArgument("symmetric/alternating groups need m >= 1");
  std::size_t total = 1;
  for (std::size_t i = 2; i <= m; ++i) {
    total *= i;
    check_order_cap(total / (even_only ? 2 : 1), kDefaultOrderCap);
  }
  std::vector<Point> images(m);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Perm> perms;
  do {
    Perm p(images);
    if (!even_only || p.degree() == 0) {
      perms.push_back(std::move(p));
      continue;
    }
    std::size_t transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += c.size() - 1;
    if (transpositions % 2 == 0) perms.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return FiniteGroup::from_perms(PermSet(m, std::move(perms), true), std::move(name));
}

}  // namespace

FiniteGroup symmetric(std::size_t m) {
  return symmetric_like(m, false, "S(" + std::to_string(m) + ")");
}

FiniteGroup alternating(std::size_t m) {
  return symmetric_like(m, true, "A(" + std::to_string(m) + ")");
}

FiniteGroup elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) throw InvalidArgument("E(p,k) needs p prime, got " + std::to_string(p));
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= p;
    check_order_cap(order, kDefaultOrderCap);
  }
  auto table = make_table(order, [p, k](std::size_t a, std::size_t b) {
    std::size_t result = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      result += ((a / scale % p + b / scale % p) % p) * scale;
      scale *= p;
    }
    return result;
  });
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string l = "[";
    std::size_t rest = a;
    for (std::size_t i = 0; i < k; ++i) {
      if (i) l += ",";
      l += std::to_string(rest % p);
      rest /= p;
    }
    labels[a] = l + "]";
  }
  std::vector<Elem> gens;
  std::size_t scale = 1;
  for (std::size_t i = 0; i < k; ++i, scale *= p) gens.push_back(static_cast<Elem>(scale));
  return FiniteGroup(std::make_shared<ExplicitBackend>(order, std::move(table), std::move(labels)),
                     "E(" + std::to_string(p) + "," + std::to_string(k) + ")", std::move(gens));
}

FiniteGroup quaternion(std::size_t order) {
  if (order < 8 || (order & (order - 1)) != 0) {
    throw InvalidArgument("Q(n) needs n a power of two, n >= 8");
  }
  check_order_cap(order, kDefaultOrderCap);
  // a^i b^j has index i + n j with a^n = 1, b^2 = a^(n/2), b a b^-1 = a^-1.
  const std::size_t n = order / 2;
  auto table = make_table(order, [n](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, j = x / n, l = y % n, m = y / n;
    if (j == 0) return (i + l) % n + n * m;
    const std::size_t rot = (i + n - l) % n;
    if (m == 0) return rot + n;
    return (rot + n / 2) % n;
  });
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string l = power_label("a", a % n) + (a / n ? "b" : "");
    labels[a] = l.empty() ? "e" : l;
  }
  return FiniteGroup(std::make_shared<ExplicitBackend>(order, std::move(table), std::move(labels)),
                     "Q(" + std::to_string(order) + ")",
                     std::vector<Elem>{1, static_cast<Elem>(n)});
}

FiniteGroup permutation_group(std::span<const Perm> gens, std::size_t degree, std::size_t cap) {
  PermSet elements = closure(gens, degree, cap);
  std::string name = "gens[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) name += ",";
    name += to_cycle_string(gens[i]);
  }
  name += "]";
  return FiniteGroup::from_perms(elements, std::move(name));
}

SubgroupRef SemidirectProduct::normal_subgroup() const {
  std::vector<Elem> members;
  for (Elem n = 0; n < normal.order(); ++n) members.push_back(pair(n, 0));
  return SubgroupRef(group, std::move(members));
}

SubgroupRef SemidirectProduct::complement_subgroup() const {
  std::vector<Elem> members;
  for (Elem h = 0; h < complement.order(); ++h) members.push_back(pair(0, h));
  return SubgroupRef(group, std::move(members));
}

SemidirectProduct semidirect_product(const FiniteGroup& normal, const FiniteGroup& complement,
                                     std::vector<AutomorphismTable> action, std::size_t cap) {
  if (action.size() != complement.order()) {
    throw InvalidArgument("semidirect product: action needs one table per complement element");
  }
  for (const auto& t : action) {
    if (!is_automorphism(normal, t)) {
      throw InvalidArgument("semidirect product: action table is not an automorphism");
    }
  }
  for (Elem a = 0; a < complement.order(); ++a) {
    for (Elem b : complement.generators()) {
      const auto& ab = action[complement.mul(a, b)];
      for (Elem x = 0; x < normal.order(); ++x) {
        if (ab[x] != action[a][action[b][x]]) {
          throw InvalidArgument("semidirect product: action is not a homomorphism");
        }
      }
    }
  }
  return make_pair_group(normal, complement, std::move(action),
                         "SD(" + normal.name() + "," + complement.name() + ")", cap);
}

SemidirectProduct direct_product_parts(const FiniteGroup& a, const FiniteGroup& b,
                                       std::size_t cap) {
  return make_pair_group(a, b, {}, a.name() + " x " + b.name(), cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  return direct_product_parts(a, b, cap).group;
}

std::vector<AutomorphismTable> power_action(std::size_t n, std::size_t m, long long r) {
  if (n == 0 || m == 0) throw InvalidArgument("power_action: orders must be positive");
  long long rr = r % static_cast<long long>(n);
  if (rr < 0) rr += static_cast<long long>(n);
  if (std::gcd(static_cast<std::size_t>(rr), n) != 1 && n > 1) {
    throw InvalidArgument("power_action: x -> x^" + std::to_string(r) + " is not an automorphism of C(" +
                          std::to_string(n) + ")");
  }
  std::vector<AutomorphismTable> action(m, AutomorphismTable(n));
  std::size_t factor = 1;  // r^h mod n
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t x = 0; x < n; ++x) action[h][x] = static_cast<Elem>((x * factor) % n);
    factor = (factor * static_cast<std::size_t>(rr)) % n;
  }
  if (n > 1 && factor != 1 % n) {
    throw InvalidArgument("power_action: r^m is not 1 mod n, so C(m) cannot act this way");
  }
  return action;
}

Matrix Matrix::from_rows(std::size_t p, const std::vector<std::vector<long long>>& rows) {
  if (!is_prime(p)) throw InvalidArgument("matrix modulus must be prime");
  Matrix m;
  m.p = p;
  m.k = rows.size();
  const auto pp = static_cast<long long>(p);
  for (const auto& row : rows) {
    if (row.size() != m.k) throw InvalidArgument("matrix must be square");
    for (long long v : row) m.entries.push_back(static_cast<std::size_t>(((v % pp) + pp) % pp));
  }
  return m;
}

Matrix Matrix::identity(std::size_t p, std::size_t k) {
  Matrix m;
  m.p = p;
  m.k = k;
  m.entries.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) m.entries[i * k + i] = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (p != other.p || k != other.k) throw InvalidArgument("matrix shape mismatch");
  Matrix out = identity(p, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += at(r, i) * other.at(i, c);
      out.entries[r * k + c] = sum % p;
    }
  }
  return out;
}

bool Matrix::is_invertible() const {
  // Gaussian elimination over F_p.
  std::vector<std::size_t> a = entries;
  auto inv_mod = [this](std::size_t x) {
    std::size_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot * k + col] == 0) ++pivot;
    if (pivot == k) return false;
    for (std::size_t c = 0; c < k; ++c) std::swap(a[pivot * k + c], a[col * k + c]);
    const std::size_t scale = inv_mod(a[col * k + col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const std::size_t f = a[r * k + col] * scale % p;
      for (std::size_t c = 0; c < k; ++c) {
        a[r * k + c] = (a[r * k + c] + p * p - f * a[col * k + c] % p) % p;
      }
    }
  }
  return true;
}

MatrixGroup matrix_group(std::size_t p, std::size_t k, const std::vector<Matrix>& gens,
                         std::size_t cap) {
  if (!is_prime(p)) throw InvalidArgument("matgrp needs p prime");
  for (const auto& g : gens) {
    if (g.p != p || g.k != k) throw InvalidArgument("matgrp: matrix is not " + std::to_string(k) +
                                                    "x" + std::to_string(k) + " over F_" +
                                                    std::to_string(p));
    if (!g.is_invertible()) throw InvalidArgument("matgrp: matrix is not invertible mod p");
  }
  std::vector<Matrix> elements{Matrix::identity(p, k)};
  std::map<Matrix, Elem> index{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Matrix next = elements[head] * g;
      if (index.emplace(next, static_cast<Elem>(elements.size())).second) {
        check_order_cap(elements.size() + 1, cap);
        elements.push_back(std::move(next));
      }
    }
  }
  const std::size_t order = elements.size();
  auto table = make_table(order, [&](std::size_t a, std::size_t b) {
    return index.at(elements[a] * elements[b]);
  });
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string l = "[";
    for (std::size_t r = 0; r < k; ++r) {
      if (r) l += ",";
      l += "[";
      for (std::size_t c = 0; c < k; ++c) {
        if (c) l += ",";
        l += std::to_string(elements[a].at(r, c));
      }
      l += "]";
    }
    labels[a] = l + "]";
  }

  std::size_t dim = 1;
  for (std::size_t i = 0; i < k; ++i) dim *= p;
  std::vector<AutomorphismTable> action(order, AutomorphismTable(dim));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t v = 0; v < dim; ++v) {
      std::vector<std::size_t> coords(k);
      std::size_t rest = v;
      for (std::size_t i = 0; i < k; ++i) {
        coords[i] = rest % p;
        rest /= p;
      }
      std::size_t image = 0, scale = 1;
      for (std::size_t r = 0; r < k; ++r) {
        std::size_t sum = 0;
        for (std::size_t c = 0; c < k; ++c) sum += elements[a].at(r, c) * coords[c];
        image += (sum % p) * scale;
        scale *= p;
      }
      action[a][v] = static_cast<Elem>(image);
    }
  }

  std::vector<Elem> gen_idx;
  for (const auto& g : gens) {
    Elem idx = index.at(g);
    if (idx != 0) gen_idx.push_back(idx);
  }
  std::string name = "matgrp(" + std::to_string(p) + "," + std::to_string(k) + ")";
  MatrixGroup out{p, k, std::move(elements),
                  FiniteGroup(std::make_shared<ExplicitBackend>(order, std::move(table),
                                                                std::move(labels)),
                              std::move(name), std::move(gen_idx)),
                  std::move(action)};
  return out;
}

}  // namespace hgs
