#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

/// Caps on constructed group orders.
inline constexpr std::size_t kDefaultOrderCap = 10'000;

FiniteGroup cyclic(std::size_t n);

/// Dihedral group of order 2n (symmetries of an n-gon); D(2) is the Klein group.
FiniteGroup dihedral(std::size_t n);

/// Symmetric group on m points, elements in lexicographic order of images.
FiniteGroup symmetric(std::size_t m);

/// Alternating group on m points.
FiniteGroup alternating(std::size_t m);

/// (Z/pZ)^k. Element index is the base-p number with coordinate 0 as the
/// least significant digit. Throws InvalidArgument unless p is prime.
FiniteGroup elementary_abelian(std::size_t p, std::size_t k);

/// Generalised quaternion group of order 2^k, k >= 3.
FiniteGroup quaternion(std::size_t order);

/// Group generated by permutations of `degree` points.
FiniteGroup permutation_group(std::span<const Perm> gens, std::size_t degree,
                              std::size_t cap = kDefaultOrderCap);

bool is_prime(std::size_t p);

/// Automorphisms of N as image tables, one per element of the acting group.
using AutomorphismTable = std::vector<Elem>;

/// G = N ⋊ H with (n1, h1)(n2, h2) = (n1 · φ(h1)(n2), h1 h2).
///
/// Element (n, h) has index n * |H| + h, so N is embedded as the multiples of
/// |H| and H as 0..|H|-1.
struct SemidirectProduct {
  FiniteGroup group;
  FiniteGroup normal;
  FiniteGroup complement;
  std::vector<AutomorphismTable> action;  // indexed by complement element

  Elem pair(Elem n, Elem h) const { return static_cast<Elem>(n * complement.order() + h); }
  std::pair<Elem, Elem> split(Elem x) const {
    return {static_cast<Elem>(x / complement.order()), static_cast<Elem>(x % complement.order())};
  }
  SubgroupRef normal_subgroup() const;
  SubgroupRef complement_subgroup() const;
};

/// Throws InvalidArgument unless `action` is a homomorphism H -> Aut(N).
SemidirectProduct semidirect_product(const FiniteGroup& normal, const FiniteGroup& complement,
                                     std::vector<AutomorphismTable> action,
                                     std::size_t cap = kDefaultOrderCap);

SemidirectProduct direct_product_parts(const FiniteGroup& a, const FiniteGroup& b,
                                       std::size_t cap = kDefaultOrderCap);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t cap = kDefaultOrderCap);

/// Action of C(m) on C(n) where the generator acts as x -> x^r.
std::vector<AutomorphismTable> power_action(std::size_t n, std::size_t m, long long r);

/// Square matrix over F_p with entries reduced into 0..p-1.
struct Matrix {
  std::size_t p = 2;
  std::size_t k = 0;
  std::vector<std::size_t> entries;  // row-major

  /// Entries may be negative; they are reduced mod p.
  static Matrix from_rows(std::size_t p, const std::vector<std::vector<long long>>& rows);
  static Matrix identity(std::size_t p, std::size_t k);

  std::size_t at(std::size_t r, std::size_t c) const { return entries[r * k + c]; }
  Matrix operator*(const Matrix& other) const;
  bool is_invertible() const;

  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

/// A subgroup of GL_k(F_p) together with its action on E(p,k).
struct MatrixGroup {
  std::size_t p = 2;
  std::size_t k = 0;
  std::vector<Matrix> matrices;         // element i of `group`
  FiniteGroup group;
  std::vector<AutomorphismTable> action;  // matrix acting on column vectors of E(p,k)
};

/// Closure of the given matrices; throws InvalidArgument on a singular matrix.
MatrixGroup matrix_group(std::size_t p, std::size_t k, const std::vector<Matrix>& gens,
                         std::size_t cap = kDefaultOrderCap);

}  // namespace hgs
