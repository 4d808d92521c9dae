#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgs/group.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultIsoCap = 2000;

/// Isomorphism invariants compared before any search.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_histogram;  // (element order, count)

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// "order=24;abelian=0;center=1;orders=1:1,2:9,3:8,4:6"
std::string fingerprint_label(const Fingerprint& f);

/// An isomorphism a -> b as an image table, if one exists. Throws CapExceeded
/// when the common order is above `cap`.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                  std::size_t cap = kDefaultIsoCap);

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = kDefaultIsoCap);

/// A named group in the catalog used by iso_type.
struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

/// Every group of order <= 16 (42 groups), one representative each.
const std::vector<CatalogEntry>& small_group_catalog();

/// Canonical name of g: catalog match for |g| <= 16, then the parametric
/// families C, D, Q, E, S, A, Hol(·); otherwise a fingerprint label.
std::string iso_type(const FiniteGroup& g);

}  // namespace hgs
