#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xmod/group.hpp"

namespace xmod {

/// Rank over Z/p (p prime) of the matrix whose rows are given; entries must
/// already lie in [0, p). Plain row reduction, pivots taken left to right.
std::size_t rank_mod_p(std::vector<std::vector<unsigned>> rows, unsigned p);

/// Coordinates of an elementary abelian group E ≅ (Z/p)^d.
struct ElementaryAbelianBasis {
  unsigned p = 2;
  std::vector<Element> basis;                 // d generators
  std::vector<std::vector<unsigned>> coords;  // coords[e], length d

  std::size_t dimension() const { return basis.size(); }
};

/// Returns the basis when `group` is abelian with every non-identity element
/// of the same prime order; nullopt otherwise. The trivial group gets d = 0.
/// Basis elements are chosen greedily by ascending index.
std::optional<ElementaryAbelianBasis> elementary_abelian_basis(const FiniteGroup& group);

}  // namespace xmod
