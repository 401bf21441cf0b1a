#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xmod/validation.hpp"

namespace xmod {

/// Index of an element inside its owning finite group, in [0, order).
using Element = std::uint32_t;

/// Row-major Cayley table: table[a][b] = a*b.
using CayleyTable = std::vector<std::vector<Element>>;

/// Appends every group-axiom failure of `table` to `report`, prefixing axiom
/// ids with `label` (e.g. "base.assoc"). Returns false when the table is not
/// even well shaped, in which case later checks are skipped.
bool check_group_table(const CayleyTable& table, const std::string& label, ValidationReport& report);

/// A finite group held as an explicit multiplication table. Always valid:
/// construction runs the full axiom check.
class FiniteGroup {
 public:
  /// Throws AxiomViolation when `table` is not a group.
  static FiniteGroup from_table(const CayleyTable& table, std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return product_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, long long n) const;
  bool is_abelian() const;

  /// Display name; defaults to the decimal index.
  std::string name(Element a) const;
  CayleyTable table() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.product_ == b.product_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> product_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

/// Z/n with (i+j) mod n. Throws PreconditionError for n = 0.
FiniteGroup build_cyclic_group(std::size_t n);

/// Symmetric group on n letters (n <= 5); elements ordered lexicographically
/// by permutation image, so 0 is the identity.
FiniteGroup build_symmetric_group(std::size_t n);

}  // namespace xmod
