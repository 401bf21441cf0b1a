#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmod/validation.hpp"
#include "xmod/word.hpp"

namespace xmod {

struct CellGenerator {
  std::string name;
  FreeWord boundary;  // image in the free base group

  friend bool operator==(const CellGenerator&, const CellGenerator&) = default;
};

/// A free crossed module over the free group on `generators`, on the cells
/// with their boundaries, modulo `relations`. Declaration order is
/// significant: it fixes the search order of the counters and the output of
/// every printer.
struct CrossedPresentation {
  std::vector<std::string> generators;
  std::vector<CellGenerator> cells;
  std::vector<CrossedWord> relations;

  const CellGenerator* find_cell(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  friend bool operator==(const CrossedPresentation&, const CrossedPresentation&) = default;
};

/// Product over the terms of (w * boundary(cell) * w^-1)^sign, reduced.
/// Throws PreconditionError for a cell that is not declared in `p`.
FreeWord boundary_of_crossed_word(const CrossedPresentation& p, const CrossedWord& cw);

/// Id hygiene (well-formed, distinct ids; every boundary letter and
/// conjugator letter a declared generator; every term cell declared) and
/// trivial boundary of every relation.
ValidationReport validate_presentation(const CrossedPresentation& p);

/// Disjoint union. Ids of `second` get the suffix `.k` for the smallest
/// k >= 2 that avoids every id of `first`.
CrossedPresentation free_product(const CrossedPresentation& first, const CrossedPresentation& second);

/// Adds a fresh generator S<k> and a fresh cell s<k> with boundary S<k>, the
/// free product with the presentation of Π2(D², S¹).
CrossedPresentation stabilize(const CrossedPresentation& p);

/// The presentation of Π2(D², S¹): one generator X, one cell e, boundary X.
CrossedPresentation free_disk_presentation();

/// Text form:
///
///     pres v1
///     gens X Y
///     cells e f
///     bnd e = X Y^-1
///     rel = (1 ; e ; +) (X ; f ; -)
///     one_handles 2          (optional)
///
/// `#` starts a comment line. `bnd` lines must follow `cells` and appear once
/// per cell, in any order; printing is canonical (declaration order).
struct PresentationFile {
  CrossedPresentation presentation;
  std::optional<long long> one_handles;
};

PresentationFile parse_presentation(std::string_view text);
std::string print_presentation(const CrossedPresentation& p, std::optional<long long> one_handles = std::nullopt);

}  // namespace xmod
