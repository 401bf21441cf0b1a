#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xmod/crossed_module.hpp"
#include "xmod/presentation.hpp"

namespace xmod::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// XMOD_TEST_SEED when set, kDefaultSeed otherwise.
std::uint64_t test_seed();

using Rng = std::mt19937_64;

struct PresentationBounds {
  std::size_t max_generators = 2;
  std::size_t max_cells = 2;
  std::size_t max_relations = 2;
};

/// Random presentation within `bounds`. Relations are products of blocks
/// whose boundary cancels in the free group (cells with trivial boundary,
/// cells sharing a boundary, Peiffer commutators, x (∂x ▷ x^-1)), conjugated
/// by a random word. Always passes validate_presentation.
CrossedPresentation random_presentation(Rng& rng, const PresentationBounds& bounds = {});

FreeWord random_word(Rng& rng, const std::vector<std::string>& alphabet, std::size_t max_length);

/// Valid crossed modules with #G <= 6 and #E <= 8, covering trivial and
/// non-trivial boundaries, abelian and non-abelian fibers, and fibers that
/// are not elementary abelian.
const std::vector<FiniteCrossedModule>& module_pool();

/// (G, N, inclusion, conjugation) for the normal subgroup N of `g` made of
/// the listed elements.
FiniteCrossedModule normal_subgroup_module(const FiniteGroup& g, const std::vector<Element>& subgroup,
                                           std::string name);

struct Corruption {
  CrossedModuleTables tables;
  std::string where;  // e.g. "action[1][2]: 3 -> 0"
};

/// Changes exactly one entry of one table to a different in-range value.
Corruption corrupt_one_entry(const CrossedModuleTables& tables, Rng& rng);

}  // namespace xmod::testing
