#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xmod/group.hpp"
#include "xmod/validation.hpp"

namespace xmod {

/// Raw tables of a candidate crossed module (G, E, boundary, action).
/// Nothing here is checked; see validate_crossed_module.
struct CrossedModuleTables {
  CayleyTable base;               // G
  CayleyTable fiber;              // E
  std::vector<Element> boundary;  // E -> G
  CayleyTable action;             // action[g][e] = g acting on e

  friend bool operator==(const CrossedModuleTables&, const CrossedModuleTables&) = default;
};

/// Exhaustive check of both group tables, the homomorphism property of the
/// boundary, the action laws, CM1 and CM2. Every failing tuple is reported.
///
/// Axiom ids: base.* / fiber.* (group axioms), shape, boundary-hom,
/// action-unit, action-compose, action-hom, action-bijective, CM1, CM2.
ValidationReport validate_crossed_module(const CrossedModuleTables& tables);

/// A validated finite crossed module. Immutable after construction.
class FiniteCrossedModule {
 public:
  /// Throws AxiomViolation (carrying the full report) if validation fails.
  static FiniteCrossedModule create(CrossedModuleTables tables, std::string name = {});

  const FiniteGroup& base() const { return base_; }
  const FiniteGroup& fiber() const { return fiber_; }
  Element boundary(Element e) const { return tables_.boundary[e]; }
  Element act(Element g, Element e) const { return action_[g * fiber_.order() + e]; }

  const CrossedModuleTables& tables() const { return tables_; }
  const std::string& name() const { return name_; }

  /// True when the boundary sends every element of E to the identity of G.
  bool boundary_is_trivial() const;
  std::size_t kernel_order() const;

 private:
  FiniteCrossedModule(FiniteGroup base, FiniteGroup fiber, CrossedModuleTables tables, std::string name);

  FiniteGroup base_;
  FiniteGroup fiber_;
  CrossedModuleTables tables_;
  std::vector<Element> action_;
  std::string name_;
};

inline ValidationReport validate_crossed_module(const FiniteCrossedModule& cm) {
  return validate_crossed_module(cm.tables());
}

/// (G, G, id, conjugation).
FiniteCrossedModule build_conjugation_crossed_module(const FiniteGroup& g, std::string name = {});

/// (G, F_p[G], trivial boundary, left translation of the basis). Elements of
/// E are coefficient vectors encoded in base p: index = sum_Y c_Y * p^Y.
/// Throws PreconditionError if p is not prime or p^|G| exceeds
/// kMaxGroupAlgebraOrder.
FiniteCrossedModule build_group_algebra_crossed_module(const FiniteGroup& g, unsigned p, std::string name = {});

inline constexpr std::size_t kMaxGroupAlgebraOrder = 4096;

/// fibers[g] = { e : boundary(e) = g }, each list ascending. The lists
/// partition E.
std::vector<std::vector<Element>> boundary_fibers(const FiniteCrossedModule& cm);

/// The shipped test battery: conjugation module on S3, (Z2, F2[Z2]),
/// (Z3, F2[Z3]); names s3_conj, z2_f2, z3_f2.
std::vector<FiniteCrossedModule> standard_battery();

}  // namespace xmod
