#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "xmod/crossed_module.hpp"
#include "xmod/presentation.hpp"

namespace xmod {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms, always with an explicit denominator.
std::string format_rational(const ExactRational& r);

/// Values of a candidate morphism on the generators: phi on base generators,
/// psi on cells.
struct Assignment {
  std::map<std::string, Element, std::less<>> phi;
  std::map<std::string, Element, std::less<>> psi;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Image of `w` under the homomorphism of the free group induced by phi.
/// Throws PreconditionError on an unassigned generator.
Element evaluate_free_word(const FreeWord& w, const Assignment& a, const FiniteCrossedModule& cm);

/// Product over the terms of (phi(w) ▷ psi(cell))^sign in the fiber.
Element evaluate_crossed_word(const CrossedWord& cw, const Assignment& a, const FiniteCrossedModule& cm);

enum class CountMethod { automatic, backtracking, naive, linear };

std::string_view to_string(CountMethod m);
std::optional<CountMethod> parse_count_method(std::string_view name);

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000;

struct CountOptions {
  /// Elementary steps (candidate assignments visited) before giving up with
  /// WorkCapExceeded. The naive counter refuses up front when its whole
  /// assignment space exceeds this.
  std::uint64_t work_cap = kDefaultWorkCap;
  /// Worker threads for the partition by the first generator's value;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
};

/// Number of crossed-module morphisms from the presented crossed module into
/// `cm`: assignments with cm.boundary(psi(m)) = phi(bnd m) for every cell and
/// every relation evaluating to the identity. Backtracking search in
/// declaration order, pruning each relation as soon as its cells are set.
/// Throws PreconditionError when `p` fails validate_presentation.
BigInt count_homomorphisms(const CrossedPresentation& p, const FiniteCrossedModule& cm, const CountOptions& options = {});

/// Same contract by exhaustive enumeration with no pruning. Reference oracle.
/// Throws SearchSpaceTooLarge when |G|^|L| * |E|^|K| exceeds options.work_cap.
BigInt count_homomorphisms_naive(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                                 const CountOptions& options = {});

/// True when the boundary of `cm` is trivial and its fiber is elementary
/// abelian, so relations become linear systems over Z/p.
bool linear_fastpath_applies(const FiniteCrossedModule& cm);

/// For each phi with every cell boundary mapped to the identity, adds
/// p^(unknowns - rank) for the stacked relation system. Throws
/// PreconditionError when linear_fastpath_applies(cm) is false.
BigInt count_linear_fastpath(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                             const CountOptions& options = {});

/// Calls `visit` once per morphism, in search order. For small instances.
void for_each_homomorphism(const CrossedPresentation& p, const FiniteCrossedModule& cm,
                           const std::function<void(const Assignment&)>& visit, const CountOptions& options = {});

/// count / |E|^one_handles. Throws PreconditionError on negative one_handles.
ExactRational invariant_from_count(const BigInt& count, std::size_t fiber_order, long long one_handles);

struct CountReport {
  BigInt count;
  long long one_handles = 0;
  ExactRational invariant;
  CountMethod method = CountMethod::backtracking;
  std::chrono::milliseconds elapsed{0};

  /// `count`, `one_handles`, `invariant`, `method`, `elapsed_ms` lines.
  std::string to_string(bool with_timing = true) const;
};

/// Counts with `method` (automatic picks the linear fast path when it
/// applies, backtracking otherwise) and rescales to the invariant.
CountReport compute_invariant(const CrossedPresentation& p, const FiniteCrossedModule& cm, long long one_handles,
                              CountMethod method = CountMethod::automatic, const CountOptions& options = {});

inline ExactRational invariant(const CrossedPresentation& p, const FiniteCrossedModule& cm, long long one_handles,
                               const CountOptions& options = {}) {
  return compute_invariant(p, cm, one_handles, CountMethod::automatic, options).invariant;
}

}  // namespace xmod
