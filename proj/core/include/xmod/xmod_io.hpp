#pragma once

#include <string>
#include <string_view>

#include "xmod/crossed_module.hpp"

namespace xmod {

/// Parses the line-oriented `xmod v1` format:
///
///     xmod v1
///     base <n>      followed by n rows of n product indices
///     fiber <m>     followed by m rows of m product indices
///     boundary      followed by one row of m indices into the base
///     action        followed by n rows of m indices into the fiber
///
/// Lines whose first non-blank character is `#` are comments. Only shape is
/// checked here; axioms are left to validate_crossed_module. Throws
/// ParseError naming the line and field of the first problem.
CrossedModuleTables parse_crossed_module(std::string_view text);

/// Canonical text form; parse_crossed_module(write_crossed_module(t)) == t.
std::string write_crossed_module(const CrossedModuleTables& tables);

}  // namespace xmod
