#ifndef SOFTCLUST_EXPRESSION_HPP
#define SOFTCLUST_EXPRESSION_HPP

#include <string>

#include "softclust/core.hpp"
#include "softclust/space_file.hpp"

namespace softclust {

/// Evaluates an operator expression over a bundle's named sets.
///
/// Grammar, loosest first (all binary operators left-associative):
///   expr   := diff ('u' diff)*
///   diff   := inter ('-' inter)*
///   inter  := unary ('n' unary)*
///   unary  := '~' unary | 'cl' '(' expr ')' | 'int' '(' expr ')'
///           | 'D' '(' expr ')' | 'c' '(' expr ')' | '(' expr ')' | name
///
/// `cl`, `int` and `D` need a valid topology; `c` needs a valid topology
/// and an ideal. Names resolve against the bundle plus the built-ins Phi
/// and X; the operator words are reserved.
SoftSet eval_expression(const SpaceBundle& bundle, const std::string& text);

}  // namespace softclust

#endif
