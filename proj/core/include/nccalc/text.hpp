#pragma once

#include <string>

#include "nccalc/cremona.hpp"
#include "nccalc/vmatrix.hpp"

namespace nccalc {

/// Noncommutative expression grammar: atoms x, y, integer and p/q rational
/// literals; operators +, -, *, unary -, inv(...), parentheses. No /, no ^.
/// * is left-associative; precedence inv > unary minus > * > +,-.
/// The inversion gate applies at parse time; the result is normalized.
NCExpr parse_nc(ExprStore& store, const std::string& text);

/// Canonical text of an expression; parse_nc(print_nc(normalize(e))) returns
/// the same node.
std::string print_nc(NCExpr e);

/// Commutative grammar: adds the / operator and nonnegative integer ^
/// exponents; multiplication is commutative; numeric literals are integers.
CommRat parse_comm(const std::string& text);

/// Commutative grammar restricted to x: rejects any y dependence.
CommRat parse_comm_x(const std::string& text);

/// V-entry grammar: a commutative expression whose reduced value is a
/// polynomial of total degree at most 1 (a + b*x + c*y); everything else,
/// in particular products of variables and powers, is rejected.
VEntry parse_ventry(const std::string& text);
std::string print_ventry(const VEntry& e);

/// V-matrix JSON file format: {"entries": [["x","1"],["1","y"]]}.
VMatrix vmatrix_from_json(const std::string& text);
std::string vmatrix_to_json(const VMatrix& m);

/// Word grammar: whitespace-separated generators
///   tau | t[P,Q;R,S] | p[P,Q;R,S] | inner(expr)
/// with the x-only commutative grammar inside brackets and the
/// noncommutative grammar inside inner(...).
CremonaWord parse_word(ExprStore& store, const std::string& text);

}  // namespace nccalc
