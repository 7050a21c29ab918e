#pragma once

#include "homalg/identity/ast.hpp"

#include <string>

namespace homalg {

// Grammar:
//   expr := ['-'] term (('+'|'-') term)*
//   term := [scalar '*'] atom
//   atom := var | 'A' k? '(' expr ')' | 'B' k? '(' expr ')' | 'p(' label ',' expr ',' expr ')'
//         | 'act(' label ',' expr ',' expr ')' | 'op(' name ',' expr ')' | 'form(' name ',' expr ',' expr ')'
//         | '(' expr ')'
// A scalar is an integer, a fraction of integers, or a parenthesized scalar expression.
// Throws SyntaxError, SortError, NotMultilinear.
IdentityExpr parse_identity(const std::string& source, const Signature& sig);

std::string render_identity(const IdentityExpr& e);
std::string render_node(const Node& n);

// Identity files: `id: expr` lines, `#` comments, and directives
//   %var x y z : algebra        %op R : algebra -> algebra       %form w
//   %product bracket = dot - dot^T     %product bracket ?= dot - dot^T
//   %action rho = ell - r
// Without %var lines the standard signature is used (x y z t s : algebra, u v w : module).
// Text after `#` on an identity line is kept as the identity's anchor.
IdentitySet parse_identity_file(const std::string& text, const std::string& name = "");

std::string render_identity_file(const IdentitySet& set);

} // namespace homalg
