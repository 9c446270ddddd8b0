#pragma once

#include <string>

#include "jacobson/algebra.hpp"
#include "jacobson/poly.hpp"

namespace jacobson {

enum class Presentation { Lpa, Jacobson };

/// Parses the shared expression grammar: generators v w c c' d d' (lpa) or
/// X Y (jacobson), scalar literals a or a/b, operators + - * ^ and
/// parentheses. Jacobson inputs are translated through the isomorphism
/// X -> c* + d*, Y -> c + d and normalized. Errors carry the position.
Element parse_element(const std::string& text, const FieldSpec& field,
                      Presentation presentation = Presentation::Lpa);

/// Expression in the Jacobson generators that re-parses to e. Uses the
/// closed forms A(i,j) = Y^(i+1) X^(j+1), B(i) = Y^(i+1) - Y^(i+2) X,
/// C(j) = X^(j+1) - Y X^(j+2), w = 1 - YX.
std::string to_jacobson(const Element& e);

/// Polynomial input: either a coefficient list "[c0, c1, ...]" (low to
/// high) or an expression in the single variable x over the same grammar.
Poly parse_poly(const std::string& text, const FieldSpec& field);

}  // namespace jacobson
