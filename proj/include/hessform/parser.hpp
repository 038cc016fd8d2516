#pragma once

#include <string_view>

#include "hessform/form.hpp"

namespace hessform {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Recursive-descent parser for the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' nat)*
///   primary:= rational | variable | '(' expr ')'
/// with rationals "p" or "p/q" and variables x,y,z (arity <= 3) or x0..x9.
/// No implicit multiplication. Returns the expanded canonical form.
Form parse_form(std::string_view text, int arity);

/// Smallest arity covering the variables mentioned in the text:
/// any xk forces k+1; z forces 3, y forces 2, x forces 1. Minimum 1.
int infer_arity(std::string_view text);

}  // namespace hessform
