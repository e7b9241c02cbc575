#pragma once

#include <string>

#include "gfa/expr.hpp"

namespace gfa {

/// Parse error with a 0-based character position into the source text.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& what, size_t position)
        : ConfigError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Grammar: identifiers z1..zk (alias z when k = 1) and zeta; literals
/// decimal, i, pi; operators + - * / ^ (integer exponent); functions
/// exp log atan sqrt.
ExprPtr parse_expression(const std::string& text, int dimension = 1);

} // namespace gfa
