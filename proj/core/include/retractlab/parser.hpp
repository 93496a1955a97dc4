#ifndef RETRACTLAB_PARSER_HPP
#define RETRACTLAB_PARSER_HPP

#include <string>
#include <vector>

#include "retractlab/poly.hpp"

namespace retractlab {

/// Parses a polynomial expression over the declared variables.
///
/// Grammar: integer and rational literals (3, 3/4), declared identifiers,
/// '+', '-', '*', '^' with the usual precedence, parentheses. '^' takes a
/// nonnegative integer exponent. Multiplication is always explicit ('*');
/// '/' is only valid between integer literals. Errors carry the offending
/// position.
Polynomial parse_polynomial(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& vars);

/// Result of parsing with its context, round-trippable through to_string.
struct ParsedExpr {
    std::string source;
    Polynomial poly;
    std::vector<std::string> vars;
};

ParsedExpr parse_expression(const std::string& text, const FieldSpec& field,
                            const std::vector<std::string>& vars);

/// Splits a ';'-separated image list and parses each entry.
std::vector<Polynomial> parse_image_list(const std::string& text, const FieldSpec& field,
                                         const std::vector<std::string>& vars);

} // namespace retractlab

#endif
