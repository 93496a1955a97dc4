#ifndef RETRACTLAB_PRINTER_HPP
#define RETRACTLAB_PRINTER_HPP

#include <string>
#include <vector>

#include "retractlab/poly.hpp"

namespace retractlab {

/// Default variable names: x,y,z for up to three variables, x1..xn beyond.
/// `extension_vars` appends the reserved names U (and V) for rings that
/// carry one or two extra co-action variables.
std::vector<std::string> default_var_names(std::size_t nvars, std::size_t extension_vars = 0);

/// Canonical textual form: terms lex-descending, explicit '*', '^' for
/// exponents > 1, rationals as num/den. The output re-parses to an equal
/// polynomial under the expression grammar.
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);

/// Convenience: uses default_var_names sized to f's ring, treating any
/// variables beyond `base_vars` as extension variables U, V.
std::string to_string(const Polynomial& f);

std::string to_string(const ExponentVector& e, const std::vector<std::string>& names);

} // namespace retractlab

#endif
