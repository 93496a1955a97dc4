#include "retractlab/printer.hpp"

#include <sstream>

namespace retractlab {

std::vector<std::string> default_var_names(std::size_t nvars, std::size_t extension_vars) {
    std::vector<std::string> names;
    names.reserve(nvars + extension_vars);
    if (nvars <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        for (std::size_t i = 0; i < nvars; ++i) names.push_back(xyz[i]);
    } else {
        for (std::size_t i = 0; i < nvars; ++i) {
            names.push_back("x" + std::to_string(i + 1));
        }
    }
    if (extension_vars >= 1) names.push_back("U");
    if (extension_vars >= 2) names.push_back("V");
    return names;
}

std::string to_string(const ExponentVector& e, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << names.at(i);
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Polynomial::Term& t : f.terms()) {
        mpq_class c = t.coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (t.exps.is_zero()) {
            os << c.get_str();
        } else if (c == 1) {
            os << to_string(t.exps, names);
        } else {
            os << c.get_str() << "*" << to_string(t.exps, names);
        }
    }
    return os.str();
}

std::string to_string(const Polynomial& f) {
    return to_string(f, default_var_names(f.ring().nvars));
}

} // namespace retractlab
