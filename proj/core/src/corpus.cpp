#include "retractlab/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "retractlab/errors.hpp"
#include "retractlab/printer.hpp"

namespace retractlab {

unsigned long ExponentExpr::value(unsigned m, unsigned l) const {
    unsigned long v = constant;
    for (unsigned i = 0; i < m_power; ++i) v *= m;
    for (unsigned i = 0; i < l_power; ++i) v *= l;
    return v;
}

std::string MonomialTemplate::to_string(std::size_t nvars) const {
    if (zero) return "0";
    std::vector<std::string> names = default_var_names(nvars);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const ExponentExpr& e = exps[i];
        if (e.constant == 0 && !e.uses_params()) continue;
        if (!first) os << "*";
        first = false;
        os << names[i];
        std::string expstr;
        if (e.constant != 1 || !e.uses_params()) expstr += std::to_string(e.constant);
        for (unsigned k = 0; k < e.l_power; ++k) expstr += "l";
        for (unsigned k = 0; k < e.m_power; ++k) expstr += "m";
        if (expstr != "1") os << "^" << expstr;
    }
    if (first) os << "1";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ExponentExpr parse_exponent_expr(const std::string& text, const std::string& context) {
    ExponentExpr e;
    e.constant = 1;
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<unsigned long>(text[i] - '0');
                ++i;
            }
            e.constant *= static_cast<unsigned>(v);
            any = true;
        } else if (c == 'm') {
            ++e.m_power;
            ++i;
            any = true;
        } else if (c == 'l') {
            ++e.l_power;
            ++i;
            any = true;
        } else {
            throw CorpusError("bad exponent '" + text + "' in " + context);
        }
    }
    if (!any) throw CorpusError("empty exponent in " + context);
    return e;
}

} // namespace

MonomialTemplate parse_monomial_template(const std::string& text, std::size_t nvars) {
    MonomialTemplate t;
    t.exps.assign(nvars, ExponentExpr{});
    std::string body = trim(text);
    if (body == "0") {
        t.zero = true;
        return t;
    }
    if (body == "1") return t;

    std::vector<std::string> names = default_var_names(nvars);
    std::vector<bool> seen(nvars, false);
    for (const std::string& raw : split(body, '*')) {
        std::string factor = trim(raw);
        if (factor.empty()) throw CorpusError("empty factor in template '" + body + "'");
        std::string varname;
        std::string exptext;
        std::size_t caret = factor.find('^');
        if (caret == std::string::npos) {
            varname = trim(factor);
        } else {
            varname = trim(factor.substr(0, caret));
            exptext = trim(factor.substr(caret + 1));
        }
        std::size_t var = nvars;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (names[i] == varname) var = i;
        }
        if (var == nvars) {
            throw CorpusError("unknown variable '" + varname + "' in template '" + body + "'");
        }
        if (seen[var]) {
            throw CorpusError("variable '" + varname + "' repeated in template '" + body + "'");
        }
        seen[var] = true;
        t.exps[var] = exptext.empty() ? ExponentExpr{1, 0, 0}
                                      : parse_exponent_expr(exptext, "template '" + body + "'");
    }
    return t;
}

std::vector<FamilyPattern> load_family_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file " + path);
    std::vector<FamilyPattern> families;
    std::set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        std::string where = path + ":" + std::to_string(lineno);
        std::vector<std::string> fields = split(body, '|');
        if (fields.size() != 4) {
            throw CorpusError("record at " + where + " needs 4 '|'-separated fields");
        }
        FamilyPattern family;
        family.id = trim(fields[0]);
        if (family.id.empty()) throw CorpusError("empty family id at " + where);
        if (!ids.insert(family.id).second) {
            throw CorpusError("duplicate family id '" + family.id + "' at " + where);
        }
        try {
            family.nvars = std::stoul(trim(fields[1]));
        } catch (const std::exception&) {
            throw CorpusError("bad variable count in record '" + family.id + "' at " + where);
        }
        if (family.nvars < 1 || family.nvars > 3) {
            throw CorpusError("record '" + family.id + "' at " + where +
                              ": variable count must be 1..3");
        }
        try {
            for (const std::string& image : split(fields[2], ';')) {
                family.images.push_back(parse_monomial_template(image, family.nvars));
            }
            for (const std::string& gen : split(fields[3], ';')) {
                family.generators.push_back(parse_monomial_template(gen, family.nvars));
            }
        } catch (const CorpusError& err) {
            throw CorpusError(std::string(err.what()) + " in record '" + family.id + "' at " +
                              where);
        }
        if (family.images.size() != family.nvars) {
            throw CorpusError("record '" + family.id + "' at " + where + " has " +
                              std::to_string(family.images.size()) + " images for n = " +
                              std::to_string(family.nvars));
        }
        for (const MonomialTemplate& g : family.generators) {
            if (g.zero) {
                throw CorpusError("record '" + family.id + "' at " + where +
                                  " lists a zero generator");
            }
        }
        families.push_back(std::move(family));
    }
    return families;
}

std::string family_corpus_to_json(const std::vector<FamilyPattern>& families) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < families.size(); ++i) {
        const FamilyPattern& f = families[i];
        os << "  {\"id\": \"" << f.id << "\", \"n\": " << f.nvars << ", \"images\": [";
        for (std::size_t j = 0; j < f.images.size(); ++j) {
            if (j > 0) os << ", ";
            os << "\"" << f.images[j].to_string(f.nvars) << "\"";
        }
        os << "], \"generators\": [";
        for (std::size_t j = 0; j < f.generators.size(); ++j) {
            if (j > 0) os << ", ";
            os << "\"" << f.generators[j].to_string(f.nvars) << "\"";
        }
        os << "]}" << (i + 1 < families.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

std::optional<MonomialTuple> instantiate(const FamilyPattern& family, unsigned m, unsigned l,
                                         unsigned max_exp) {
    MonomialTuple tuple;
    for (const MonomialTemplate& image : family.images) {
        if (image.zero) {
            tuple.push_back(std::nullopt);
            continue;
        }
        ExponentVector e(family.nvars);
        for (std::size_t v = 0; v < family.nvars; ++v) {
            unsigned long val = image.exps[v].value(m, l);
            if (val > max_exp) return std::nullopt;
            e.set(v, static_cast<unsigned>(val));
        }
        tuple.push_back(std::move(e));
    }
    return tuple;
}

std::vector<ExponentVector> instantiate_generators(const FamilyPattern& family, unsigned m,
                                                   unsigned l) {
    std::vector<ExponentVector> out;
    for (const MonomialTemplate& g : family.generators) {
        ExponentVector e(family.nvars);
        for (std::size_t v = 0; v < family.nvars; ++v) {
            e.set(v, static_cast<unsigned>(g.exps[v].value(m, l)));
        }
        out.push_back(std::move(e));
    }
    return out;
}

MatchReport match_families(const std::vector<EnumeratedTuple>& tuples,
                           const std::vector<FamilyPattern>& families, unsigned max_exp) {
    MatchReport report;
    report.family_count = families.size();

    auto tuple_cmp = [](const MonomialTuple& a, const MonomialTuple& b) {
        return monomial_tuple_less(a, b);
    };
    std::set<MonomialTuple, decltype(tuple_cmp)> enumerated(tuple_cmp);
    for (const EnumeratedTuple& t : tuples) {
        if (t.algebra_is_k) {
            ++report.flagged_tuples;
        } else {
            enumerated.insert(t.images);
            ++report.total_tuples;
        }
    }

    std::map<MonomialTuple, std::size_t, decltype(tuple_cmp)> cover_count(tuple_cmp);
    std::set<MonomialTuple, decltype(tuple_cmp)> unexpected(tuple_cmp);
    for (const FamilyPattern& family : families) {
        std::set<MonomialTuple, decltype(tuple_cmp)> instances(tuple_cmp);
        for (unsigned m = 0; m <= max_exp; ++m) {
            for (unsigned l = 0; l <= max_exp; ++l) {
                if (auto t = instantiate(family, m, l, max_exp)) instances.insert(*t);
            }
        }
        FamilyMatchStats stats;
        stats.id = family.id;
        stats.instantiations = instances.size();
        for (const MonomialTuple& t : instances) {
            if (enumerated.count(t)) {
                ++stats.hits;
                ++cover_count[t];
            } else {
                unexpected.insert(t);
            }
        }
        if (stats.hits > 0) ++report.families_hit;
        report.families.push_back(std::move(stats));
    }

    for (const MonomialTuple& t : enumerated) {
        auto it = cover_count.find(t);
        if (it == cover_count.end()) {
            report.unmatched.push_back(t);
        } else if (it->second >= 2) {
            ++report.overlap_tuples;
        }
    }
    report.unexpected.assign(unexpected.begin(), unexpected.end());
    return report;
}

} // namespace retractlab
