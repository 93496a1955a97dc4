#ifndef RETRACTLAB_CORPUS_HPP
#define RETRACTLAB_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "retractlab/monomial.hpp"

namespace retractlab {

/// Exponent expression of a template: constant * m^mp * l^lp.
struct ExponentExpr {
    unsigned constant = 0;
    unsigned m_power = 0;
    unsigned l_power = 0;

    unsigned long value(unsigned m, unsigned l) const;
    bool uses_params() const { return m_power > 0 || l_power > 0; }
};

/// One image of a parametric family: the zero polynomial or a monic
/// monomial with parametric exponents.
struct MonomialTemplate {
    bool zero = false;
    std::vector<ExponentExpr> exps; // one per variable

    std::string to_string(std::size_t nvars) const;
};

/// One catalog row: a parametric tuple of images together with the
/// generators of the algebra it presents. Parameters m, l range over the
/// nonnegative integers.
struct FamilyPattern {
    std::string id;
    std::size_t nvars = 0;
    std::vector<MonomialTemplate> images;
    std::vector<MonomialTemplate> generators;
};

/// Parses one template ("x*y^m", "y^lm*z", "1", "0", ...).
MonomialTemplate parse_monomial_template(const std::string& text, std::size_t nvars);

/// Loads a line-delimited catalog: one family per line,
///   family_id | n | image templates ';'-separated | generators ';'-separated
/// with '#' comments. Throws CorpusError naming the offending record.
std::vector<FamilyPattern> load_family_corpus(const std::string& path);

/// The same catalog as a JSON array (see the shipped *.json siblings).
std::string family_corpus_to_json(const std::vector<FamilyPattern>& families);

/// Substitutes parameter values; nullopt when some exponent exceeds
/// max_exp (instantiation out of range).
std::optional<MonomialTuple> instantiate(const FamilyPattern& family, unsigned m, unsigned l,
                                         unsigned max_exp);

/// Instantiated generator monomials for the same parameter values.
std::vector<ExponentVector> instantiate_generators(const FamilyPattern& family, unsigned m,
                                                   unsigned l);

struct FamilyMatchStats {
    std::string id;
    std::size_t instantiations = 0; // distinct tuples within range
    std::size_t hits = 0;           // of those, present in the enumeration
};

struct MatchReport {
    std::size_t total_tuples = 0;   // enumerated, algebra != k
    std::size_t flagged_tuples = 0; // enumerated, algebra = k (not matched)
    std::size_t family_count = 0;
    std::size_t families_hit = 0;
    std::size_t overlap_tuples = 0; // matched by two or more families
    std::vector<MonomialTuple> unmatched;  // enumerated but in no family
    std::vector<MonomialTuple> unexpected; // instantiated but not enumerated
    std::vector<FamilyMatchStats> families;

    bool exact_match() const { return unmatched.empty() && unexpected.empty(); }
    bool all_families_hit() const { return families_hit == family_count; }
};

/// Compares an enumeration against a catalog: family instantiations use
/// parameter values 0..max_exp filtered by the exponent bound. Tuples
/// flagged algebra-is-k are excluded from matching and counted separately.
MatchReport match_families(const std::vector<EnumeratedTuple>& tuples,
                           const std::vector<FamilyPattern>& families, unsigned max_exp);

} // namespace retractlab

#endif
