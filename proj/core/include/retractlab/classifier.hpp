#ifndef RETRACTLAB_CLASSIFIER_HPP
#define RETRACTLAB_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "retractlab/endo.hpp"

namespace retractlab {

enum class VerdictStatus { NotARetraction, PolynomialRing, Inconclusive };

/// One applied decision step: a machine-readable rule id plus the
/// mathematical fact it rests on.
struct Reason {
    std::string rule;
    std::string anchor;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    /// Set for PolynomialRing: the claimed dimension (0..n).
    std::optional<unsigned> dim;
    /// Optional generator witnesses; when present they are certified:
    /// no relation up to the bound, and every image of the tuple has a
    /// membership certificate over them.
    std::vector<Polynomial> witnesses;
    /// True when the dimension rests on an unrefuted bounded independence
    /// search rather than an exact argument.
    bool bound_relative = false;
    std::vector<Reason> reasons;
    std::map<std::string, unsigned> bounds;
    /// For NotARetraction: failing indices with residuals.
    std::vector<std::pair<std::size_t, Polynomial>> defects;
};

enum class ClassifierRule { ElementaryCases, MonomialImage, BinomialImage };

/// The three-way case split for a retraction of k[x,y,z]: independent
/// images (the tuple generates everything), a constant image (drop it and
/// classify the remaining pair), or an image equal to its own variable
/// (classify the rest over that coordinate subring). Returns nullopt when
/// no case applies; throws DomainError when the tuple is not a retraction.
std::optional<Verdict> elementary_cases_rule(const EndoMap& phi, unsigned degree_bound);

/// Rule for tuples with at least one monic monomial image (all images
/// nonconstant): all-monomial tuples classify exactly through their
/// minimal monomial generators; a monomial image alongside non-monomial
/// companions is forced to be a plain variable, delegating to the
/// elementary cases.
std::optional<Verdict> monomial_image_rule(const EndoMap& phi, unsigned degree_bound);

/// Rule for a binomial image x_i + a*monomial (constant terms all zero):
/// the fixed-point condition forces a companion image to vanish, and the
/// constant-image case finishes the classification.
std::optional<Verdict> binomial_image_rule(const EndoMap& phi, unsigned degree_bound);

/// Full pipeline: fixed-point test, then the rules in the order above
/// (n = 3), or the plane classification (n = 2). Never reports "not a
/// polynomial ring": inputs outside every rule come back Inconclusive.
Verdict classify(const EndoMap& phi, unsigned degree_bound);

/// Same pipeline with an explicit rule order (n = 3); used to check that
/// the verdict does not depend on rule order.
Verdict classify_with_rule_order(const EndoMap& phi, unsigned degree_bound,
                                 std::span<const ClassifierRule> order);

} // namespace retractlab

#endif
