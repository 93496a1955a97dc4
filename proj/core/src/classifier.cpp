#include "retractlab/classifier.hpp"

#include <algorithm>

#include "retractlab/monomial.hpp"
#include "retractlab/printer.hpp"

namespace retractlab {

namespace {

constexpr const char* kAnchorFixedPoint =
    "an image tuple defines a retraction exactly when every f_i satisfies "
    "f_i(f_1,...,f_n) = f_i";
constexpr const char* kAnchorUnivariate =
    "a retract of transcendence degree at most one is generated by a single element";
constexpr const char* kAnchorPlane =
    "every retract of a polynomial ring in two variables is a polynomial ring";
constexpr const char* kAnchorPairFree =
    "two generators without a relation present a polynomial ring in two variables";
constexpr const char* kAnchorBasePoly =
    "a retract over the fixed coordinate subring is a polynomial ring over it";

void require_retraction(const EndoMap& phi) {
    if (!is_retraction(phi).is_retraction) {
        throw DomainError("classification rules require a retraction");
    }
}

/// Dependence of an image tuple, short-circuiting the degenerate shapes
/// (zero, constant, duplicate images) before the linear search.
std::optional<Polynomial> tuple_relation(const std::vector<Polynomial>& images,
                                         unsigned degree_bound) {
    const FieldSpec& field = images.front().ring().field;
    Ring fresh{field, images.size()};
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].is_zero()) {
            return Polynomial::variable(fresh, i);
        }
        if (images[i].is_constant()) {
            return Polynomial::variable(fresh, i) -
                   Polynomial::constant(fresh, images[i].constant_term());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (images[i] == images[j]) {
                return Polynomial::variable(fresh, j) - Polynomial::variable(fresh, i);
            }
        }
    }
    SubalgebraPresentation a(images.front().ring(), images);
    if (auto witness = dependence_bounded(a, degree_bound)) {
        return witness->relation; // indices align: images are distinct here
    }
    return std::nullopt;
}

/// Certifies witnesses before attaching them: no relation among them up
/// to the bound, and every image representable over them. On failure the
/// verdict keeps its status and dimension but carries no witnesses.
void attach_witnesses(Verdict& verdict, const std::vector<Polynomial>& witnesses,
                      const EndoMap& phi, unsigned degree_bound) {
    std::vector<Polynomial> gens;
    for (const Polynomial& w : witnesses) {
        if (!w.is_zero()) gens.push_back(w);
    }
    SubalgebraPresentation a(phi.ring(), gens);
    if (!gens.empty() && dependence_bounded(a, degree_bound)) return;
    for (const Polynomial& f : phi.images()) {
        if (f.is_zero()) continue;
        if (!member_bounded(f, a, degree_bound)) return;
    }
    verdict.witnesses = witnesses;
}

std::vector<Polynomial> sorted_candidates(std::vector<Polynomial> polys) {
    std::sort(polys.begin(), polys.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  if (a.total_degree() != b.total_degree()) {
                      return a.total_degree() < b.total_degree();
                  }
                  return a < b;
              });
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
    return polys;
}

/// Searches one generator g with every image certified inside k[g].
std::optional<Polynomial> univariate_witness(const EndoMap& phi,
                                             const std::vector<Polynomial>& candidates,
                                             unsigned degree_bound) {
    for (const Polynomial& g : sorted_candidates(candidates)) {
        if (g.is_zero() || g.is_constant()) continue;
        SubalgebraPresentation a(phi.ring(), {g});
        bool all = true;
        for (const Polynomial& f : phi.images()) {
            if (!f.is_zero() && !member_bounded(f, a, degree_bound)) {
                all = false;
                break;
            }
        }
        if (all) return g;
    }
    return std::nullopt;
}

bool coordinates_certified(const EndoMap& phi, unsigned degree_bound) {
    SubalgebraPresentation a = phi.image_algebra();
    for (std::size_t i = 0; i < phi.ring().nvars; ++i) {
        if (!member_bounded(Polynomial::variable(phi.ring(), i), a, degree_bound)) {
            return false;
        }
    }
    return true;
}

std::vector<Polynomial> coordinate_witnesses(const Ring& ring) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring.nvars; ++i) out.push_back(Polynomial::variable(ring, i));
    return out;
}

/// Classification of the pair remaining after a constant image was
/// dropped (also the whole n = 2 pipeline body).
Verdict classify_pair(const EndoMap& phi, const std::vector<Polynomial>& pair,
                      unsigned degree_bound, Verdict verdict) {
    verdict.bounds["dependence"] = degree_bound;
    verdict.bounds["membership"] = degree_bound;

    std::size_t nonconstant = 0;
    for (const Polynomial& f : pair) {
        if (!f.is_constant()) ++nonconstant;
    }
    if (nonconstant == 0) {
        verdict.status = VerdictStatus::PolynomialRing;
        verdict.dim = 0;
        verdict.reasons.push_back({"all-images-constant", "the generated algebra is k"});
        return verdict;
    }

    std::optional<Polynomial> relation = tuple_relation(pair, degree_bound);
    if (!relation) {
        verdict.status = VerdictStatus::PolynomialRing;
        verdict.dim = 2;
        verdict.reasons.push_back({"pair-independent", kAnchorPairFree});
        if (phi.ring().nvars == 2 && coordinates_certified(phi, degree_bound)) {
            // A = B is certified, which upgrades the claim to exact.
            verdict.reasons.push_back(
                {"coordinates-certified", "every coordinate lies in the image algebra"});
            attach_witnesses(verdict, coordinate_witnesses(phi.ring()), phi, degree_bound);
        } else {
            // Bounded independence only: the dimension claim is not exact.
            verdict.bound_relative = true;
            attach_witnesses(verdict, pair, phi, degree_bound);
        }
        return verdict;
    }

    verdict.status = VerdictStatus::PolynomialRing;
    verdict.dim = 1;
    verdict.reasons.push_back({"univariate-retract", kAnchorUnivariate});
    std::vector<Polynomial> candidates;
    for (const Polynomial& f : pair) {
        if (!f.is_constant()) candidates.push_back(f);
    }
    if (auto g = univariate_witness(phi, candidates, degree_bound)) {
        attach_witnesses(verdict, {*g}, phi, degree_bound);
    }
    return verdict;
}

} // namespace

std::optional<Verdict> elementary_cases_rule(const EndoMap& phi, unsigned degree_bound) {
    require_retraction(phi);
    const Ring& ring = phi.ring();
    if (ring.nvars != 3) return std::nullopt;
    const std::vector<Polynomial>& images = phi.images();
    Verdict verdict;
    verdict.bounds["dependence"] = degree_bound;
    verdict.bounds["membership"] = degree_bound;

    // Independent images: only a coordinate certificate (A = B) makes the
    // bounded no-relation answer an exact dimension claim.
    bool any_constant = false;
    for (const Polynomial& f : images) any_constant = any_constant || f.is_constant();
    if (!any_constant && !tuple_relation(images, degree_bound)) {
        if (coordinates_certified(phi, degree_bound)) {
            verdict.status = VerdictStatus::PolynomialRing;
            verdict.dim = static_cast<unsigned>(ring.nvars);
            verdict.reasons.push_back(
                {"independent-images",
                 "no relation up to the bound and every coordinate is certified: the images "
                 "generate the whole ring"});
            attach_witnesses(verdict, coordinate_witnesses(ring), phi, degree_bound);
            return verdict;
        }
        // No relation found but A = B not certified: fall through.
    }

    // A constant image: the algebra is generated by the remaining pair.
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i].is_constant()) continue;
        verdict.reasons.push_back(
            {"constant-image",
             "image " + std::to_string(i + 1) +
                 " is constant, so the algebra is generated by the remaining images"});
        std::vector<Polynomial> pair;
        for (std::size_t j = 0; j < images.size(); ++j) {
            if (j != i) pair.push_back(images[j]);
        }
        return classify_pair(phi, pair, degree_bound, std::move(verdict));
    }

    // An image equal to its own variable: classify over R = k[x_i].
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(images[i] == Polynomial::variable(ring, i))) continue;
        std::vector<std::string> names = default_var_names(ring.nvars);
        verdict.reasons.push_back(
            {"identity-coordinate",
             "image " + std::to_string(i + 1) + " equals " + names[i] +
                 "; the tuple restricts to a retraction over k[" + names[i] + "]"});
        Polynomial pivot = images[i];
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < images.size(); ++j) {
            if (j != i) others.push_back(images[j]);
        }

        SubalgebraPresentation base(ring, {pivot});
        bool all_in_base = true;
        for (const Polynomial& f : others) {
            if (!f.is_zero() && !member_bounded(f, base, degree_bound)) {
                all_in_base = false;
                break;
            }
        }
        if (all_in_base) {
            verdict.status = VerdictStatus::PolynomialRing;
            verdict.dim = 1;
            verdict.reasons.push_back(
                {"images-inside-coordinate-ring",
                 "every companion image is certified inside k[" + names[i] + "]"});
            attach_witnesses(verdict, {pivot}, phi, degree_bound);
            return verdict;
        }

        std::vector<Polynomial> triple = {pivot};
        for (const Polynomial& f : others) {
            if (f.is_zero()) continue;
            triple.push_back(f);
        }
        if (tuple_relation(triple, degree_bound)) {
            verdict.status = VerdictStatus::PolynomialRing;
            verdict.dim = 2;
            // The relation proves rank <= 1 over the base; rank >= 1 rests
            // on failed bounded memberships, so the dimension stays
            // bound-relative.
            verdict.bound_relative = true;
            verdict.reasons.push_back({"base-extension-retract", kAnchorBasePoly});
            for (const Polynomial& g : sorted_candidates(others)) {
                if (g.is_zero() || g.is_constant()) continue;
                SubalgebraPresentation a(ring, {pivot, g});
                bool all = true;
                for (const Polynomial& f : others) {
                    if (!f.is_zero() && !member_bounded(f, a, degree_bound)) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    attach_witnesses(verdict, {pivot, g}, phi, degree_bound);
                    break;
                }
            }
            return verdict;
        }
        if (coordinates_certified(phi, degree_bound)) {
            verdict.status = VerdictStatus::PolynomialRing;
            verdict.dim = static_cast<unsigned>(ring.nvars);
            verdict.reasons.push_back(
                {"independent-over-base",
                 "no relation over the coordinate subring and every coordinate certified"});
            attach_witnesses(verdict, coordinate_witnesses(ring), phi, degree_bound);
            return verdict;
        }
        return std::nullopt; // nothing provable at this bound
    }
    return std::nullopt;
}

std::optional<Verdict> monomial_image_rule(const EndoMap& phi, unsigned degree_bound) {
    require_retraction(phi);
    const Ring& ring = phi.ring();
    if (ring.nvars != 3) return std::nullopt;
    const std::vector<Polynomial>& images = phi.images();

    std::vector<std::size_t> monomial_indices;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].is_constant()) return std::nullopt; // constants route elsewhere
        if (images[i].is_monic_monomial()) monomial_indices.push_back(i);
    }
    if (monomial_indices.empty()) return std::nullopt;

    Verdict verdict;
    verdict.bounds["dependence"] = degree_bound;
    verdict.bounds["membership"] = degree_bound;

    if (monomial_indices.size() == images.size()) {
        // All images are monomials: the minimal monomial generators decide
        // the algebra exactly (semigroup membership is exact and monomial
        // independence is a rank computation on exponent vectors).
        SubalgebraPresentation minimal = minimize_monomial_generators(phi.image_algebra());
        std::vector<std::vector<long>> exps;
        for (const Polynomial& g : minimal.generators()) {
            std::vector<long> row;
            ExponentVector e = g.lex_leading_term().first;
            for (std::size_t v = 0; v < ring.nvars; ++v) row.push_back(e[v]);
            exps.push_back(std::move(row));
        }
        if (!exps.empty() && matrix_rank_over_q(exps) != exps.size()) {
            return std::nullopt; // dependent minimal monomials: leave open
        }
        verdict.status = VerdictStatus::PolynomialRing;
        verdict.dim = static_cast<unsigned>(minimal.generators().size());
        verdict.reasons.push_back(
            {"monomial-images",
             "all images are monomials; the minimal monomial generators are independent and "
             "present the algebra exactly"});
        attach_witnesses(verdict, minimal.generators(), phi, degree_bound);
        return verdict;
    }

    // A monomial image next to non-monomial companions is forced to be a
    // plain variable, and the elementary cases take over. A violation here
    // would contradict the fixed-point precondition.
    bool has_identity_coordinate = false;
    for (std::size_t i : monomial_indices) {
        if (images[i] == Polynomial::variable(ring, i)) has_identity_coordinate = true;
    }
    if (monomial_indices.size() == 1) {
        std::size_t i = monomial_indices.front();
        if (!(images[i] == Polynomial::variable(ring, i))) {
            throw DomainError(
                "incompatible instance: a lone monomial image of a retraction must equal its "
                "own variable, got " + to_string(images[i]));
        }
    } else if (!has_identity_coordinate) {
        throw DomainError(
            "incompatible instance: two monomial images of a retraction with a non-monomial "
            "companion must include a coordinate fixed as itself");
    }
    verdict.reasons.push_back(
        {"monomial-image-reduction",
         "the monomial image reduces to a fixed coordinate; delegating to the elementary "
         "cases"});
    std::optional<Verdict> delegated = elementary_cases_rule(phi, degree_bound);
    if (!delegated) return std::nullopt;
    delegated->reasons.insert(delegated->reasons.begin(), verdict.reasons.begin(),
                              verdict.reasons.end());
    return delegated;
}

std::optional<Verdict> binomial_image_rule(const EndoMap& phi, unsigned degree_bound) {
    require_retraction(phi);
    const Ring& ring = phi.ring();
    if (ring.nvars != 3) return std::nullopt;
    const std::vector<Polynomial>& images = phi.images();

    // Normalization condition: zero constant terms throughout.
    for (const Polynomial& f : images) {
        if (f.constant_term() != 0) return std::nullopt;
    }

    for (std::size_t i = 0; i < images.size(); ++i) {
        const Polynomial& f = images[i];
        if (f.term_count() != 2) continue;
        // One term must be the bare variable x_i with coefficient 1.
        Polynomial xi = Polynomial::variable(ring, i);
        Polynomial rest = f - xi;
        if (!rest.is_monomial()) continue;
        ExponentVector mono = rest.lex_leading_term().first;

        bool uses_other = false;
        for (std::size_t j = 0; j < ring.nvars; ++j) {
            if (j != i && mono[j] > 0) uses_other = true;
        }
        if (!uses_other) {
            // A pure power of x_i alongside the fixed-point condition is
            // impossible; reaching this line means the precondition lied.
            throw DomainError("incompatible instance: binomial image " + to_string(f) +
                              " is a pure power correction yet the tuple is a retraction");
        }
        // The fixed-point condition forces a companion image occurring in
        // the correction monomial to vanish.
        std::optional<std::size_t> vanished;
        for (std::size_t j = 0; j < ring.nvars; ++j) {
            if (j != i && mono[j] > 0 && images[j].is_zero()) vanished = j;
        }
        if (!vanished) {
            throw DomainError(
                "incompatible instance: no companion image of the binomial vanished although "
                "the fixed-point condition forces one to");
        }
        Verdict prefix;
        prefix.reasons.push_back(
            {"binomial-image",
             "image " + std::to_string(i + 1) +
                 " is its variable plus a correction monomial; the fixed-point condition "
                 "forces image " + std::to_string(*vanished + 1) + " to vanish"});
        std::optional<Verdict> delegated = elementary_cases_rule(phi, degree_bound);
        if (!delegated) return std::nullopt;
        delegated->reasons.insert(delegated->reasons.begin(), prefix.reasons.begin(),
                                  prefix.reasons.end());
        return delegated;
    }
    return std::nullopt;
}

namespace {

Verdict classify_impl(const EndoMap& phi, unsigned degree_bound,
                      std::span<const ClassifierRule> order) {
    const Ring& ring = phi.ring();
    if (ring.nvars != 2 && ring.nvars != 3) {
        throw DomainError("classification supports two or three variables only");
    }

    RetractionReport rr = is_retraction(phi);
    if (!rr.is_retraction) {
        Verdict verdict;
        verdict.status = VerdictStatus::NotARetraction;
        verdict.defects = rr.defects;
        verdict.reasons.push_back({"fixed-point-check", kAnchorFixedPoint});
        return verdict;
    }

    if (ring.nvars == 2) {
        Verdict verdict;
        verdict.reasons.push_back({"plane-retract", kAnchorPlane});
        return classify_pair(phi, phi.images(), degree_bound, std::move(verdict));
    }

    for (ClassifierRule rule : order) {
        std::optional<Verdict> verdict;
        switch (rule) {
        case ClassifierRule::ElementaryCases:
            verdict = elementary_cases_rule(phi, degree_bound);
            break;
        case ClassifierRule::MonomialImage:
            verdict = monomial_image_rule(phi, degree_bound);
            break;
        case ClassifierRule::BinomialImage:
            verdict = binomial_image_rule(phi, degree_bound);
            if (!verdict) {
                // The binomial rule expects normalized generators; retry on
                // the normalized tuple when normalization is possible and
                // actually changes something.
                NormalizeOutcome normalized = normalize_generators(phi, degree_bound);
                if (normalized.normalized && !(*normalized.normalized == phi)) {
                    verdict = binomial_image_rule(*normalized.normalized, degree_bound);
                    if (verdict) {
                        verdict->reasons.insert(
                            verdict->reasons.begin(),
                            {"normalized-generators",
                             "generators rescaled to zero constant term and unit leading "
                             "coefficient before applying the binomial rule"});
                    }
                }
            }
            break;
        }
        if (verdict) return *verdict;
    }

    Verdict verdict;
    verdict.status = VerdictStatus::Inconclusive;
    verdict.bounds["dependence"] = degree_bound;
    verdict.bounds["membership"] = degree_bound;
    verdict.reasons.push_back(
        {"inconclusive",
         "the tuple is a retraction but no decision rule applies; the classification is "
         "deliberately left open"});
    return verdict;
}

} // namespace

Verdict classify(const EndoMap& phi, unsigned degree_bound) {
    static constexpr ClassifierRule kOrder[] = {ClassifierRule::ElementaryCases,
                                                ClassifierRule::MonomialImage,
                                                ClassifierRule::BinomialImage};
    return classify_impl(phi, degree_bound, kOrder);
}

Verdict classify_with_rule_order(const EndoMap& phi, unsigned degree_bound,
                                 std::span<const ClassifierRule> order) {
    return classify_impl(phi, degree_bound, order);
}

} // namespace retractlab
