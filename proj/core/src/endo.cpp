#include "retractlab/endo.hpp"

#include "retractlab/printer.hpp"

namespace retractlab {

EndoMap::EndoMap(Ring ring, std::vector<Polynomial> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
    if (images_.size() != ring_.nvars) {
        throw DomainError("endomorphism needs " + std::to_string(ring_.nvars) +
                          " images, got " + std::to_string(images_.size()));
    }
    for (const Polynomial& f : images_) {
        if (f.ring() != ring_) {
            throw RingMismatchError(ring_.describe(), f.ring().describe());
        }
    }
}

EndoMap EndoMap::identity(const Ring& ring) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring.nvars; ++i) {
        images.push_back(Polynomial::variable(ring, i));
    }
    return EndoMap(ring, std::move(images));
}

Polynomial EndoMap::apply(const Polynomial& g) const {
    if (g.ring() != ring_) {
        throw RingMismatchError(ring_.describe(), g.ring().describe());
    }
    return substitute(g, images_);
}

EndoMap EndoMap::compose(const EndoMap& inner) const {
    if (ring_ != inner.ring_) {
        throw RingMismatchError(ring_.describe(), inner.ring_.describe());
    }
    std::vector<Polynomial> images;
    images.reserve(images_.size());
    for (const Polynomial& g : inner.images_) images.push_back(apply(g));
    return EndoMap(ring_, std::move(images));
}

bool EndoMap::operator==(const EndoMap& other) const {
    return ring_ == other.ring_ && images_ == other.images_;
}

SubalgebraPresentation EndoMap::image_algebra() const {
    std::vector<Polynomial> gens;
    for (const Polynomial& f : images_) {
        if (!f.is_zero()) gens.push_back(f);
    }
    return SubalgebraPresentation(ring_, std::move(gens));
}

RetractionReport is_retraction(const EndoMap& phi) {
    RetractionReport report{true, {}};
    for (std::size_t i = 0; i < phi.images().size(); ++i) {
        Polynomial residual = phi.apply(phi.images()[i]) - phi.images()[i];
        if (!residual.is_zero()) {
            report.is_retraction = false;
            report.defects.emplace_back(i, std::move(residual));
        }
    }
    return report;
}

NormalizeOutcome normalize_generators(const EndoMap& phi, unsigned degree_bound) {
    if (!is_retraction(phi).is_retraction) {
        throw DomainError("normalize_generators requires a retraction");
    }
    const Ring& ring = phi.ring();
    std::vector<Polynomial> rescaled;
    for (const Polynomial& f : phi.images()) {
        Polynomial g = f - Polynomial::constant(ring, f.constant_term());
        if (!g.is_zero()) {
            g = g.scale(ring.field.inv(g.lex_leading_term().second));
        }
        rescaled.push_back(std::move(g));
    }
    EndoMap candidate(ring, std::move(rescaled));

    if (!is_retraction(candidate).is_retraction) {
        return NormalizeOutcome{std::nullopt,
                                "rescaled tuple no longer satisfies the fixed-point condition",
                                degree_bound};
    }
    // The rescaling must not change the generated subalgebra; check mutual
    // membership of the generators both ways, up to the bound.
    SubalgebraPresentation old_algebra = phi.image_algebra();
    SubalgebraPresentation new_algebra = candidate.image_algebra();
    for (const Polynomial& f : phi.images()) {
        if (!f.is_zero() && !member_bounded(f, new_algebra, degree_bound)) {
            return NormalizeOutcome{std::nullopt,
                                    "original generator " + to_string(f) +
                                        " not certified inside the rescaled algebra",
                                    degree_bound};
        }
    }
    for (const Polynomial& g : candidate.images()) {
        if (!g.is_zero() && !member_bounded(g, old_algebra, degree_bound)) {
            return NormalizeOutcome{std::nullopt,
                                    "rescaled generator " + to_string(g) +
                                        " not certified inside the original algebra",
                                    degree_bound};
        }
    }
    return NormalizeOutcome{std::move(candidate), "", degree_bound};
}

KernelCheckReport kernel_principal_check(const EndoMap& phi, const Polynomial& h,
                                         unsigned degree_bound) {
    if (h.is_zero()) throw DomainError("kernel check requires h != 0");
    if (!is_retraction(phi).is_retraction) {
        throw DomainError("kernel check requires a retraction");
    }
    KernelCheckReport report{true, true, std::nullopt, degree_bound};
    if (!phi.apply(h).is_zero()) {
        report.ok = false;
        report.h_maps_to_zero = false;
        return report;
    }
    for (const ExponentVector& e : monomials_up_to_degree(phi.ring().nvars, degree_bound)) {
        Polynomial b = Polynomial::monomial(phi.ring(), e);
        Polynomial residual = b - phi.apply(b);
        if (residual.is_zero()) continue;
        if (!exact_divide(residual, h)) {
            report.ok = false;
            report.first_failure = std::move(b);
            return report;
        }
    }
    return report;
}

} // namespace retractlab
