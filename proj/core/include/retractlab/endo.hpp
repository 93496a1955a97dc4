#ifndef RETRACTLAB_ENDO_HPP
#define RETRACTLAB_ENDO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "retractlab/poly.hpp"
#include "retractlab/subalgebra.hpp"

namespace retractlab {

/// A k-algebra endomorphism of B = k[x1..xn], determined by the images of
/// the variables. Application extends homomorphically by substitution.
class EndoMap {
public:
    EndoMap(Ring ring, std::vector<Polynomial> images);

    static EndoMap identity(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& g) const;

    /// (*this) after `inner`: the result maps x_i to apply(inner's image).
    EndoMap compose(const EndoMap& inner) const;

    bool operator==(const EndoMap& other) const;

    /// Subalgebra generated by the nonzero images.
    SubalgebraPresentation image_algebra() const;

private:
    Ring ring_;
    std::vector<Polynomial> images_;
};

/// Outcome of the fixed-point test f_i(f1,...,fn) = f_i for all i.
struct RetractionReport {
    bool is_retraction;
    /// Failing indices (0-based) with their nonzero residuals
    /// f_i(f1,...,fn) - f_i, in canonical lex form.
    std::vector<std::pair<std::size_t, Polynomial>> defects;
};

RetractionReport is_retraction(const EndoMap& phi);

struct NormalizeOutcome {
    /// Present iff normalization succeeded.
    std::optional<EndoMap> normalized;
    std::string failure_reason; // set when normalization is refused
    unsigned bound;             // membership bound used for the algebra check
};

/// Per-image affine rescaling f -> (f - f(0)) / leading coefficient, kept
/// only when the rescaled tuple still passes the fixed-point test and
/// generates the same subalgebra (mutual bounded membership both ways).
/// Throws DomainError when phi is not a retraction.
NormalizeOutcome normalize_generators(const EndoMap& phi, unsigned degree_bound);

struct KernelCheckReport {
    bool ok;
    bool h_maps_to_zero;
    /// First monomial b with b - phi(b) not divisible by h, if any.
    std::optional<Polynomial> first_failure;
    unsigned bound;
};

/// Bounded verification that Ker(phi) is the principal ideal (h): checks
/// phi(h) = 0 and that b - phi(b) is exactly divisible by h for every
/// monomial b of total degree <= D. A positive answer certifies the
/// decomposition up to degree D only. Throws DomainError when phi is not
/// a retraction or h = 0.
KernelCheckReport kernel_principal_check(const EndoMap& phi, const Polynomial& h,
                                         unsigned degree_bound);

} // namespace retractlab

#endif
