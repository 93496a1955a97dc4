#ifndef RETRACTLAB_GRADING_HPP
#define RETRACTLAB_GRADING_HPP

#include <map>
#include <optional>
#include <vector>

#include "retractlab/poly.hpp"
#include "retractlab/subalgebra.hpp"

namespace retractlab {

/// Integer weights, one per variable; the induced degree of a monomial is
/// the dot product with its exponent vector. Weights may be negative.
using WeightVector = std::vector<long>;

long weighted_degree(const ExponentVector& e, const WeightVector& w);

/// Partition of f by induced degree; the components sum back to f.
std::map<long, Polynomial> homogeneous_components(const Polynomial& f, const WeightVector& w);

struct HomogeneityResult {
    bool homogeneous;
    std::optional<long> degree; // unset for the zero polynomial
    bool zero;                  // f = 0: homogeneous of every degree
};

HomogeneityResult is_homogeneous(const Polynomial& f, const WeightVector& w);

/// A presented generator is not homogeneous for the weight vector, so the
/// ambient grading does not restrict to the subalgebra.
class InhomogeneousGeneratorError : public DomainError {
public:
    InhomogeneousGeneratorError(std::size_t index, std::vector<long> degrees,
                                const std::string& what)
        : DomainError(what), index_(index), degrees_(std::move(degrees)) {}
    std::size_t generator_index() const { return index_; }
    const std::vector<long>& component_degrees() const { return degrees_; }

private:
    std::size_t index_;
    std::vector<long> degrees_;
};

struct GradingReport {
    bool effective; // some generator has nonzero induced degree
    std::vector<long> generator_degrees;
};

/// Checks that the induced grading is nontrivial on A = k[generators]:
/// every generator must be homogeneous (else InhomogeneousGeneratorError),
/// and the grading is effective iff some generator has nonzero degree.
GradingReport grading_effective(const SubalgebraPresentation& a, const WeightVector& w);

} // namespace retractlab

#endif
