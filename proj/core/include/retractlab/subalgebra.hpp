#ifndef RETRACTLAB_SUBALGEBRA_HPP
#define RETRACTLAB_SUBALGEBRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "retractlab/poly.hpp"

namespace retractlab {

/// A finitely generated subalgebra A = k[g1,...,gr] of B, presented by its
/// generators. Generators must be nonzero; duplicates are dropped (first
/// occurrence kept). The list may be empty (A = k).
class SubalgebraPresentation {
public:
    SubalgebraPresentation(Ring ring, std::vector<Polynomial> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

private:
    Ring ring_;
    std::vector<Polynomial> generators_;
};

/// Witness that f lies in A up to the searched bound: a polynomial P in r
/// fresh variables with P(g1,...,gr) = f and deg P <= bound.
struct MembershipCertificate {
    Polynomial representation; // lives in (field, r) with variables t1..tr
    unsigned bound;
};

/// Nonzero relation P with P(g1,...,gr) = 0, found at degree <= bound.
struct DependenceWitness {
    Polynomial relation;
    unsigned bound;
};

/// Searches a representation of f over A's generators by exact linear
/// solve on the coefficients of P, escalating the degree of P from 1 to D.
/// A nullopt result means no representation of degree <= D exists; it is
/// NOT a proof of non-membership.
std::optional<MembershipCertificate> member_bounded(const Polynomial& f,
                                                    const SubalgebraPresentation& a,
                                                    unsigned degree_bound);

/// Searches a nonzero algebraic relation among the generators (kernel of
/// the evaluation map), escalating the relation degree from 1 to D. A
/// nullopt certifies independence up to degree D only.
std::optional<DependenceWitness> dependence_bounded(const SubalgebraPresentation& a,
                                                    unsigned degree_bound);

/// Full echelonized kernel of the evaluation map at exactly degree <= D;
/// each returned polynomial is a relation among the generators.
std::vector<Polynomial> relation_kernel_basis(const SubalgebraPresentation& a,
                                              unsigned degree_bound);

/// Exact membership of a monomial exponent vector in the additive monoid
/// generated by `generators` (all nonzero). Exact, not bound-relative:
/// every generator has positive total degree, so the search terminates.
bool monomial_semigroup_member(const ExponentVector& target,
                               const std::vector<ExponentVector>& generators);

/// Inclusion-minimal subset of a monic-monomial generator list presenting
/// the same algebra. The constant monomial 1 is always discarded. Throws
/// DomainError on a non-monomial or non-monic generator.
SubalgebraPresentation minimize_monomial_generators(const SubalgebraPresentation& a);

struct FactorialClosureReport {
    bool closed;
    /// First offending pair (b1, b2) with b1*b2 in A but b1 or b2 outside.
    std::optional<std::pair<Polynomial, Polynomial>> counterexample;
    unsigned bound;
};

/// Checks the factorial-closedness implication over all pairs of monic
/// monomials of total degree <= D. For a monomial subalgebra this decides
/// the property restricted to monomial factors; the report records the
/// bound. Throws DomainError on non-monomial generators.
FactorialClosureReport factorially_closed_monomial(const SubalgebraPresentation& a,
                                                   unsigned degree_bound);

} // namespace retractlab

#endif
