#ifndef RETRACTLAB_EXPMAP_HPP
#define RETRACTLAB_EXPMAP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "retractlab/poly.hpp"

namespace retractlab {

/// A candidate co-action sigma: B -> B[U] of the additive group scheme,
/// given by the images sigma(x_i) in k[x1..xn, U]. The variable U is the
/// last variable of the extended ring. Whether sigma really is an
/// exponential map is decided by verify_axioms.
class ExpMap {
public:
    ExpMap(Ring base, std::vector<Polynomial> images);

    const Ring& base_ring() const { return base_; }
    const Ring& extended_ring() const { return extended_; }
    const std::vector<Polynomial>& images() const { return images_; }

    /// sigma(b) for b in the base ring; the result lives in B[U].
    Polynomial apply(const Polynomial& b) const;

    /// The translation co-action fixing every coordinate except
    /// `moving_index`, which maps to itself + U. Always passes the axioms.
    static ExpMap coordinate_translation(const Ring& base, std::size_t moving_index);

    /// Trivial co-action: every coordinate fixed.
    static ExpMap trivial(const Ring& base);

private:
    Ring base_;
    Ring extended_;
    std::vector<Polynomial> images_;
};

struct AxiomReport {
    bool axiom_i_ok = true;
    bool axiom_ii_ok = true;
    /// Residuals g_i(x,0) - x_i (axiom i, in B[U]) and
    /// g_i(g(x,U),V) - g_i(x,U+V) (axiom ii, in B[U,V]), nonzero only.
    std::vector<std::pair<std::size_t, Polynomial>> defects_i;
    std::vector<std::pair<std::size_t, Polynomial>> defects_ii;

    bool ok() const { return axiom_i_ok && axiom_ii_ok; }
};

/// Checks the two co-action axioms by exact substitution: evaluation at
/// U = 0 is the identity, and applying the map twice with fresh variables
/// equals the map at U + V.
AxiomReport verify_axioms(const ExpMap& sigma);

/// Degree of sigma(b) in U and its leading U-coefficient (an element of
/// B). Throws DomainError for b = 0.
std::pair<unsigned, Polynomial> sigma_degree_lc(const ExpMap& sigma, const Polynomial& b);

/// Basis (echelonized, deterministic) of the fixed elements of total
/// degree <= D: the kernel of b -> sigma(b) - b on the truncated
/// coefficient space.
std::vector<Polynomial> constants_bounded(const ExpMap& sigma, unsigned degree_bound);

struct SliceInfo {
    Polynomial slice;
    unsigned degree;    // sigma-degree of the slice
    Polynomial leading; // leading U-coefficient, an element of B
    unsigned bound;     // search bound used
};

/// Scans monomials of total degree <= D that are not fixed by sigma and
/// returns one of minimal sigma-degree (ties: smaller total degree, then
/// lex-smaller). nullopt when every scanned monomial is fixed (sigma
/// trivial up to the bound).
std::optional<SliceInfo> find_local_slice(const ExpMap& sigma, unsigned degree_bound);

struct LocalizationReport {
    bool applicable = true; // false when sigma is trivial up to the bound
    bool certified = false;
    struct CoordinateIdentity {
        std::size_t var;
        unsigned power;          // least N with a^N * x_i in k[constants, s]
        bool found;
    };
    std::vector<CoordinateIdentity> coordinates;
    bool slice_indeterminate = false;
    unsigned bound = 0;
};

/// Bounded check of the localization identity B_a = (B^sigma)_a[s]:
/// for each coordinate x_i searches an identity a^N x_i = P(c_1..c_k, s)
/// with N <= D and P of degree <= D over the bounded constants basis, and
/// verifies that no nonzero combination sum_j b_j s^j with coefficients in
/// the constants span vanishes (s behaves as an indeterminate, up to D).
LocalizationReport localization_identity_check(const ExpMap& sigma,
                                               const std::optional<SliceInfo>& info,
                                               unsigned degree_bound);

/// Basis of the intersection of the bounded constant spaces of the given
/// maps: an upper approximation (more maps only shrink it) of the common
/// invariants up to degree D. Throws DomainError on an empty list.
std::vector<Polynomial> ml_bounded(const std::vector<ExpMap>& maps, unsigned degree_bound);

} // namespace retractlab

#endif
