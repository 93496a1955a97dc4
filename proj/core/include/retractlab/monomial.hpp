#ifndef RETRACTLAB_MONOMIAL_HPP
#define RETRACTLAB_MONOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "retractlab/endo.hpp"
#include "retractlab/poly.hpp"

namespace retractlab {

/// Image tuple where every entry is either the zero polynomial (nullopt)
/// or a monic monomial given by its exponent vector.
using MonomialTuple = std::vector<std::optional<ExponentVector>>;

bool operator==(const MonomialTuple& a, const MonomialTuple& b);
bool monomial_tuple_less(const MonomialTuple& a, const MonomialTuple& b);

/// The tuple as a k-algebra endomorphism over the given field.
EndoMap to_endo(const MonomialTuple& tuple, const FieldSpec& field);

/// Extracts the tuple form of an endomorphism whose images are all zero or
/// monic monomials; nullopt when some image is not of that shape.
std::optional<MonomialTuple> as_monomial_tuple(const EndoMap& phi);

std::string to_string(const MonomialTuple& tuple);

/// Restriction of the exponent data to the support (indices of nonzero
/// images): entry (i,j) is the exponent of the j-th supported variable in
/// the i-th supported image. The restriction is valid only when no nonzero
/// image uses a variable whose own image is zero.
struct ExponentMatrix {
    bool valid;
    std::string invalid_reason;          // set when !valid
    std::vector<std::size_t> support;    // 0-based indices, ascending
    std::vector<std::vector<long>> entries;
};

/// Throws DomainError if some nonzero image is not a monic monomial.
ExponentMatrix exponent_matrix(const MonomialTuple& tuple);

/// E*E == E over the integers.
bool is_idempotent_matrix(const std::vector<std::vector<long>>& e);

long matrix_trace(const std::vector<std::vector<long>>& e);
std::size_t matrix_rank_over_q(const std::vector<std::vector<long>>& e);

struct EnumeratedTuple {
    MonomialTuple images;
    /// All images constant (0 or 1), i.e. the generated algebra is k.
    bool algebra_is_k;
};

/// The exact set of tuples (f1..fn), each image 0 or a monic monomial with
/// every exponent <= max_exp, satisfying the fixed-point condition.
/// Enumeration walks (support, exponent matrix) candidates, filters by
/// matrix idempotency, and cross-checks every survivor with is_retraction.
/// Tuples generating only constants are flagged, not dropped. The result
/// is sorted deterministically regardless of the worker count.
std::vector<EnumeratedTuple> enumerate_monomial_retractions(std::size_t nvars,
                                                            unsigned max_exp,
                                                            unsigned threads = 1);

/// All images zero or monic monomials with every exponent <= max_exp
/// (unfiltered candidate space; used by the equivalence sweep).
std::vector<MonomialTuple> all_monomial_tuples(std::size_t nvars, unsigned max_exp);

} // namespace retractlab

#endif
