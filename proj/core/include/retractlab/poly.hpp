#ifndef RETRACTLAB_POLY_HPP
#define RETRACTLAB_POLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "retractlab/field.hpp"

namespace retractlab {

/// Global safety cap on the total degree any operation may produce.
/// Substitution composes degrees multiplicatively; the cap turns a runaway
/// computation into a loud ResourceLimitError instead of memory exhaustion.
unsigned max_total_degree();
void set_max_total_degree(unsigned cap);

/// Exponent vector of a monomial in a fixed number of variables.
/// Ordered lexicographically with x1 > x2 > ... > xn.
class ExponentVector {
public:
    explicit ExponentVector(std::size_t nvars) : exps_(nvars, 0) {}
    ExponentVector(std::initializer_list<unsigned> exps) : exps_(exps) {}
    explicit ExponentVector(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, unsigned e) { exps_[i] = e; }
    const std::vector<unsigned>& entries() const { return exps_; }

    unsigned total_degree() const;
    bool is_zero() const;

    /// Componentwise sum; sizes must agree.
    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; requires other.divides(*this).
    ExponentVector operator-(const ExponentVector& other) const;
    /// True when every entry of *this is <= the matching entry of other.
    bool divides(const ExponentVector& other) const;

    /// Lexicographic order with x1 > x2 > ... > xn: the first differing
    /// entry decides, larger entry meaning lex-greater monomial.
    std::strong_ordering operator<=>(const ExponentVector& other) const;
    bool operator==(const ExponentVector& other) const { return exps_ == other.exps_; }

private:
    std::vector<unsigned> exps_;
};

/// A polynomial ring: coefficient field plus variable count.
struct Ring {
    FieldSpec field;
    std::size_t nvars;

    bool operator==(const Ring& other) const {
        return field == other.field && nvars == other.nvars;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }
    std::string describe() const {
        return field.to_string() + "[" + std::to_string(nvars) + " vars]";
    }
};

/// Sparse multivariate polynomial in canonical form: terms sorted
/// lex-descending, no zero coefficients, coefficients reduced in the field.
/// Immutable after construction; all operations are pure.
class Polynomial {
public:
    struct Term {
        ExponentVector exps;
        mpq_class coeff;
    };

    static Polynomial zero(const Ring& ring);
    static Polynomial constant(const Ring& ring, const mpq_class& c);
    static Polynomial variable(const Ring& ring, std::size_t index);
    static Polynomial monomial(const Ring& ring, const ExponentVector& exps,
                               const mpq_class& coeff = 1);
    /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
    static Polynomial from_terms(const Ring& ring, const std::vector<Term>& terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const; // 0 for the zero polynomial
    bool is_constant() const;
    mpq_class constant_term() const;
    /// Single term, any coefficient.
    bool is_monomial() const;
    /// Single term with coefficient 1.
    bool is_monic_monomial() const;
    /// Degree of a single variable across all terms.
    unsigned degree_in(std::size_t var) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scale(const mpq_class& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Total order used for deterministic containers and reports; compares
    /// term sequences (exponent, then coefficient).
    std::strong_ordering compare(const Polynomial& other) const;
    bool operator<(const Polynomial& other) const {
        return compare(other) == std::strong_ordering::less;
    }

    /// Lex-maximal exponent vector and its coefficient. Throws DomainError
    /// on the zero polynomial.
    std::pair<ExponentVector, mpq_class> lex_leading_term() const;

    /// Same polynomial viewed in a ring with extra trailing variables.
    Polynomial lift(std::size_t new_nvars) const;
    /// Sets one variable to zero (keeps the ring).
    Polynomial eval_var_zero(std::size_t var) const;
    /// U-expansion: coefficient polynomials by the exponent of `var`, with
    /// that variable's exponent zeroed out (same ring).
    std::map<unsigned, Polynomial> coefficients_in_var(std::size_t var) const;

private:
    Polynomial(Ring ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    void check_same_ring(const Polynomial& other) const;

    Ring ring_;
    std::vector<Term> terms_; // lex-descending, canonical
};

/// g(images): evaluates g at the given image polynomials. The images must
/// all live in one common ring over the same field; |images| must equal
/// g's variable count. The common ring may have a different variable count
/// than g's ring (this is the extension form used for maps into B[U]).
/// The result lives in the images' ring.
Polynomial substitute(const Polynomial& g, const std::vector<Polynomial>& images);

/// Exact division in the polynomial ring: returns q with f = q*h when q
/// exists, std::nullopt otherwise. Throws DomainError when h = 0.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& h);

/// All exponent vectors in `nvars` variables of total degree <= bound,
/// in a deterministic order (total degree ascending, then lex ascending).
std::vector<ExponentVector> monomials_up_to_degree(std::size_t nvars, unsigned bound);

} // namespace retractlab

#endif
