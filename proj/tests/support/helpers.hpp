#ifndef RETRACTLAB_TESTS_HELPERS_HPP
#define RETRACTLAB_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "retractlab/linalg.hpp"
#include "retractlab/parser.hpp"
#include "retractlab/poly.hpp"
#include "retractlab/printer.hpp"

namespace retractlab::testing {

inline Ring qring(std::size_t n) { return Ring{FieldSpec::rationals(), n}; }
inline Ring fpring(unsigned long p, std::size_t n) {
    return Ring{FieldSpec::prime_field(p), n};
}

/// Parses with the default x,y,z names (plus U/V extension variables).
inline Polynomial pq(const std::string& text, std::size_t n, std::size_t ext = 0) {
    return parse_polynomial(text, FieldSpec::rationals(), default_var_names(n, ext));
}
inline Polynomial pf(const std::string& text, unsigned long p, std::size_t n,
                     std::size_t ext = 0) {
    return parse_polynomial(text, FieldSpec::prime_field(p), default_var_names(n, ext));
}

/// Independent multiplication oracle: brute-force pairwise term products
/// assembled with from_terms, never calling operator*.
inline Polynomial schoolbook_multiply(const Polynomial& f, const Polynomial& g) {
    std::vector<Polynomial::Term> terms;
    for (const Polynomial::Term& a : f.terms()) {
        for (const Polynomial::Term& b : g.terms()) {
            terms.push_back({a.exps + b.exps, a.coeff * b.coeff});
        }
    }
    return Polynomial::from_terms(f.ring(), terms);
}

/// Independent exact-division oracle: solves f = q*h as a linear system in
/// the coefficients of q (candidate support: all monomials of total degree
/// <= deg f - deg h), a different route than the greedy lex division.
inline std::optional<Polynomial> divide_by_linear_solve(const Polynomial& f,
                                                        const Polynomial& h) {
    const Ring& ring = f.ring();
    if (f.is_zero()) return Polynomial::zero(ring);
    if (h.total_degree() > f.total_degree()) return std::nullopt;
    std::vector<ExponentVector> candidates =
        monomials_up_to_degree(ring.nvars, f.total_degree() - h.total_degree());

    std::map<ExponentVector, std::size_t> row_of;
    for (const ExponentVector& e : candidates) {
        for (const Polynomial::Term& t : h.terms()) row_of.emplace(e + t.exps, 0);
    }
    for (const Polynomial::Term& t : f.terms()) row_of.emplace(t.exps, 0);
    std::size_t idx = 0;
    for (auto& [e, i] : row_of) i = idx++;

    Matrix m(ring.field, row_of.size(), candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        for (const Polynomial::Term& t : h.terms()) {
            std::size_t r = row_of.at(candidates[c] + t.exps);
            m.at(r, c) = ring.field.add(m.at(r, c), t.coeff);
        }
    }
    std::vector<mpq_class> rhs(row_of.size(), 0);
    for (const Polynomial::Term& t : f.terms()) rhs[row_of.at(t.exps)] = t.coeff;

    auto x = solve(m, rhs);
    if (!x) return std::nullopt;
    std::vector<Polynomial::Term> qterms;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if ((*x)[c] != 0) qterms.push_back({candidates[c], (*x)[c]});
    }
    Polynomial q = Polynomial::from_terms(ring, qterms);
    if (!(schoolbook_multiply(q, h) == f)) return std::nullopt;
    return q;
}

/// Deterministic sparse random polynomial.
inline Polynomial random_polynomial(std::mt19937& rng, const Ring& ring, unsigned max_terms,
                                    unsigned max_exp, bool allow_zero = true) {
    std::uniform_int_distribution<unsigned> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<Polynomial::Term> terms;
    unsigned count = nterms(rng);
    for (unsigned t = 0; t < count; ++t) {
        ExponentVector e(ring.nvars);
        for (std::size_t i = 0; i < ring.nvars; ++i) e.set(i, exp(rng));
        int c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({e, mpq_class(c)});
    }
    Polynomial p = Polynomial::from_terms(ring, terms);
    if (!allow_zero && p.is_zero()) return Polynomial::constant(ring, 1);
    return p;
}

} // namespace retractlab::testing

#endif
