#include "retractlab/subalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "retractlab/linalg.hpp"
#include "retractlab/printer.hpp"

namespace retractlab {

SubalgebraPresentation::SubalgebraPresentation(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)) {
    for (Polynomial& g : generators) {
        if (g.ring() != ring_) {
            throw RingMismatchError(ring_.describe(), g.ring().describe());
        }
        if (g.is_zero()) {
            throw DomainError("subalgebra generators must be nonzero");
        }
        bool seen = false;
        for (const Polynomial& kept : generators_) {
            if (kept == g) {
                seen = true;
                break;
            }
        }
        if (!seen) generators_.push_back(std::move(g));
    }
}

namespace {

/// Shared assembly of the evaluation map: columns are monomials t^alpha of
/// total degree <= d in the r fresh variables, each mapped to the product
/// prod g_i^{alpha_i} in B. Products are memoized across escalation levels.
class EvaluationMap {
public:
    EvaluationMap(const SubalgebraPresentation& a) : a_(a) {}

    void extend_to_degree(unsigned d) {
        if (built_degree_ >= static_cast<int>(d)) return;
        const std::size_t r = a_.generators().size();
        std::vector<ExponentVector> all = monomials_up_to_degree(r, d);
        for (const ExponentVector& alpha : all) {
            if (static_cast<int>(alpha.total_degree()) <= built_degree_) continue;
            columns_.push_back(alpha);
            products_.push_back(product_for(alpha));
        }
        built_degree_ = static_cast<int>(d);
    }

    const std::vector<ExponentVector>& columns() const { return columns_; }
    const std::vector<Polynomial>& products() const { return products_; }

    /// Rows of the linear system: every B-monomial seen in any product or
    /// in `extra`, in deterministic lex order.
    Matrix assemble(const Polynomial* extra, std::vector<mpq_class>* rhs) const {
        std::map<ExponentVector, std::size_t> row_of;
        auto note = [&](const Polynomial& p) {
            for (const Polynomial::Term& t : p.terms()) row_of.emplace(t.exps, 0);
        };
        for (const Polynomial& p : products_) note(p);
        if (extra != nullptr) note(*extra);
        std::size_t idx = 0;
        for (auto& [e, i] : row_of) i = idx++;

        Matrix m(a_.ring().field, row_of.size(), columns_.size());
        for (std::size_t c = 0; c < products_.size(); ++c) {
            for (const Polynomial::Term& t : products_[c].terms()) {
                m.at(row_of.at(t.exps), c) = t.coeff;
            }
        }
        if (rhs != nullptr) {
            rhs->assign(row_of.size(), 0);
            if (extra != nullptr) {
                for (const Polynomial::Term& t : extra->terms()) {
                    (*rhs)[row_of.at(t.exps)] = t.coeff;
                }
            }
        }
        return m;
    }

    Polynomial combination(const std::vector<mpq_class>& coeffs) const {
        Ring fresh{a_.ring().field, a_.generators().size()};
        std::vector<Polynomial::Term> terms;
        for (std::size_t c = 0; c < coeffs.size(); ++c) {
            if (coeffs[c] != 0) terms.push_back({columns_[c], coeffs[c]});
        }
        return Polynomial::from_terms(fresh, terms);
    }

private:
    Polynomial product_for(const ExponentVector& alpha) {
        if (alpha.is_zero()) return Polynomial::constant(a_.ring(), 1);
        // Peel one generator off and reuse the memoized predecessor.
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            ExponentVector prev = alpha;
            prev.set(i, alpha[i] - 1);
            auto it = memo_.find(prev);
            const Polynomial& base =
                (it != memo_.end()) ? it->second
                                    : memo_.emplace(prev, product_for(prev)).first->second;
            Polynomial prod = base * a_.generators()[i];
            memo_.emplace(alpha, prod);
            return prod;
        }
        return Polynomial::constant(a_.ring(), 1); // unreachable
    }

    const SubalgebraPresentation& a_;
    int built_degree_ = -1;
    std::vector<ExponentVector> columns_;
    std::vector<Polynomial> products_;
    std::map<ExponentVector, Polynomial> memo_;
};

} // namespace

std::optional<MembershipCertificate> member_bounded(const Polynomial& f,
                                                    const SubalgebraPresentation& a,
                                                    unsigned degree_bound) {
    if (degree_bound < 1) throw DomainError("membership bound must be >= 1");
    if (f.ring() != a.ring()) {
        throw RingMismatchError(f.ring().describe(), a.ring().describe());
    }
    EvaluationMap eval(a);
    // Degree escalation: succeed as early as possible; only a NotFound
    // answer pays for the full bound.
    for (unsigned d = 1; d <= degree_bound; ++d) {
        eval.extend_to_degree(d);
        std::vector<mpq_class> rhs;
        Matrix m = eval.assemble(&f, &rhs);
        if (auto x = solve(m, rhs)) {
            return MembershipCertificate{eval.combination(*x), degree_bound};
        }
    }
    return std::nullopt;
}

std::optional<DependenceWitness> dependence_bounded(const SubalgebraPresentation& a,
                                                    unsigned degree_bound) {
    if (degree_bound < 1) throw DomainError("dependence bound must be >= 1");
    EvaluationMap eval(a);
    for (unsigned d = 1; d <= degree_bound; ++d) {
        eval.extend_to_degree(d);
        Matrix m = eval.assemble(nullptr, nullptr);
        std::vector<std::vector<mpq_class>> kernel = kernel_basis(m);
        if (!kernel.empty()) {
            return DependenceWitness{eval.combination(kernel.front()), degree_bound};
        }
    }
    return std::nullopt;
}

std::vector<Polynomial> relation_kernel_basis(const SubalgebraPresentation& a,
                                              unsigned degree_bound) {
    EvaluationMap eval(a);
    eval.extend_to_degree(degree_bound);
    Matrix m = eval.assemble(nullptr, nullptr);
    std::vector<Polynomial> out;
    for (const std::vector<mpq_class>& v : kernel_basis(m)) {
        out.push_back(eval.combination(v));
    }
    return out;
}

bool monomial_semigroup_member(const ExponentVector& target,
                               const std::vector<ExponentVector>& generators) {
    if (target.is_zero()) return true;
    std::set<ExponentVector> dead; // vectors known unreachable
    auto rec = [&](auto&& self, const ExponentVector& e) -> bool {
        if (e.is_zero()) return true;
        if (dead.count(e)) return false;
        for (const ExponentVector& g : generators) {
            if (!g.is_zero() && g.divides(e) && self(self, e - g)) return true;
        }
        dead.insert(e);
        return false;
    };
    return rec(rec, target);
}

namespace {

std::vector<ExponentVector> monomial_exponents(const SubalgebraPresentation& a) {
    std::vector<ExponentVector> exps;
    for (const Polynomial& g : a.generators()) {
        if (!g.is_monic_monomial()) {
            throw DomainError("expected a monic monomial generator, got " + to_string(g));
        }
        exps.push_back(g.lex_leading_term().first);
    }
    return exps;
}

} // namespace

SubalgebraPresentation minimize_monomial_generators(const SubalgebraPresentation& a) {
    std::vector<ExponentVector> exps = monomial_exponents(a);
    // Discard 1, dedup, and order by (degree, lex) for a stable result.
    std::sort(exps.begin(), exps.end(), [](const ExponentVector& p, const ExponentVector& q) {
        if (p.total_degree() != q.total_degree()) return p.total_degree() < q.total_degree();
        return p < q;
    });
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::erase_if(exps, [](const ExponentVector& e) { return e.is_zero(); });

    // A generator is redundant iff it lies in the monoid of the others;
    // removal never changes the monoid, so one pass suffices.
    std::vector<ExponentVector> kept = exps;
    for (const ExponentVector& e : exps) {
        std::vector<ExponentVector> others;
        for (const ExponentVector& other : kept) {
            if (!(other == e)) others.push_back(other);
        }
        if (monomial_semigroup_member(e, others)) kept = std::move(others);
    }

    std::vector<Polynomial> gens;
    for (const ExponentVector& e : kept) {
        gens.push_back(Polynomial::monomial(a.ring(), e));
    }
    return SubalgebraPresentation(a.ring(), std::move(gens));
}

FactorialClosureReport factorially_closed_monomial(const SubalgebraPresentation& a,
                                                   unsigned degree_bound) {
    std::vector<ExponentVector> gens = monomial_exponents(a);
    std::erase_if(gens, [](const ExponentVector& e) { return e.is_zero(); });

    std::vector<ExponentVector> candidates = monomials_up_to_degree(a.ring().nvars, degree_bound);
    std::erase_if(candidates, [](const ExponentVector& e) { return e.is_zero(); });
    // Scan lex-descending within each degree so the first counterexample is
    // the x-most pair.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const ExponentVector& p, const ExponentVector& q) {
                         if (p.total_degree() != q.total_degree()) {
                             return p.total_degree() < q.total_degree();
                         }
                         return p > q;
                     });

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const ExponentVector& b1 = candidates[i];
        bool b1_in = monomial_semigroup_member(b1, gens);
        for (std::size_t j = i; j < candidates.size(); ++j) {
            const ExponentVector& b2 = candidates[j];
            if (!monomial_semigroup_member(b1 + b2, gens)) continue;
            if (b1_in && monomial_semigroup_member(b2, gens)) continue;
            return FactorialClosureReport{
                false,
                std::make_pair(Polynomial::monomial(a.ring(), b1),
                               Polynomial::monomial(a.ring(), b2)),
                degree_bound};
        }
    }
    return FactorialClosureReport{true, std::nullopt, degree_bound};
}

} // namespace retractlab
