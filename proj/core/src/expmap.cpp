#include "retractlab/expmap.hpp"

#include <algorithm>
#include <map>

#include "retractlab/linalg.hpp"
#include "retractlab/printer.hpp"
#include "retractlab/subalgebra.hpp"

namespace retractlab {

ExpMap::ExpMap(Ring base, std::vector<Polynomial> images)
    : base_(base), extended_{base.field, base.nvars + 1}, images_(std::move(images)) {
    if (images_.size() != base_.nvars) {
        throw DomainError("co-action needs " + std::to_string(base_.nvars) +
                          " images, got " + std::to_string(images_.size()));
    }
    for (const Polynomial& g : images_) {
        if (g.ring() != extended_) {
            throw RingMismatchError(extended_.describe(), g.ring().describe());
        }
    }
}

Polynomial ExpMap::apply(const Polynomial& b) const {
    if (b.ring() != base_) {
        throw RingMismatchError(base_.describe(), b.ring().describe());
    }
    return substitute(b, images_);
}

ExpMap ExpMap::coordinate_translation(const Ring& base, std::size_t moving_index) {
    if (moving_index >= base.nvars) {
        throw DomainError("moving coordinate index out of range");
    }
    Ring ext{base.field, base.nvars + 1};
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base.nvars; ++i) {
        Polynomial g = Polynomial::variable(ext, i);
        if (i == moving_index) g = g + Polynomial::variable(ext, base.nvars);
        images.push_back(std::move(g));
    }
    return ExpMap(base, std::move(images));
}

ExpMap ExpMap::trivial(const Ring& base) {
    Ring ext{base.field, base.nvars + 1};
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base.nvars; ++i) {
        images.push_back(Polynomial::variable(ext, i));
    }
    return ExpMap(base, std::move(images));
}

namespace {

/// Drops the trailing variables of a polynomial known to not use them.
Polynomial restrict_vars(const Polynomial& p, std::size_t nvars) {
    Ring target{p.ring().field, nvars};
    std::vector<Polynomial::Term> terms;
    for (const Polynomial::Term& t : p.terms()) {
        for (std::size_t i = nvars; i < t.exps.size(); ++i) {
            if (t.exps[i] != 0) {
                throw DomainError("polynomial unexpectedly involves an extension variable");
            }
        }
        std::vector<unsigned> e(t.exps.entries().begin(), t.exps.entries().begin() + nvars);
        terms.push_back({ExponentVector(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, terms);
}

} // namespace

AxiomReport verify_axioms(const ExpMap& sigma) {
    AxiomReport report;
    const Ring& base = sigma.base_ring();
    const Ring& ext = sigma.extended_ring();
    const std::size_t n = base.nvars;

    // (i) evaluation at U = 0 returns each coordinate.
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial residual = sigma.images()[i].eval_var_zero(n) - Polynomial::variable(ext, i);
        if (!residual.is_zero()) {
            report.axiom_i_ok = false;
            report.defects_i.emplace_back(i, std::move(residual));
        }
    }

    // (ii) co-associativity over two fresh variables: substituting the
    // images into themselves with V in the U slot must equal the images
    // evaluated at U + V. Computed exactly in k[x1..xn, U, V].
    Ring ext2{base.field, n + 2};
    std::vector<Polynomial> lifted;
    for (const Polynomial& g : sigma.images()) lifted.push_back(g.lift(n + 2));

    std::vector<Polynomial> twice = lifted;
    twice.push_back(Polynomial::variable(ext2, n + 1)); // U slot receives V

    Polynomial u_plus_v =
        Polynomial::variable(ext2, n) + Polynomial::variable(ext2, n + 1);
    std::vector<Polynomial> shifted;
    for (std::size_t i = 0; i < n; ++i) shifted.push_back(Polynomial::variable(ext2, i));
    shifted.push_back(u_plus_v);

    for (std::size_t i = 0; i < n; ++i) {
        Polynomial composed = substitute(sigma.images()[i], twice);
        Polynomial shifted_image = substitute(sigma.images()[i], shifted);
        // Residual convention: the U+V image minus the doubly-applied one.
        Polynomial residual = shifted_image - composed;
        if (!residual.is_zero()) {
            report.axiom_ii_ok = false;
            report.defects_ii.emplace_back(i, std::move(residual));
        }
    }
    return report;
}

std::pair<unsigned, Polynomial> sigma_degree_lc(const ExpMap& sigma, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("sigma-degree of the zero polynomial is undefined");
    Polynomial image = sigma.apply(b);
    const std::size_t u = sigma.base_ring().nvars;
    std::map<unsigned, Polynomial> by_u = image.coefficients_in_var(u);
    unsigned degree = by_u.rbegin()->first;
    Polynomial leading = restrict_vars(by_u.rbegin()->second, u);
    return {degree, std::move(leading)};
}

namespace {

/// Linear system whose kernel is the bounded fixed space of sigma:
/// columns are base monomials of degree <= D, rows the coefficients of
/// sigma(e) - e in B[U].
Matrix fixed_point_matrix(const std::vector<ExpMap>& maps,
                          const std::vector<ExponentVector>& columns) {
    const Ring& base = maps.front().base_ring();
    std::vector<std::vector<Polynomial>> residuals(maps.size());
    std::map<std::pair<std::size_t, ExponentVector>, std::size_t> row_of;
    for (std::size_t m = 0; m < maps.size(); ++m) {
        for (const ExponentVector& e : columns) {
            Polynomial b = Polynomial::monomial(base, e);
            Polynomial r = maps[m].apply(b) - b.lift(base.nvars + 1);
            for (const Polynomial::Term& t : r.terms()) {
                row_of.emplace(std::make_pair(m, t.exps), 0);
            }
            residuals[m].push_back(std::move(r));
        }
    }
    std::size_t idx = 0;
    for (auto& [key, i] : row_of) i = idx++;

    Matrix matrix(base.field, row_of.size(), columns.size());
    for (std::size_t m = 0; m < maps.size(); ++m) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            for (const Polynomial::Term& t : residuals[m][c].terms()) {
                matrix.at(row_of.at({m, t.exps}), c) = t.coeff;
            }
        }
    }
    return matrix;
}

std::vector<Polynomial> kernel_polynomials(const Ring& base,
                                           const std::vector<ExponentVector>& columns,
                                           const Matrix& matrix) {
    std::vector<Polynomial> out;
    for (const std::vector<mpq_class>& v : kernel_basis(matrix)) {
        std::vector<Polynomial::Term> terms;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (v[c] != 0) terms.push_back({columns[c], v[c]});
        }
        out.push_back(Polynomial::from_terms(base, terms));
    }
    return out;
}

} // namespace

std::vector<Polynomial> constants_bounded(const ExpMap& sigma, unsigned degree_bound) {
    std::vector<ExponentVector> columns =
        monomials_up_to_degree(sigma.base_ring().nvars, degree_bound);
    Matrix matrix = fixed_point_matrix({sigma}, columns);
    return kernel_polynomials(sigma.base_ring(), columns, matrix);
}

std::optional<SliceInfo> find_local_slice(const ExpMap& sigma, unsigned degree_bound) {
    const Ring& base = sigma.base_ring();
    std::optional<SliceInfo> best;
    // Candidates come ordered by total degree then ascending lex, so the
    // first minimizer found is the canonical tie-break winner.
    for (const ExponentVector& e : monomials_up_to_degree(base.nvars, degree_bound)) {
        if (e.is_zero()) continue;
        Polynomial b = Polynomial::monomial(base, e);
        if (sigma.apply(b) == b.lift(base.nvars + 1)) continue;
        auto [degree, leading] = sigma_degree_lc(sigma, b);
        if (!best || degree < best->degree) {
            best = SliceInfo{std::move(b), degree, std::move(leading), degree_bound};
        }
    }
    if (best) {
        // The leading coefficient of a local slice is itself a constant.
        Polynomial lc = best->leading;
        if (!(sigma.apply(lc) == lc.lift(base.nvars + 1))) {
            throw DomainError("slice leading coefficient " + to_string(lc) +
                              " is not fixed; the map is not a valid co-action");
        }
    }
    return best;
}

LocalizationReport localization_identity_check(const ExpMap& sigma,
                                               const std::optional<SliceInfo>& info,
                                               unsigned degree_bound) {
    LocalizationReport report;
    report.bound = degree_bound;
    if (!info) {
        report.applicable = false;
        report.certified = true; // vacuous: no slice, nothing to localize
        return report;
    }
    const Ring& base = sigma.base_ring();
    std::vector<Polynomial> constants = constants_bounded(sigma, degree_bound);
    std::vector<Polynomial> gens = constants;
    gens.push_back(info->slice);
    SubalgebraPresentation span_with_slice(base, std::move(gens));

    // a^N x_i = P(constants, s): escalate the pair (N, degree of P)
    // together so cheap certificates are found before any expensive
    // full-bound failure.
    bool all_found = true;
    for (std::size_t i = 0; i < base.nvars; ++i) {
        LocalizationReport::CoordinateIdentity ident{i, 0, false};
        Polynomial target = Polynomial::variable(base, i);
        for (unsigned level = 1; level <= degree_bound && !ident.found; ++level) {
            Polynomial scaled = target;
            for (unsigned n = 0; n <= level && !ident.found; ++n) {
                if (member_bounded(scaled, span_with_slice, level)) {
                    ident.power = n;
                    ident.found = true;
                }
                if (n < level) scaled = scaled * info->leading;
            }
        }
        all_found = all_found && ident.found;
        report.coordinates.push_back(ident);
    }

    // s is an indeterminate over the constants, bounded form: no nonzero
    // combination sum_j b_j s^j with b_j in the constants span vanishes,
    // where deg(b_j) + j*deg(s) <= D.
    const unsigned slice_degree = info->slice.total_degree();
    std::vector<Polynomial> columns;
    for (unsigned j = 0; j * std::max(slice_degree, 1u) <= degree_bound; ++j) {
        Polynomial s_power = info->slice.pow(j);
        for (const Polynomial& c : constants) {
            if (c.total_degree() + j * slice_degree > degree_bound) continue;
            columns.push_back(c * s_power);
        }
    }
    std::map<ExponentVector, std::size_t> row_of;
    for (const Polynomial& p : columns) {
        for (const Polynomial::Term& t : p.terms()) row_of.emplace(t.exps, 0);
    }
    std::size_t idx = 0;
    for (auto& [e, i] : row_of) i = idx++;
    Matrix matrix(base.field, row_of.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const Polynomial::Term& t : columns[c].terms()) {
            matrix.at(row_of.at(t.exps), c) = t.coeff;
        }
    }
    report.slice_indeterminate = kernel_basis(matrix).empty();
    report.certified = all_found && report.slice_indeterminate;
    return report;
}

std::vector<Polynomial> ml_bounded(const std::vector<ExpMap>& maps, unsigned degree_bound) {
    if (maps.empty()) throw DomainError("ml_bounded requires at least one map");
    const Ring& base = maps.front().base_ring();
    for (const ExpMap& m : maps) {
        if (m.base_ring() != base) {
            throw RingMismatchError(base.describe(), m.base_ring().describe());
        }
    }
    std::vector<ExponentVector> columns = monomials_up_to_degree(base.nvars, degree_bound);
    Matrix matrix = fixed_point_matrix(maps, columns);
    return kernel_polynomials(base, columns, matrix);
}

} // namespace retractlab
