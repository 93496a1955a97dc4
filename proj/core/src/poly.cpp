#include "retractlab/poly.hpp"

#include <algorithm>
#include <atomic>

namespace retractlab {

namespace {
std::atomic<unsigned> g_max_total_degree{512};
} // namespace

unsigned max_total_degree() { return g_max_total_degree.load(); }
void set_max_total_degree(unsigned cap) { g_max_total_degree.store(cap); }

unsigned ExponentVector::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

bool ExponentVector::is_zero() const {
    for (unsigned e : exps_) {
        if (e != 0) return false;
    }
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (size() != other.size()) {
        throw DomainError("exponent vector length mismatch");
    }
    std::vector<unsigned> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = exps_[i] + other.exps_[i];
    return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    if (!other.divides(*this)) {
        throw DomainError("exponent vector subtraction would go negative");
    }
    std::vector<unsigned> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = exps_[i] - other.exps_[i];
    return ExponentVector(std::move(out));
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

std::strong_ordering ExponentVector::operator<=>(const ExponentVector& other) const {
    const std::size_t n = std::min(size(), other.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (exps_[i] != other.exps_[i]) {
            return exps_[i] < other.exps_[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        }
    }
    if (size() != other.size()) {
        return size() < other.size() ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

struct LexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return a > b;
    }
};

using TermMap = std::map<ExponentVector, mpq_class, LexGreater>;

void check_degree_cap(unsigned degree) {
    if (degree > max_total_degree()) {
        throw ResourceLimitError(
            "total degree " + std::to_string(degree) + " exceeds the cap of " +
            std::to_string(max_total_degree()) +
            " (override with set_max_total_degree / RETRACTLAB_MAX_DEGREE)");
    }
}

} // namespace

Polynomial Polynomial::zero(const Ring& ring) { return Polynomial(ring, {}); }

Polynomial Polynomial::constant(const Ring& ring, const mpq_class& c) {
    mpq_class r = ring.field.reduce(c);
    if (r == 0) return zero(ring);
    return Polynomial(ring, {Term{ExponentVector(ring.nvars), std::move(r)}});
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
    if (index >= ring.nvars) {
        throw DomainError("variable index " + std::to_string(index) +
                          " out of range for " + ring.describe());
    }
    ExponentVector e(ring.nvars);
    e.set(index, 1);
    return Polynomial(ring, {Term{std::move(e), mpq_class(1)}});
}

Polynomial Polynomial::monomial(const Ring& ring, const ExponentVector& exps,
                                const mpq_class& coeff) {
    if (exps.size() != ring.nvars) {
        throw DomainError("exponent vector length does not match " + ring.describe());
    }
    check_degree_cap(exps.total_degree());
    mpq_class r = ring.field.reduce(coeff);
    if (r == 0) return zero(ring);
    return Polynomial(ring, {Term{exps, std::move(r)}});
}

Polynomial Polynomial::from_terms(const Ring& ring, const std::vector<Term>& terms) {
    TermMap acc;
    for (const Term& t : terms) {
        if (t.exps.size() != ring.nvars) {
            throw DomainError("term exponent length does not match " + ring.describe());
        }
        check_degree_cap(t.exps.total_degree());
        acc[t.exps] += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        mpq_class r = ring.field.reduce(c);
        if (r != 0) out.push_back(Term{e, std::move(r)});
    }
    return Polynomial(ring, std::move(out));
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exps.total_degree());
    return d;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.is_zero());
}

mpq_class Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().exps.is_zero()) return terms_.back().coeff;
    return mpq_class(0);
}

bool Polynomial::is_monomial() const { return terms_.size() == 1; }

bool Polynomial::is_monic_monomial() const {
    return terms_.size() == 1 && terms_[0].coeff == 1;
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.exps[var]);
    return d;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
    if (ring_ != other.ring_) {
        throw RingMismatchError(ring_.describe(), other.ring_.describe());
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(other);
    // Merge of two lex-descending term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        auto cmp = terms_[i].exps <=> other.terms_[j].exps;
        if (cmp == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back(other.terms_[j++]);
        } else {
            mpq_class c = ring_.field.add(terms_[i].coeff, other.terms_[j].coeff);
            if (c != 0) out.push_back(Term{terms_[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(Term{t.exps, ring_.field.neg(t.coeff)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(other);
    if (is_zero() || other.is_zero()) return zero(ring_);
    check_degree_cap(total_degree() + other.total_degree());
    TermMap acc;
    for (const Term& a : terms_) {
        for (const Term& b : other.terms_) {
            acc[a.exps + b.exps] += a.coeff * b.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        mpq_class r = ring_.field.reduce(c);
        if (r != 0) out.push_back(Term{e, std::move(r)});
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const mpq_class& c) const {
    mpq_class r = ring_.field.reduce(c);
    if (r == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        mpq_class rc = ring_.field.mul(t.coeff, r);
        if (rc != 0) out.push_back(Term{t.exps, std::move(rc)});
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (ring_ != other.ring_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].exps == other.terms_[i].exps) ||
            terms_[i].coeff != other.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::strong_ordering Polynomial::compare(const Polynomial& other) const {
    const std::size_t n = std::min(terms_.size(), other.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = terms_[i].exps <=> other.terms_[i].exps;
        if (c != std::strong_ordering::equal) return c;
        int cc = cmp(terms_[i].coeff, other.terms_[i].coeff);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (terms_.size() != other.terms_.size()) {
        return terms_.size() < other.terms_.size() ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::pair<ExponentVector, mpq_class> Polynomial::lex_leading_term() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading term");
    return {terms_.front().exps, terms_.front().coeff};
}

Polynomial Polynomial::lift(std::size_t new_nvars) const {
    if (new_nvars < ring_.nvars) {
        throw DomainError("lift cannot drop variables");
    }
    Ring target{ring_.field, new_nvars};
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<unsigned> e = t.exps.entries();
        e.resize(new_nvars, 0);
        out.push_back(Term{ExponentVector(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(out));
}

Polynomial Polynomial::eval_var_zero(std::size_t var) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.exps[var] == 0) out.push_back(t);
    }
    return Polynomial(ring_, std::move(out));
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in_var(std::size_t var) const {
    std::map<unsigned, std::vector<Term>> buckets;
    for (const Term& t : terms_) {
        ExponentVector e = t.exps;
        unsigned d = e[var];
        e.set(var, 0);
        buckets[d].push_back(Term{std::move(e), t.coeff});
    }
    std::map<unsigned, Polynomial> out;
    for (auto& [d, terms] : buckets) {
        out.emplace(d, Polynomial::from_terms(ring_, terms));
    }
    return out;
}

Polynomial substitute(const Polynomial& g, const std::vector<Polynomial>& images) {
    if (images.empty()) {
        throw DomainError("substitution needs at least one image");
    }
    if (images.size() != g.ring().nvars) {
        throw DomainError("substitution arity mismatch: " +
                          std::to_string(images.size()) + " images for " +
                          g.ring().describe());
    }
    const Ring& target = images.front().ring();
    for (const Polynomial& im : images) {
        if (im.ring() != target) {
            throw RingMismatchError(target.describe(), im.ring().describe());
        }
    }
    if (target.field != g.ring().field) {
        throw RingMismatchError(g.ring().describe(), target.describe());
    }

    // Lazy memo of image powers; exponents in g stay small at desk scale.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(Polynomial::constant(target, 1));
    }
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        while (powers[i].size() <= e) {
            powers[i].push_back(powers[i].back() * images[i]);
        }
        return powers[i][e];
    };

    Polynomial acc = Polynomial::zero(target);
    for (const Polynomial::Term& t : g.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (t.exps[i] > 0) prod = prod * power(i, t.exps[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& h) {
    if (h.is_zero()) throw DomainError("division by the zero polynomial");
    const Ring& ring = f.ring();
    if (ring != h.ring()) {
        throw RingMismatchError(ring.describe(), h.ring().describe());
    }
    // Greedy leading-term division: if f = q*h then LT(f) = LT(q)*LT(h),
    // so each step strips one term of q and strictly lowers the lex lead.
    auto [he, hc] = h.lex_leading_term();
    Polynomial rem = f;
    std::vector<Polynomial::Term> quotient;
    while (!rem.is_zero()) {
        auto [re, rc] = rem.lex_leading_term();
        if (!he.divides(re)) return std::nullopt;
        mpq_class qc = ring.field.div(rc, hc);
        ExponentVector qe = re - he;
        quotient.push_back(Polynomial::Term{qe, qc});
        rem = rem - Polynomial::monomial(ring, qe, qc) * h;
    }
    return Polynomial::from_terms(ring, quotient);
}

std::vector<ExponentVector> monomials_up_to_degree(std::size_t nvars, unsigned bound) {
    std::vector<ExponentVector> out;
    std::vector<unsigned> cur(nvars, 0);
    // Enumerate exponent tuples of each total degree via odometer recursion.
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    for (unsigned d = 0; d <= bound; ++d) {
        std::size_t first = out.size();
        if (nvars == 0) {
            if (d == 0) out.emplace_back(cur);
        } else {
            rec(rec, 0, d);
        }
        std::sort(out.begin() + first, out.end(),
                  [](const ExponentVector& a, const ExponentVector& b) { return a < b; });
    }
    return out;
}

} // namespace retractlab
