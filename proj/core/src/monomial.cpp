#include "retractlab/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "retractlab/linalg.hpp"
#include "retractlab/printer.hpp"

namespace retractlab {

bool operator==(const MonomialTuple& a, const MonomialTuple& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].has_value() != b[i].has_value()) return false;
        if (a[i] && !(*a[i] == *b[i])) return false;
    }
    return true;
}

bool monomial_tuple_less(const MonomialTuple& a, const MonomialTuple& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        // Zero image sorts before any monomial.
        if (a[i].has_value() != b[i].has_value()) return !a[i].has_value();
        if (!a[i]) continue;
        if (*a[i] != *b[i]) return *a[i] < *b[i];
    }
    return false;
}

EndoMap to_endo(const MonomialTuple& tuple, const FieldSpec& field) {
    Ring ring{field, tuple.size()};
    std::vector<Polynomial> images;
    for (const auto& img : tuple) {
        images.push_back(img ? Polynomial::monomial(ring, *img) : Polynomial::zero(ring));
    }
    return EndoMap(ring, std::move(images));
}

std::optional<MonomialTuple> as_monomial_tuple(const EndoMap& phi) {
    MonomialTuple tuple;
    for (const Polynomial& f : phi.images()) {
        if (f.is_zero()) {
            tuple.push_back(std::nullopt);
        } else if (f.is_monic_monomial()) {
            tuple.push_back(f.lex_leading_term().first);
        } else {
            return std::nullopt;
        }
    }
    return tuple;
}

std::string to_string(const MonomialTuple& tuple) {
    std::vector<std::string> names = default_var_names(tuple.size());
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) os << ", ";
        os << (tuple[i] ? to_string(*tuple[i], names) : "0");
    }
    os << ")";
    return os.str();
}

ExponentMatrix exponent_matrix(const MonomialTuple& tuple) {
    ExponentMatrix result;
    result.valid = true;
    const std::size_t n = tuple.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (tuple[i]) result.support.push_back(i);
    }
    // Necessary condition: a nonzero image may only involve variables whose
    // own image is nonzero; otherwise substitution kills the monomial.
    std::vector<std::string> names = default_var_names(n);
    for (std::size_t i : result.support) {
        for (std::size_t j = 0; j < n; ++j) {
            if ((*tuple[i])[j] > 0 && !tuple[j]) {
                result.valid = false;
                result.invalid_reason = "image " + std::to_string(i + 1) + " uses " +
                                        names[j] + " whose image is 0";
                return result;
            }
        }
    }
    const std::size_t r = result.support.size();
    result.entries.assign(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            result.entries[i][j] = (*tuple[result.support[i]])[result.support[j]];
        }
    }
    return result;
}

bool is_idempotent_matrix(const std::vector<std::vector<long>>& e) {
    const std::size_t r = e.size();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            long sum = 0;
            for (std::size_t k = 0; k < r; ++k) sum += e[i][k] * e[k][j];
            if (sum != e[i][j]) return false;
        }
    }
    return true;
}

long matrix_trace(const std::vector<std::vector<long>>& e) {
    long t = 0;
    for (std::size_t i = 0; i < e.size(); ++i) t += e[i][i];
    return t;
}

std::size_t matrix_rank_over_q(const std::vector<std::vector<long>>& e) {
    if (e.empty()) return 0;
    Matrix m(FieldSpec::rationals(), e.size(), e.front().size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e[i].size(); ++j) m.at(i, j) = e[i][j];
    }
    return m.rank();
}

namespace {

bool all_images_constant(const MonomialTuple& tuple) {
    for (const auto& img : tuple) {
        if (img && !img->is_zero()) return false;
    }
    return true;
}

/// Builds the tuple determined by a support set and a candidate exponent
/// matrix: supported images are monomials over the supported variables,
/// the rest are zero.
MonomialTuple tuple_from_matrix(std::size_t n, const std::vector<std::size_t>& support,
                                const std::vector<std::vector<long>>& entries) {
    MonomialTuple tuple(n, std::nullopt);
    for (std::size_t i = 0; i < support.size(); ++i) {
        ExponentVector e(n);
        for (std::size_t j = 0; j < support.size(); ++j) {
            e.set(support[j], static_cast<unsigned>(entries[i][j]));
        }
        tuple[support[i]] = std::move(e);
    }
    return tuple;
}

} // namespace

std::vector<EnumeratedTuple> enumerate_monomial_retractions(std::size_t nvars,
                                                            unsigned max_exp,
                                                            unsigned threads) {
    if (threads == 0) threads = 1;
    const FieldSpec field = FieldSpec::rationals();
    std::vector<EnumeratedTuple> out;

    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (mask & (1u << i)) support.push_back(i);
        }
        const std::size_t r = support.size();
        const std::size_t cells = r * r;
        std::size_t total = 1;
        for (std::size_t i = 0; i < cells; ++i) total *= (max_exp + 1);

        auto scan = [&](std::size_t begin, std::size_t end,
                        std::vector<EnumeratedTuple>& sink) {
            std::vector<std::vector<long>> entries(r, std::vector<long>(r, 0));
            for (std::size_t index = begin; index < end; ++index) {
                std::size_t rest = index;
                for (std::size_t cell = 0; cell < cells; ++cell) {
                    entries[cell / r][cell % r] = static_cast<long>(rest % (max_exp + 1));
                    rest /= (max_exp + 1);
                }
                if (!is_idempotent_matrix(entries)) continue;
                MonomialTuple tuple = tuple_from_matrix(nvars, support, entries);
                // Cross-check with the general fixed-point test.
                if (!is_retraction(to_endo(tuple, field)).is_retraction) continue;
                sink.push_back(EnumeratedTuple{tuple, all_images_constant(tuple)});
            }
        };

        if (threads == 1 || total < 4096) {
            scan(0, total, out);
        } else {
            std::vector<std::vector<EnumeratedTuple>> partial(threads);
            std::vector<std::thread> pool;
            const std::size_t chunk = (total + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                std::size_t begin = t * chunk;
                std::size_t end = std::min(total, begin + chunk);
                if (begin >= end) break;
                pool.emplace_back(scan, begin, end, std::ref(partial[t]));
            }
            for (std::thread& th : pool) th.join();
            for (std::vector<EnumeratedTuple>& p : partial) {
                out.insert(out.end(), p.begin(), p.end());
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const EnumeratedTuple& a, const EnumeratedTuple& b) {
        return monomial_tuple_less(a.images, b.images);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const EnumeratedTuple& a, const EnumeratedTuple& b) {
                              return a.images == b.images;
                          }),
              out.end());
    return out;
}

std::vector<MonomialTuple> all_monomial_tuples(std::size_t nvars, unsigned max_exp) {
    std::vector<std::optional<ExponentVector>> options;
    options.push_back(std::nullopt);
    std::vector<unsigned> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == nvars) {
            options.emplace_back(ExponentVector(exps));
            return;
        }
        for (unsigned e = 0; e <= max_exp; ++e) {
            exps[pos] = e;
            self(self, pos + 1);
        }
        exps[pos] = 0;
    };
    rec(rec, 0);

    std::vector<MonomialTuple> out;
    MonomialTuple tuple(nvars, std::nullopt);
    auto build = [&](auto&& self, std::size_t pos) -> void {
        if (pos == nvars) {
            out.push_back(tuple);
            return;
        }
        for (const auto& option : options) {
            tuple[pos] = option;
            self(self, pos + 1);
        }
    };
    build(build, 0);
    return out;
}

} // namespace retractlab
