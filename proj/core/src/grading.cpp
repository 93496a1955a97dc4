#include "retractlab/grading.hpp"

#include <sstream>

#include "retractlab/printer.hpp"

namespace retractlab {

long weighted_degree(const ExponentVector& e, const WeightVector& w) {
    if (e.size() != w.size()) {
        throw DomainError("weight vector length does not match the variable count");
    }
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        d += static_cast<long>(e[i]) * w[i];
    }
    return d;
}

std::map<long, Polynomial> homogeneous_components(const Polynomial& f, const WeightVector& w) {
    std::map<long, std::vector<Polynomial::Term>> buckets;
    for (const Polynomial::Term& t : f.terms()) {
        buckets[weighted_degree(t.exps, w)].push_back(t);
    }
    std::map<long, Polynomial> out;
    for (auto& [d, terms] : buckets) {
        out.emplace(d, Polynomial::from_terms(f.ring(), terms));
    }
    return out;
}

HomogeneityResult is_homogeneous(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) return {true, std::nullopt, true};
    std::map<long, Polynomial> parts = homogeneous_components(f, w);
    if (parts.size() == 1) return {true, parts.begin()->first, false};
    return {false, std::nullopt, false};
}

GradingReport grading_effective(const SubalgebraPresentation& a, const WeightVector& w) {
    GradingReport report{false, {}};
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const Polynomial& g = a.generators()[i];
        HomogeneityResult h = is_homogeneous(g, w);
        if (!h.homogeneous) {
            std::vector<long> degrees;
            std::ostringstream os;
            os << "generator " << (i + 1) << " (" << to_string(g)
               << ") is not homogeneous; component degrees:";
            for (const auto& [d, part] : homogeneous_components(g, w)) {
                degrees.push_back(d);
                os << " " << d;
            }
            throw InhomogeneousGeneratorError(i, std::move(degrees), os.str());
        }
        report.generator_degrees.push_back(*h.degree);
        if (*h.degree != 0) report.effective = true;
    }
    return report;
}

} // namespace retractlab
