#include <doctest.h>

#include <array>
#include <set>

#include "retractlab/classifier.hpp"
#include "retractlab/corpus.hpp"
#include "retractlab/monomial.hpp"
#include "retractlab/printer.hpp"
#include "support/helpers.hpp"

using namespace retractlab;
using namespace retractlab::testing;

TEST_SUITE_BEGIN("classifier");

namespace {

EndoMap make_q(std::size_t n, const std::vector<std::string>& images) {
    Ring r = qring(n);
    std::vector<Polynomial> polys;
    for (const std::string& s : images) polys.push_back(pq(s, n));
    return EndoMap(r, polys);
}

/// tau . pi . tau^{-1} with tau = (x+y^2, y+z^2, z), pi = (x, y, x): a
/// retraction that defeats every rule (no constants, no fixed coordinate,
/// no monomial, no binomial carrying its own variable).
EndoMap hidden_plane_retraction() {
    Ring r = qring(3);
    EndoMap tau(r, {pq("x + y^2", 3), pq("y + z^2", 3), pq("z", 3)});
    EndoMap tau_inv(r, {pq("x - (y - z^2)^2", 3), pq("y - z^2", 3), pq("z", 3)});
    EndoMap pi(r, {pq("x", 3), pq("y", 3), pq("x", 3)});
    return tau.compose(pi).compose(tau_inv);
}

void check_witness_soundness(const Verdict& verdict, const EndoMap& phi, unsigned bound) {
    if (verdict.witnesses.empty()) return;
    REQUIRE(verdict.dim);
    CHECK(verdict.witnesses.size() == *verdict.dim);
    std::vector<Polynomial> gens;
    for (const Polynomial& w : verdict.witnesses) {
        if (!w.is_zero()) gens.push_back(w);
    }
    SubalgebraPresentation a(phi.ring(), gens);
    if (!gens.empty()) CHECK(!dependence_bounded(a, bound));
    for (const Polynomial& f : phi.images()) {
        if (!f.is_zero()) CHECK(member_bounded(f, a, bound));
    }
}

} // namespace

TEST_CASE("elementary cases: identity coordinate") {
    EndoMap phi = make_q(3, {"x", "y", "x*y"});
    auto verdict = elementary_cases_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(verdict->status == VerdictStatus::PolynomialRing);
    CHECK(*verdict->dim == 2);
    REQUIRE(verdict->witnesses.size() == 2);
    CHECK(verdict->witnesses[0] == pq("x", 3));
    CHECK(verdict->witnesses[1] == pq("y", 3));
    check_witness_soundness(*verdict, phi, 8);
}

TEST_CASE("elementary cases: constant image with dependent pair") {
    EndoMap phi = make_q(3, {"x", "x^2", "0"});
    auto verdict = elementary_cases_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(*verdict->dim == 1);
    REQUIRE(verdict->witnesses.size() == 1);
    CHECK(verdict->witnesses[0] == pq("x", 3));
    CHECK(!verdict->bound_relative); // the found relation is an exact proof
}

TEST_CASE("elementary cases: identity tuple") {
    EndoMap phi = EndoMap::identity(qring(3));
    auto verdict = elementary_cases_rule(phi, 6);
    REQUIRE(verdict);
    CHECK(*verdict->dim == 3);
    CHECK(!verdict->bound_relative);
    check_witness_soundness(*verdict, phi, 6);
}

TEST_CASE("elementary cases require a retraction") {
    CHECK_THROWS_AS(elementary_cases_rule(make_q(3, {"x + y", "y", "z"}), 4), DomainError);
}

TEST_CASE("monomial rule: lone variable image delegates") {
    EndoMap phi = make_q(3, {"x", "x^2", "x^2 - y + z"});
    auto verdict = monomial_image_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(verdict->status == VerdictStatus::PolynomialRing);
    CHECK(*verdict->dim == 2);
    REQUIRE(verdict->witnesses.size() == 2);
    CHECK(verdict->witnesses[0] == pq("x", 3));
    CHECK(verdict->witnesses[1] == pq("x^2 - y + z", 3));
    check_witness_soundness(*verdict, phi, 8);
}

TEST_CASE("monomial rule: pair of monomials reduces through the catalog shape") {
    EndoMap phi = make_q(3, {"y", "y", "y^3"});
    auto verdict = monomial_image_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(*verdict->dim == 1);
    REQUIRE(verdict->witnesses.size() == 1);
    CHECK(verdict->witnesses[0] == pq("y", 3));
}

TEST_CASE("monomial rule: all-monomial tuples classify exactly") {
    EndoMap phi = make_q(3, {"y*z", "y", "z"});
    REQUIRE(is_retraction(phi).is_retraction);
    auto verdict = monomial_image_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(*verdict->dim == 2);
    CHECK(!verdict->bound_relative);
    check_witness_soundness(*verdict, phi, 8);
    // The redundant product image is dropped from the witnesses.
    REQUIRE(verdict->witnesses.size() == 2);
    std::set<std::string> names;
    for (const Polynomial& w : verdict->witnesses) names.insert(to_string(w));
    CHECK(names == std::set<std::string>{"y", "z"});
}

TEST_CASE("monomial rule preconditions") {
    // (x^2, y, y) is not a retraction: handled upstream, the rule refuses.
    CHECK(!is_retraction(make_q(3, {"x^2", "y", "y"})).is_retraction);
    CHECK_THROWS_AS(monomial_image_rule(make_q(3, {"x^2", "y", "y"}), 4), DomainError);
    // Constant image: not this rule's case.
    CHECK(!monomial_image_rule(make_q(3, {"x*y^3", "1", "0"}), 4));
    // No monomial image at all.
    CHECK(!monomial_image_rule(hidden_plane_retraction(), 4));
}

TEST_CASE("binomial rule examples") {
    EndoMap phi = make_q(3, {"x + 2*x^2*y", "0", "z"});
    REQUIRE(is_retraction(phi).is_retraction);
    auto verdict = binomial_image_rule(phi, 8);
    REQUIRE(verdict);
    CHECK(verdict->status == VerdictStatus::PolynomialRing);
    CHECK(*verdict->dim == 2);
    REQUIRE(verdict->witnesses.size() == 2);
    CHECK(verdict->witnesses[0] == pq("x + 2*x^2*y", 3));
    CHECK(verdict->witnesses[1] == pq("z", 3));
    check_witness_soundness(*verdict, phi, 8);

    EndoMap single = make_q(3, {"x + x^2*y^3", "0", "0"});
    auto v2 = binomial_image_rule(single, 8);
    REQUIRE(v2);
    CHECK(*v2->dim == 1);
    REQUIRE(v2->witnesses.size() == 1);
    CHECK(v2->witnesses[0] == pq("x + x^2*y^3", 3));

    // A pure-power binomial can never satisfy the fixed-point condition.
    EndoMap pure = make_q(3, {"x + x^2", "y", "z"});
    CHECK(!is_retraction(pure).is_retraction);
    CHECK_THROWS_AS(binomial_image_rule(pure, 4), DomainError);

    // Nonzero constant terms: the rule declines.
    CHECK(!binomial_image_rule(make_q(3, {"x*y^3", "1", "0"}), 4));
}

TEST_CASE("classify: plane examples") {
    Verdict v = classify(make_q(2, {"x*y^3", "1"}), 8);
    CHECK(v.status == VerdictStatus::PolynomialRing);
    CHECK(*v.dim == 1);
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0] == pq("x*y^3", 2));

    Verdict id2 = classify(make_q(2, {"x", "y"}), 8);
    CHECK(*id2.dim == 2);
    CHECK(!id2.bound_relative);

    Verdict consts = classify(make_q(2, {"1", "0"}), 8);
    CHECK(*consts.dim == 0);
}

TEST_CASE("classify: space examples") {
    Verdict v = classify(make_q(3, {"x", "x^2", "x^2 - y + z"}), 8);
    CHECK(v.status == VerdictStatus::PolynomialRing);
    CHECK(*v.dim == 2);
    REQUIRE(v.witnesses.size() == 2);
    CHECK(v.witnesses[1] == pq("x^2 - y + z", 3));

    Verdict bad = classify(make_q(3, {"x + y", "y", "z"}), 8);
    CHECK(bad.status == VerdictStatus::NotARetraction);
    REQUIRE(bad.defects.size() == 1);
    CHECK(bad.defects[0].first == 0);
    CHECK(bad.defects[0].second == pq("y", 3));

    CHECK_THROWS_AS(classify(EndoMap::identity(qring(4)), 4), DomainError);
}

TEST_CASE("classify: inconclusive exemplar") {
    EndoMap phi = hidden_plane_retraction();
    REQUIRE(is_retraction(phi).is_retraction);
    // No image is constant, none equals its own variable, none is a
    // monomial, and the only binomial (x + y^2) does not contain z.
    Verdict v = classify(phi, 8);
    CHECK(v.status == VerdictStatus::Inconclusive);
}

TEST_CASE("classify is deterministic") {
    EndoMap phi = make_q(3, {"x", "x^2", "x^2 - y + z"});
    Verdict a = classify(phi, 8);
    Verdict b = classify(phi, 8);
    CHECK(a.status == b.status);
    CHECK(a.dim == b.dim);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i] == b.witnesses[i]);
    }
}

TEST_CASE("rule order does not change status or dimension") {
    std::vector<EndoMap> tuples = {
        make_q(3, {"x", "x^2", "x^2 - y + z"}),
        make_q(3, {"x", "y", "x*y"}),
        make_q(3, {"x*y^2", "1", "y*z"}),
        make_q(3, {"x", "y", "z"}),
        make_q(3, {"x + 2*x^2*y", "0", "z"}),
        make_q(3, {"y^2", "y", "y + y^3 - y^2"}),
        hidden_plane_retraction(),
    };
    std::array<ClassifierRule, 3> rules = {ClassifierRule::ElementaryCases,
                                           ClassifierRule::MonomialImage,
                                           ClassifierRule::BinomialImage};
    std::sort(rules.begin(), rules.end());
    for (const EndoMap& phi : tuples) {
        Verdict reference = classify(phi, 8);
        std::array<ClassifierRule, 3> order = rules;
        do {
            Verdict v = classify_with_rule_order(phi, 8, order);
            CHECK(v.status == reference.status);
            CHECK(v.dim == reference.dim);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("classifier over a prime field") {
    Ring f5 = fpring(5, 3);
    auto make_f5 = [&](const std::vector<std::string>& images) {
        std::vector<Polynomial> polys;
        for (const std::string& s : images) polys.push_back(pf(s, 5, 3));
        return EndoMap(f5, polys);
    };
    Verdict v = classify(make_f5({"x", "x^2", "x^2 - y + z"}), 8);
    CHECK(v.status == VerdictStatus::PolynomialRing);
    CHECK(*v.dim == 2);

    Verdict mono = classify(make_f5({"x*y^3", "1", "0"}), 8);
    CHECK(mono.status == VerdictStatus::PolynomialRing);
    CHECK(*mono.dim == 1);

    // 5*y vanishes mod 5, so this tuple is the projection (x, 0, z).
    Verdict proj = classify(make_f5({"x", "5*y", "z"}), 8);
    CHECK(proj.status == VerdictStatus::PolynomialRing);
    CHECK(*proj.dim == 2);

    CHECK(classify(make_f5({"x + y", "y", "z"}), 8).status ==
          VerdictStatus::NotARetraction);
}

TEST_CASE("random conjugates of projections stay consistent (property)") {
    // tau . pi . tau^{-1} is always a retraction for an automorphism tau;
    // the pipeline must never call it NotARetraction, any dimension claim
    // must match the projection's rank, and witnesses must re-verify.
    std::mt19937 rng(80519);
    Ring r = qring(3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<unsigned> expdist(1, 2);
    std::uniform_int_distribution<int> pick(0, 2);

    auto random_triangular_pair = [&]() -> std::pair<EndoMap, EndoMap> {
        // tau: x -> x + p(y, z), y -> y + q(z), z -> z, built upper
        // triangular so the inverse is explicit.
        ExponentVector ep(3), eq(3);
        ep.set(1, expdist(rng));
        ep.set(2, expdist(rng));
        eq.set(2, expdist(rng));
        Polynomial p = Polynomial::monomial(r, ep, coeff(rng) == 0 ? 1 : coeff(rng));
        Polynomial q = Polynomial::monomial(r, eq, coeff(rng) == 0 ? 1 : coeff(rng));
        Polynomial x = pq("x", 3), y = pq("y", 3), z = pq("z", 3);
        EndoMap tau(r, {x + p, y + q, z});
        Polynomial y_inv = y - q;
        Polynomial p_at_yinv = substitute(p, {x, y_inv, z});
        EndoMap tau_inv(r, {x - p_at_yinv, y_inv, z});
        return {tau, tau_inv};
    };

    std::vector<std::pair<EndoMap, unsigned>> projections = {
        {EndoMap(r, {pq("x", 3), pq("y", 3), pq("0", 3)}), 2},
        {EndoMap(r, {pq("x", 3), pq("0", 3), pq("0", 3)}), 1},
        {EndoMap(r, {pq("x", 3), pq("y", 3), pq("x", 3)}), 2},
        {EndoMap(r, {pq("x", 3), pq("y", 3), pq("z", 3)}), 3},
    };

    for (int trial = 0; trial < 40; ++trial) {
        auto [tau, tau_inv] = random_triangular_pair();
        REQUIRE(tau.compose(tau_inv) == EndoMap::identity(r));
        const auto& [pi, rank] = projections[static_cast<std::size_t>(pick(rng)) %
                                             projections.size()];
        EndoMap phi = tau.compose(pi).compose(tau_inv);
        REQUIRE(is_retraction(phi).is_retraction);
        Verdict v = classify(phi, 8);
        CHECK(v.status != VerdictStatus::NotARetraction);
        if (v.status == VerdictStatus::PolynomialRing) {
            CHECK(*v.dim == rank);
            check_witness_soundness(v, phi, 8);
        }
    }
}

TEST_CASE("verdict witnesses re-verify across the catalog sample") {
    const std::string dir = std::string(RETRACTLAB_SOURCE_DIR) + "/corpus/";
    for (const auto& [file, max_exp] :
         {std::pair<std::string, unsigned>{"table-4.2-1.txt", 2},
          std::pair<std::string, unsigned>{"table-4.2-2.txt", 1}}) {
        for (const FamilyPattern& family : load_family_corpus(dir + file)) {
            for (unsigned m = 0; m <= max_exp; ++m) {
                for (unsigned l = 0; l <= max_exp; ++l) {
                    auto tuple = instantiate(family, m, l, max_exp);
                    if (!tuple) continue;
                    EndoMap phi = to_endo(*tuple, FieldSpec::rationals());
                    Verdict v = classify(phi, 8);
                    REQUIRE(v.status == VerdictStatus::PolynomialRing);
                    CHECK(*v.dim == family.generators.size());
                    check_witness_soundness(v, phi, 8);

                    // The witness algebra equals the catalog's generator
                    // column, by mutual bounded membership.
                    if (!v.witnesses.empty()) {
                        std::vector<Polynomial> table_gens;
                        for (const ExponentVector& e : instantiate_generators(family, m, l)) {
                            table_gens.push_back(
                                Polynomial::monomial(phi.ring(), e));
                        }
                        SubalgebraPresentation from_table(phi.ring(), table_gens);
                        SubalgebraPresentation from_verdict(phi.ring(), v.witnesses);
                        for (const Polynomial& w : v.witnesses) {
                            CHECK(member_bounded(w, from_table, 8));
                        }
                        for (const Polynomial& g : table_gens) {
                            CHECK(member_bounded(g, from_verdict, 8));
                        }
                    }
                }
            }
        }
    }
}

TEST_SUITE_END();
