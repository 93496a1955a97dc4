#include <doctest.h>

#include <fstream>
#include <sstream>

#include "retractlab/corpus.hpp"
#include "retractlab/parser.hpp"
#include "retractlab/printer.hpp"
#include "support/helpers.hpp"

using namespace retractlab;
using namespace retractlab::testing;

TEST_SUITE_BEGIN("corpus");

namespace {

const std::string kCorpusDir = std::string(RETRACTLAB_SOURCE_DIR) + "/corpus/";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("template parsing") {
    MonomialTemplate t = parse_monomial_template("x*y^lm", 3);
    CHECK(!t.zero);
    CHECK(t.exps[0].constant == 1);
    CHECK(t.exps[1].l_power == 1);
    CHECK(t.exps[1].m_power == 1);
    CHECK(t.exps[2].constant == 0);
    CHECK(t.to_string(3) == "x*y^lm");

    CHECK(parse_monomial_template("0", 3).zero);
    CHECK(parse_monomial_template("1", 3).to_string(3) == "1");
    CHECK(parse_monomial_template("y^2", 2).exps[1].constant == 2);

    CHECK_THROWS_AS(parse_monomial_template("w^2", 3), CorpusError);
    CHECK_THROWS_AS(parse_monomial_template("x*x", 3), CorpusError);
    CHECK_THROWS_AS(parse_monomial_template("x^q", 3), CorpusError);
}

TEST_CASE("instantiation respects the exponent bound") {
    MonomialTemplate img = parse_monomial_template("x*y^lm", 3);
    FamilyPattern family{"f", 3, {img, parse_monomial_template("1", 3),
                                  parse_monomial_template("0", 3)},
                         {parse_monomial_template("x", 3)}};
    auto t = instantiate(family, 2, 1, 2);
    REQUIRE(t);
    CHECK(to_string(*t) == "(x*y^2, 1, 0)");
    CHECK(!instantiate(family, 2, 2, 2)); // exponent lm = 4 > 2
}

TEST_CASE("shipped catalogs load and have the expected shape") {
    auto t1 = load_family_corpus(kCorpusDir + "table-4.2-1.txt");
    CHECK(t1.size() == 7);
    for (const FamilyPattern& f : t1) CHECK(f.nvars == 2);

    auto t2 = load_family_corpus(kCorpusDir + "table-4.2-2.txt");
    CHECK(t2.size() == 37);
    for (const FamilyPattern& f : t2) CHECK(f.nvars == 3);

    // Every instantiation of every family is a retraction, equivalently an
    // idempotent map, and its images survive a print/parse round trip.
    const FieldSpec q = FieldSpec::rationals();
    for (const auto& families : {t1, t2}) {
        for (const FamilyPattern& f : families) {
            for (unsigned m = 0; m <= 3; ++m) {
                for (unsigned l = 0; l <= 3; ++l) {
                    auto t = instantiate(f, m, l, 100);
                    REQUIRE(t);
                    EndoMap phi = to_endo(*t, q);
                    CHECK(is_retraction(phi).is_retraction);
                    CHECK(phi.compose(phi) == phi);
                    std::vector<std::string> names = default_var_names(f.nvars);
                    for (const Polynomial& image : phi.images()) {
                        CHECK(parse_polynomial(to_string(image, names), q, names) == image);
                    }
                }
            }
        }
    }
}

TEST_CASE("shipped JSON exports agree with the text catalogs") {
    for (const std::string& stem : {std::string("table-4.2-1"), std::string("table-4.2-2")}) {
        auto families = load_family_corpus(kCorpusDir + stem + ".txt");
        CHECK(family_corpus_to_json(families) == slurp(kCorpusDir + stem + ".json"));
    }
}

TEST_CASE("malformed records are rejected with the record named") {
    auto expect_error = [](const std::string& content, const std::string& fragment) {
        std::string path = "/tmp/retractlab-corpus-test.txt";
        {
            std::ofstream out(path);
            out << content;
        }
        try {
            load_family_corpus(path);
            FAIL("expected CorpusError");
        } catch (const CorpusError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("only | three | fields\n", "4 '|'-separated fields");
    expect_error("id1 | 3 | x ; 0 ; 0 | x\nid1 | 3 | 0 ; y ; 0 | y\n", "duplicate family id");
    expect_error("id1 | 3 | x ; 0 | x\n", "has 2 images");
    expect_error("id1 | x | x ; 0 ; 0 | x\n", "bad variable count");
    expect_error("id1 | 2 | x ; w | x\n", "unknown variable");
    expect_error("id1 | 2 | x ; 0 | 0\n", "zero generator");
}

TEST_CASE("match_families on an empty enumeration") {
    auto families = load_family_corpus(kCorpusDir + "table-4.2-1.txt");
    MatchReport report = match_families({}, families, 1);
    CHECK(report.unmatched.empty());
    CHECK(report.families_hit == 0);
    CHECK(!report.unexpected.empty()); // instantiations exist but nothing enumerated
}

TEST_CASE("match_families reproduces the two-variable catalog") {
    auto families = load_family_corpus(kCorpusDir + "table-4.2-1.txt");
    auto tuples = enumerate_monomial_retractions(2, 3);
    MatchReport report = match_families(tuples, families, 3);
    CHECK(report.exact_match());
    CHECK(report.all_families_hit());
    CHECK(report.family_count == 7);
    CHECK(report.flagged_tuples == 4);
    // Deduplication across families is real: some tuples belong to two rows.
    CHECK(report.overlap_tuples > 0);
}

TEST_SUITE_END();
