#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <set>

#include "retractlab/classifier.hpp"
#include "retractlab/corpus.hpp"
#include "retractlab/endo.hpp"
#include "retractlab/expmap.hpp"
#include "retractlab/grading.hpp"
#include "retractlab/monomial.hpp"
#include "retractlab/parser.hpp"
#include "retractlab/printer.hpp"

namespace retractlab::cli {

namespace {

using nlohmann::json;

FieldSpec parse_field(const std::string& text) {
    if (text == "Q" || text == "q") return FieldSpec::rationals();
    if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
        try {
            return FieldSpec::prime_field(mpz_class(text.substr(1)));
        } catch (const std::invalid_argument&) {
            throw DomainError("bad field spec '" + text + "'");
        }
    }
    throw DomainError("bad field spec '" + text + "' (expected Q or F<p>)");
}

std::vector<std::string> parse_vars(const std::string& text) {
    std::vector<std::string> vars;
    std::string cur;
    auto flush = [&]() {
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        std::string name = (b == std::string::npos) ? "" : cur.substr(b, e - b + 1);
        if (name.empty()) throw DomainError("empty variable name in --vars");
        if (name == "U" || name == "V") {
            throw DomainError("'" + name + "' is reserved for co-action variables");
        }
        for (char c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                throw DomainError("bad variable name '" + name + "'");
            }
        }
        if (std::isdigit(static_cast<unsigned char>(name[0]))) {
            throw DomainError("bad variable name '" + name + "'");
        }
        vars.push_back(name);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw DomainError("duplicate variable in --vars");
    return vars;
}

struct CommandContext {
    std::ostream& out;
    bool want_json = false;
};

void emit(CommandContext& ctx, const json& j, const std::string& text) {
    if (ctx.want_json) {
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << text;
    }
}

// --- verify-retraction -----------------------------------------------------

int cmd_verify_retraction(CommandContext& ctx, const std::string& field_text,
                          const std::string& vars_text, const std::string& images_text) {
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    Ring ring{field, vars.size()};
    std::vector<Polynomial> images = parse_image_list(images_text, field, vars);
    if (images.size() != vars.size()) {
        throw DomainError("expected " + std::to_string(vars.size()) + " images, got " +
                          std::to_string(images.size()));
    }
    EndoMap phi(ring, images);
    RetractionReport report = is_retraction(phi);

    json defects = json::array();
    std::string text = std::string("retraction: ") + (report.is_retraction ? "yes" : "no") + "\n";
    for (const auto& [index, residual] : report.defects) {
        defects.push_back({{"index", index + 1}, {"residual", to_string(residual, vars)}});
        text += "defect at i=" + std::to_string(index + 1) +
                ": residual = " + to_string(residual, vars) + "\n";
    }
    json j = {{"command", "verify-retraction"},
              {"field", field.to_string()},
              {"vars", vars},
              {"is_retraction", report.is_retraction},
              {"defects", defects}};
    emit(ctx, j, text);
    return report.is_retraction ? kOk : kCheckFailed;
}

// --- classify ----------------------------------------------------------------

json verdict_json(const Verdict& verdict, const std::vector<std::string>& vars) {
    json reasons = json::array();
    for (const Reason& r : verdict.reasons) {
        reasons.push_back({{"rule", r.rule}, {"anchor", r.anchor}});
    }
    json witnesses = json::array();
    for (const Polynomial& w : verdict.witnesses) witnesses.push_back(to_string(w, vars));
    json defects = json::array();
    for (const auto& [index, residual] : verdict.defects) {
        defects.push_back({{"index", index + 1}, {"residual", to_string(residual, vars)}});
    }
    std::string status;
    switch (verdict.status) {
    case VerdictStatus::NotARetraction: status = "not_a_retraction"; break;
    case VerdictStatus::PolynomialRing: status = "polynomial_ring"; break;
    case VerdictStatus::Inconclusive: status = "inconclusive"; break;
    }
    json j = {{"status", status},
              {"dim", verdict.dim ? json(*verdict.dim) : json(nullptr)},
              {"witnesses", witnesses},
              {"bound_relative", verdict.bound_relative},
              {"reasons", reasons},
              {"bounds", verdict.bounds},
              {"defects", defects}};
    return j;
}

std::string verdict_text(const Verdict& verdict, const std::vector<std::string>& vars) {
    std::string text;
    switch (verdict.status) {
    case VerdictStatus::NotARetraction: text = "status: not-a-retraction\n"; break;
    case VerdictStatus::PolynomialRing:
        text = "status: polynomial-ring (dim " + std::to_string(*verdict.dim) +
               (verdict.bound_relative ? ", bound-relative" : "") + ")\n";
        break;
    case VerdictStatus::Inconclusive: text = "status: inconclusive\n"; break;
    }
    if (!verdict.witnesses.empty()) {
        text += "witnesses:";
        for (const Polynomial& w : verdict.witnesses) text += " " + to_string(w, vars);
        text += "\n";
    }
    for (const auto& [index, residual] : verdict.defects) {
        text += "defect at i=" + std::to_string(index + 1) +
                ": residual = " + to_string(residual, vars) + "\n";
    }
    for (const Reason& r : verdict.reasons) {
        text += "reason: " + r.rule + ": " + r.anchor + "\n";
    }
    if (!verdict.bounds.empty()) {
        text += "bounds:";
        for (const auto& [k, v] : verdict.bounds) text += " " + k + "=" + std::to_string(v);
        text += "\n";
    }
    return text;
}

int cmd_classify(CommandContext& ctx, const std::string& field_text,
                 const std::string& vars_text, const std::string& images_text,
                 unsigned bound) {
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    Ring ring{field, vars.size()};
    std::vector<Polynomial> images = parse_image_list(images_text, field, vars);
    if (images.size() != vars.size()) {
        throw DomainError("expected " + std::to_string(vars.size()) + " images, got " +
                          std::to_string(images.size()));
    }
    Verdict verdict = classify(EndoMap(ring, images), bound);
    json j = {{"command", "classify"},
              {"field", field.to_string()},
              {"vars", vars},
              {"verdict", verdict_json(verdict, vars)}};
    emit(ctx, j, verdict_text(verdict, vars));
    return kOk;
}

// --- enum-monomial -----------------------------------------------------------

int cmd_enum_monomial(CommandContext& ctx, unsigned n, unsigned max_exp,
                      const std::string& corpus_path, unsigned threads) {
    std::vector<EnumeratedTuple> tuples = enumerate_monomial_retractions(n, max_exp, threads);

    json jtuples = json::array();
    std::string text;
    std::size_t flagged = 0;
    for (const EnumeratedTuple& t : tuples) {
        if (t.algebra_is_k) ++flagged;
        jtuples.push_back({{"images", to_string(t.images)}, {"algebra_is_k", t.algebra_is_k}});
        text += to_string(t.images) + (t.algebra_is_k ? "  [algebra = k]" : "") + "\n";
    }
    text += "tuples: " + std::to_string(tuples.size()) + " (algebra = k: " +
            std::to_string(flagged) + ")\n";
    json j = {{"command", "enum-monomial"},
              {"n", n},
              {"max_exp", max_exp},
              {"count", tuples.size()},
              {"algebra_k_count", flagged},
              {"tuples", jtuples}};

    int code = kOk;
    if (!corpus_path.empty()) {
        std::vector<FamilyPattern> families = load_family_corpus(corpus_path);
        for (const FamilyPattern& f : families) {
            if (f.nvars != n) {
                throw CorpusError("family '" + f.id + "' has n = " + std::to_string(f.nvars) +
                                  " but the enumeration uses n = " + std::to_string(n));
            }
        }
        MatchReport match = match_families(tuples, families, max_exp);
        json jfam = json::array();
        for (const FamilyMatchStats& f : match.families) {
            jfam.push_back({{"id", f.id},
                            {"instantiations", f.instantiations},
                            {"hits", f.hits}});
        }
        json junmatched = json::array();
        for (const MonomialTuple& t : match.unmatched) junmatched.push_back(to_string(t));
        json junexpected = json::array();
        for (const MonomialTuple& t : match.unexpected) junexpected.push_back(to_string(t));
        j["match"] = {{"corpus", corpus_path},
                      {"families", match.family_count},
                      {"families_hit", match.families_hit},
                      {"matched_tuples", match.total_tuples - match.unmatched.size()},
                      {"unmatched", junmatched},
                      {"unexpected", junexpected},
                      {"overlap_tuples", match.overlap_tuples},
                      {"family_stats", jfam}};
        text += std::to_string(match.families_hit) + "/" + std::to_string(match.family_count) +
                " families matched, " + std::to_string(match.unmatched.size()) +
                " unmatched tuples, " + std::to_string(match.unexpected.size()) +
                " unexpected instantiations\n";
        for (const MonomialTuple& t : match.unmatched) text += "unmatched: " + to_string(t) + "\n";
        for (const MonomialTuple& t : match.unexpected) {
            text += "unexpected: " + to_string(t) + "\n";
        }
        if (!match.exact_match() || !match.all_families_hit()) code = kCheckFailed;
    }
    emit(ctx, j, text);
    return code;
}

// --- expmap ------------------------------------------------------------------

struct ExpMapInput {
    FieldSpec field;
    std::vector<std::string> vars;     // base variables
    std::vector<std::string> ext_vars; // base + U
    Ring base;
    ExpMap map;
};

ExpMapInput parse_expmap(const std::string& field_text, const std::string& vars_text,
                         const std::string& images_text) {
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    std::vector<std::string> ext_vars = vars;
    ext_vars.push_back("U");
    Ring base{field, vars.size()};
    std::vector<Polynomial> images = parse_image_list(images_text, field, ext_vars);
    if (images.size() != vars.size()) {
        throw DomainError("expected " + std::to_string(vars.size()) + " images, got " +
                          std::to_string(images.size()));
    }
    return ExpMapInput{field, vars, ext_vars, base, ExpMap(base, images)};
}

json axiom_json(const AxiomReport& report, const std::vector<std::string>& base_vars) {
    std::vector<std::string> ext = base_vars;
    ext.push_back("U");
    std::vector<std::string> ext2 = ext;
    ext2.push_back("V");
    json di = json::array();
    for (const auto& [i, r] : report.defects_i) {
        di.push_back({{"index", i + 1}, {"residual", to_string(r, ext)}});
    }
    json dii = json::array();
    for (const auto& [i, r] : report.defects_ii) {
        dii.push_back({{"index", i + 1}, {"residual", to_string(r, ext2)}});
    }
    return {{"axiom_i_ok", report.axiom_i_ok},
            {"axiom_ii_ok", report.axiom_ii_ok},
            {"defects_i", di},
            {"defects_ii", dii}};
}

std::string axiom_text(const AxiomReport& report, const std::vector<std::string>& base_vars) {
    std::vector<std::string> ext = base_vars;
    ext.push_back("U");
    std::vector<std::string> ext2 = ext;
    ext2.push_back("V");
    std::string text;
    text += std::string("axiom (i) evaluation at U=0: ") +
            (report.axiom_i_ok ? "pass" : "FAIL") + "\n";
    for (const auto& [i, r] : report.defects_i) {
        text += "  defect at i=" + std::to_string(i + 1) + ": " + to_string(r, ext) + "\n";
    }
    text += std::string("axiom (ii) composition law: ") +
            (report.axiom_ii_ok ? "pass" : "FAIL") + "\n";
    for (const auto& [i, r] : report.defects_ii) {
        text += "  defect at i=" + std::to_string(i + 1) + ": " + to_string(r, ext2) + "\n";
    }
    return text;
}

int require_axioms(CommandContext& ctx, const ExpMapInput& input, json& j, std::string& text) {
    AxiomReport report = verify_axioms(input.map);
    if (!report.ok()) {
        j["axioms"] = axiom_json(report, input.vars);
        text += "not an exponential map:\n" + axiom_text(report, input.vars);
        emit(ctx, j, text);
        return kCheckFailed;
    }
    return kOk;
}

int cmd_expmap_verify(CommandContext& ctx, const std::string& field_text,
                      const std::string& vars_text, const std::string& images_text) {
    ExpMapInput input = parse_expmap(field_text, vars_text, images_text);
    AxiomReport report = verify_axioms(input.map);
    json j = {{"command", "expmap-verify"},
              {"field", input.field.to_string()},
              {"vars", input.vars},
              {"axioms", axiom_json(report, input.vars)}};
    emit(ctx, j, axiom_text(report, input.vars));
    return report.ok() ? kOk : kCheckFailed;
}

int cmd_expmap_constants(CommandContext& ctx, const std::string& field_text,
                         const std::string& vars_text, const std::string& images_text,
                         unsigned bound) {
    ExpMapInput input = parse_expmap(field_text, vars_text, images_text);
    json j = {{"command", "expmap-constants"},
              {"field", input.field.to_string()},
              {"vars", input.vars},
              {"bound", bound}};
    std::string text;
    if (int rc = require_axioms(ctx, input, j, text); rc != kOk) return rc;

    std::vector<Polynomial> basis = constants_bounded(input.map, bound);
    json jbasis = json::array();
    text += "fixed-element basis up to total degree " + std::to_string(bound) + ":\n";
    for (const Polynomial& b : basis) {
        jbasis.push_back(to_string(b, input.vars));
        text += "  " + to_string(b, input.vars) + "\n";
    }
    text += "dimension: " + std::to_string(basis.size()) + "\n";
    j["basis"] = jbasis;
    j["dimension"] = basis.size();
    emit(ctx, j, text);
    return kOk;
}

int cmd_expmap_slice(CommandContext& ctx, const std::string& field_text,
                     const std::string& vars_text, const std::string& images_text,
                     unsigned bound) {
    ExpMapInput input = parse_expmap(field_text, vars_text, images_text);
    json j = {{"command", "expmap-slice"},
              {"field", input.field.to_string()},
              {"vars", input.vars},
              {"bound", bound}};
    std::string text;
    if (int rc = require_axioms(ctx, input, j, text); rc != kOk) return rc;

    std::optional<SliceInfo> info = find_local_slice(input.map, bound);
    if (!info) {
        j["all_constant"] = true;
        text += "all monomials up to degree " + std::to_string(bound) +
                " are fixed (map trivial up to the bound); localization inapplicable\n";
        emit(ctx, j, text);
        return kOk;
    }
    j["all_constant"] = false;
    j["slice"] = to_string(info->slice, input.vars);
    j["degree"] = info->degree;
    j["leading"] = to_string(info->leading, input.vars);
    text += "local slice: " + to_string(info->slice, input.vars) + "\n";
    text += "slice degree: " + std::to_string(info->degree) + "\n";
    text += "leading coefficient: " + to_string(info->leading, input.vars) + "\n";

    LocalizationReport loc = localization_identity_check(input.map, info, bound);
    json jcoords = json::array();
    for (const auto& c : loc.coordinates) {
        jcoords.push_back({{"var", input.vars[c.var]},
                           {"found", c.found},
                           {"power", c.power}});
        text += "localization of " + input.vars[c.var] + ": " +
                (c.found ? "certified with leading-coefficient power " + std::to_string(c.power)
                         : "not certified within the bound") +
                "\n";
    }
    j["localization"] = {{"certified", loc.certified},
                         {"slice_indeterminate", loc.slice_indeterminate},
                         {"coordinates", jcoords}};
    text += std::string("slice behaves as an indeterminate up to the bound: ") +
            (loc.slice_indeterminate ? "yes" : "no") + "\n";
    text += std::string("localization identity: ") +
            (loc.certified ? "certified" : "not certified") + "\n";
    emit(ctx, j, text);
    return loc.certified ? kOk : kCheckFailed;
}

int cmd_expmap_ml(CommandContext& ctx, const std::string& field_text,
                  const std::string& vars_text, const std::vector<std::string>& images_texts,
                  unsigned bound) {
    if (images_texts.empty()) throw DomainError("expmap ml needs at least one --images");
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    std::vector<std::string> ext_vars = vars;
    ext_vars.push_back("U");
    Ring base{field, vars.size()};

    std::vector<ExpMap> maps;
    json j = {{"command", "expmap-ml"},
              {"field", field.to_string()},
              {"vars", vars},
              {"bound", bound},
              {"maps", images_texts.size()}};
    std::string text;
    for (const std::string& images_text : images_texts) {
        std::vector<Polynomial> images = parse_image_list(images_text, field, ext_vars);
        if (images.size() != vars.size()) {
            throw DomainError("expected " + std::to_string(vars.size()) + " images, got " +
                              std::to_string(images.size()));
        }
        ExpMap map(base, images);
        AxiomReport report = verify_axioms(map);
        if (!report.ok()) {
            j["axioms"] = axiom_json(report, vars);
            text += "map '" + images_text + "' is not an exponential map:\n" +
                    axiom_text(report, vars);
            emit(ctx, j, text);
            return kCheckFailed;
        }
        maps.push_back(std::move(map));
    }

    std::vector<Polynomial> basis = ml_bounded(maps, bound);
    json jbasis = json::array();
    text += "common fixed-element basis up to total degree " + std::to_string(bound) +
            " (upper approximation over the supplied maps):\n";
    for (const Polynomial& b : basis) {
        jbasis.push_back(to_string(b, vars));
        text += "  " + to_string(b, vars) + "\n";
    }
    text += "dimension: " + std::to_string(basis.size()) + "\n";
    j["basis"] = jbasis;
    j["dimension"] = basis.size();
    emit(ctx, j, text);
    return kOk;
}

// --- grading -----------------------------------------------------------------

int cmd_grading(CommandContext& ctx, const std::string& field_text,
                const std::string& vars_text, const std::string& weights_text,
                const std::string& gens_text) {
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    Ring ring{field, vars.size()};

    WeightVector weights;
    std::string cur;
    auto push_weight = [&]() {
        std::size_t b = cur.find_first_not_of(" \t");
        std::size_t e = cur.find_last_not_of(" \t");
        std::string w = (b == std::string::npos) ? "" : cur.substr(b, e - b + 1);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(w, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (w.empty() || used != w.size()) throw DomainError("bad weight '" + w + "'");
        weights.push_back(value);
        cur.clear();
    };
    for (char c : weights_text) {
        if (c == ',') {
            push_weight();
        } else {
            cur += c;
        }
    }
    push_weight();
    if (weights.size() != vars.size()) {
        throw DomainError("expected " + std::to_string(vars.size()) + " weights, got " +
                          std::to_string(weights.size()));
    }
    std::vector<Polynomial> gens = parse_image_list(gens_text, field, vars);
    SubalgebraPresentation a(ring, gens);
    GradingReport report = grading_effective(a, weights);

    json jdegrees = json::array();
    std::string text;
    for (std::size_t i = 0; i < report.generator_degrees.size(); ++i) {
        jdegrees.push_back(report.generator_degrees[i]);
        text += "generator " + std::to_string(i + 1) + " (" +
                to_string(a.generators()[i], vars) +
                "): degree " + std::to_string(report.generator_degrees[i]) + "\n";
    }
    text += std::string("grading effective on the subalgebra: ") +
            (report.effective ? "yes" : "no") + "\n";
    json j = {{"command", "grading"},
              {"field", field.to_string()},
              {"vars", vars},
              {"weights", weights},
              {"generator_degrees", jdegrees},
              {"effective", report.effective}};
    emit(ctx, j, text);
    return report.effective ? kOk : kCheckFailed;
}

// --- kernel-check ------------------------------------------------------------

int cmd_kernel_check(CommandContext& ctx, const std::string& field_text,
                     const std::string& vars_text, const std::string& images_text,
                     const std::string& h_text, unsigned bound) {
    FieldSpec field = parse_field(field_text);
    std::vector<std::string> vars = parse_vars(vars_text);
    Ring ring{field, vars.size()};
    std::vector<Polynomial> images = parse_image_list(images_text, field, vars);
    if (images.size() != vars.size()) {
        throw DomainError("expected " + std::to_string(vars.size()) + " images, got " +
                          std::to_string(images.size()));
    }
    Polynomial h = parse_polynomial(h_text, field, vars);
    EndoMap phi(ring, images);
    KernelCheckReport report = kernel_principal_check(phi, h, bound);

    std::string text;
    json j = {{"command", "kernel-check"},
              {"field", field.to_string()},
              {"vars", vars},
              {"h", to_string(h, vars)},
              {"bound", bound},
              {"ok", report.ok},
              {"h_maps_to_zero", report.h_maps_to_zero}};
    if (!report.h_maps_to_zero) {
        text += "h is not sent to zero by the map\n";
    }
    if (report.first_failure) {
        j["first_failure"] = to_string(*report.first_failure, vars);
        text += "monomial " + to_string(*report.first_failure, vars) +
                " has a residual not divisible by h\n";
    }
    text += std::string("kernel principal up to degree ") + std::to_string(bound) + ": " +
            (report.ok ? "yes" : "no") + "\n";
    emit(ctx, j, text);
    return report.ok ? kOk : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("RETRACTLAB_MAX_DEGREE")) {
        try {
            set_max_total_degree(static_cast<unsigned>(std::stoul(cap)));
        } catch (const std::exception&) {
            err << "bad RETRACTLAB_MAX_DEGREE value '" << cap << "'\n";
            return kUsageError;
        }
    }

    CLI::App app{"exact computations with retractions and co-actions of polynomial rings"};
    app.require_subcommand(1);
    // kernel-check takes '--h' (the candidate generator), so the help flag
    // stays long-form only, on every subcommand for consistency.
    app.set_help_flag("--help", "print help and exit");
    auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };
    CommandContext ctx{out};

    std::string field = "Q";
    std::string vars;
    std::string images;
    std::string h_expr;
    std::string weights;
    std::string gens;
    std::string corpus;
    std::vector<std::string> images_list;
    unsigned bound = 8;
    unsigned n = 3;
    unsigned max_exp = 1;
    unsigned threads = 1;

    auto add_common = [&](CLI::App* cmd, bool with_bound) {
        cmd->add_option("--field", field, "coefficient field: Q or F<p>")
            ->capture_default_str();
        cmd->add_option("--vars", vars, "comma-separated variable names")->required();
        cmd->add_flag("--json", ctx.want_json, "emit the JSON report");
        if (with_bound) {
            cmd->add_option("--bound", bound, "degree bound for bounded searches")
                ->capture_default_str();
        }
    };

    CLI::App* verify = add_sub(&app, "verify-retraction",
                                     "test the fixed-point condition of an image tuple");
    add_common(verify, false);
    verify->add_option("--images", images, "';'-separated images of the variables")->required();

    CLI::App* classify_cmd =
        add_sub(&app, "classify", "classify the retract presented by an image tuple");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--images", images, "';'-separated images of the variables")
        ->required();

    CLI::App* enum_cmd = add_sub(
        &app, "enum-monomial", "enumerate all monomial retraction tuples up to an exponent bound");
    enum_cmd->add_option("--n", n, "number of variables (2 or 3)")
        ->required()
        ->check(CLI::Range(2u, 3u));
    enum_cmd->add_option("--max-exp", max_exp, "maximum exponent")->required();
    enum_cmd->add_option("--match-corpus", corpus, "family catalog to compare against");
    enum_cmd->add_option("--threads", threads, "worker threads for the scan")
        ->capture_default_str();
    enum_cmd->add_flag("--json", ctx.want_json, "emit the JSON report");

    CLI::App* expmap_cmd = add_sub(&app, "expmap", "co-action computations");
    expmap_cmd->require_subcommand(1);
    CLI::App* em_verify = add_sub(expmap_cmd, "verify", "check the co-action axioms");
    add_common(em_verify, false);
    em_verify->add_option("--images", images, "';'-separated images (may use U)")->required();
    CLI::App* em_constants =
        add_sub(expmap_cmd, "constants", "bounded basis of the fixed elements");
    add_common(em_constants, true);
    em_constants->add_option("--images", images, "';'-separated images (may use U)")->required();
    CLI::App* em_slice = add_sub(
        expmap_cmd, "slice", "minimal-degree local slice and the localization identity");
    add_common(em_slice, true);
    em_slice->add_option("--images", images, "';'-separated images (may use U)")->required();
    CLI::App* em_ml = add_sub(
        expmap_cmd, "ml", "intersection of the fixed spaces of several co-actions");
    add_common(em_ml, true);
    em_ml->add_option("--images", images_list, "one ';'-separated image list per map")
        ->required()
        ->type_size(1);

    CLI::App* grading_cmd =
        add_sub(&app, "grading", "effectiveness of an induced weight grading");
    add_common(grading_cmd, false);
    grading_cmd->add_option("--weights", weights, "comma-separated integer weights")->required();
    grading_cmd->add_option("--gens", gens, "';'-separated homogeneous generators")->required();

    CLI::App* kernel_cmd = add_sub(
        &app, "kernel-check", "bounded check that the kernel of a retraction is principal");
    add_common(kernel_cmd, true);
    kernel_cmd->add_option("--images", images, "';'-separated images of the variables")
        ->required();
    kernel_cmd->add_option("--h", h_expr, "candidate kernel generator")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's own formatting.
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (verify->parsed()) return cmd_verify_retraction(ctx, field, vars, images);
        if (classify_cmd->parsed()) return cmd_classify(ctx, field, vars, images, bound);
        if (enum_cmd->parsed()) return cmd_enum_monomial(ctx, n, max_exp, corpus, threads);
        if (expmap_cmd->parsed()) {
            if (em_verify->parsed()) return cmd_expmap_verify(ctx, field, vars, images);
            if (em_constants->parsed()) {
                return cmd_expmap_constants(ctx, field, vars, images, bound);
            }
            if (em_slice->parsed()) return cmd_expmap_slice(ctx, field, vars, images, bound);
            if (em_ml->parsed()) return cmd_expmap_ml(ctx, field, vars, images_list, bound);
        }
        if (grading_cmd->parsed()) return cmd_grading(ctx, field, vars, weights, gens);
        if (kernel_cmd->parsed()) {
            return cmd_kernel_check(ctx, field, vars, images, h_expr, bound);
        }
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "no subcommand executed\n";
    return kUsageError;
}

} // namespace retractlab::cli
