// initforms: weighted initial forms, Newton polytopes, and Ga-actions on
// polynomial rings, with machine-readable JSON output on stdout. Diagnostics
// go to stderr only (INITFORMS_LOG=debug|info).

#include "initforms/fuzz.hpp"
#include "initforms/json_io.hpp"
#include "initforms/parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using initforms::io::Json;

int log_level() {
    const char* env = std::getenv("INITFORMS_LOG");
    if (!env) return 0;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[initforms] " << msg << "\n";
}

bool pretty_output = false;

void emit(const Json& j) { std::cout << (pretty_output ? j.dump(2) : j.dump()) << "\n"; }

int emit_error(const initforms::Error& e) {
    Json out = Json::object();
    out["status"] = "error";
    out["error_class"] = initforms::io::error_class_name(e);
    out["details"] = e.what();
    emit(out);
    return 3;
}

// Ambient variable count: explicit flag, or the highest index mentioned.
int resolve_nvars(int flag_value, const std::string& expr) {
    if (flag_value > 0) return flag_value;
    int seen = initforms::max_var_index(expr);
    return seen > 0 ? seen : 1;
}

Json parse_json_text(const std::string& text) {
    return Json::parse(text);  // throws nlohmann exceptions on bad input
}

struct Options {
    int nvars = 0;
    bool allow_z = false;
    std::string weight_literal;
    std::string action_desc;
    int n = 0;
    std::string job_path;
    std::string suite;
    std::uint64_t seed = 1;
    int count = 100;
    std::vector<std::string> exprs;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact initial forms, Newton polytopes, and Ga-actions"};
    app.require_subcommand(1);
    app.add_flag("--pretty", pretty_output, "indent JSON output (default is one compact line)");
    Options opt;

    // poly parse|mul|divides
    CLI::App* poly = app.add_subcommand("poly", "polynomial ring operations");
    poly->require_subcommand(1);
    CLI::App* poly_parse = poly->add_subcommand("parse", "parse and canonicalize an expression");
    poly_parse->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    poly_parse->add_flag("--z", opt.allow_z, "admit the coaction variable z");
    poly_parse->add_option("expr", opt.exprs, "expression")->required()->expected(1);
    CLI::App* poly_mul = poly->add_subcommand("mul", "exact product of two polynomials");
    poly_mul->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    poly_mul->add_option("exprs", opt.exprs, "two expressions")->required()->expected(2);
    CLI::App* poly_div = poly->add_subcommand("divides", "does g divide f exactly: arguments g f");
    poly_div->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    poly_div->add_option("exprs", opt.exprs, "divisor then dividend")->required()->expected(2);

    // initform
    CLI::App* initform = app.add_subcommand("initform", "w-degree and w-initial form");
    initform->add_option("--w", opt.weight_literal, "weight literal, e.g. [[1],[1]]")->required();
    initform->add_option("expr", opt.exprs, "expression")->required()->expected(1);

    // newton vertices|intruders|criterion
    CLI::App* newton = app.add_subcommand("newton", "Newton polytope queries");
    newton->require_subcommand(1);
    CLI::App* nv = newton->add_subcommand("vertices", "hull vertices with certificates");
    nv->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    nv->add_option("expr", opt.exprs, "expression")->required()->expected(1);
    CLI::App* ni = newton->add_subcommand("intruders", "hull vertices with all coordinates nonzero");
    ni->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    ni->add_option("expr", opt.exprs, "expression")->required()->expected(1);
    CLI::App* nc = newton->add_subcommand("criterion", "vertex-monomial divisibility dictionary");
    nc->add_option("--nvars", opt.nvars, "ambient variable count (inferred when omitted)");
    nc->add_option("expr", opt.exprs, "expression")->required()->expected(1);

    // action validate|exp|invariant|stable-witness
    CLI::App* action = app.add_subcommand("action", "Ga-action operations");
    action->require_subcommand(1);
    CLI::App* av = action->add_subcommand("validate", "check both coaction axioms");
    av->add_option("descriptor", opt.action_desc, "action JSON {\"m\":..,\"images\":[..]}")->required();
    CLI::App* ae = action->add_subcommand("exp", "exponential of a locally nilpotent derivation");
    ae->add_option("descriptor", opt.action_desc, "LND JSON {\"m\":..,\"d\":[..]}")->required();
    CLI::App* ai = action->add_subcommand("invariant", "is f invariant under the action");
    ai->add_option("--action", opt.action_desc, "action JSON")->required();
    ai->add_option("expr", opt.exprs, "expression")->required()->expected(1);
    CLI::App* aw = action->add_subcommand("stable-witness", "verify a stable-invariance witness");
    aw->add_option("--action", opt.action_desc, "action JSON")->required();
    aw->add_option("--n", opt.n, "subring variable count")->required();
    aw->add_option("expr", opt.exprs, "expression")->required()->expected(1);

    // theorem --job file
    CLI::App* theorem = app.add_subcommand("theorem", "run a theorem-lab job file");
    theorem->add_option("--job", opt.job_path, "job JSON path, or - for stdin")->required();

    // fuzz --suite name --seed s --count c
    CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "seeded property suites");
    fuzz_cmd->add_option("--suite", opt.suite, "suite name (see --list)");
    fuzz_cmd->add_option("--seed", opt.seed, "rng seed");
    fuzz_cmd->add_option("--count", opt.count, "instance count");
    bool list_suites = false;
    fuzz_cmd->add_flag("--list", list_suites, "list suite names");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace initforms;

        if (poly_parse->parsed()) {
            int n = resolve_nvars(opt.nvars, opt.exprs[0]);
            Json out = Json::object();
            out["nvars"] = n;
            if (opt.allow_z) {
                out["poly"] = format_zpoly(parse_zpoly(opt.exprs[0], n));
            } else {
                out["poly"] = format_poly(parse_poly(opt.exprs[0], n));
            }
            emit(out);
            return 0;
        }
        if (poly_mul->parsed()) {
            int n = opt.nvars > 0 ? opt.nvars
                                  : std::max({1, max_var_index(opt.exprs[0]), max_var_index(opt.exprs[1])});
            Poly f = parse_poly(opt.exprs[0], n);
            Poly g = parse_poly(opt.exprs[1], n);
            Json out = Json::object();
            out["product"] = format_poly(f * g);
            emit(out);
            return 0;
        }
        if (poly_div->parsed()) {
            int n = opt.nvars > 0 ? opt.nvars
                                  : std::max({1, max_var_index(opt.exprs[0]), max_var_index(opt.exprs[1])});
            Poly g = parse_poly(opt.exprs[0], n);
            Poly f = parse_poly(opt.exprs[1], n);
            auto q = exact_divide(g, f);
            Json out = Json::object();
            out["divides"] = q.has_value();
            out["quotient"] = q ? Json(format_poly(*q)) : Json(nullptr);
            emit(out);
            return 0;
        }
        if (initform->parsed()) {
            Weight w = io::weight_from_json(parse_json_text(opt.weight_literal));
            Poly f = parse_poly(opt.exprs[0], w.nvars());
            DegValue d = wdeg(f, w);
            Json out = Json::object();
            out["deg"] = d.is_minus_infinity() ? Json(nullptr) : io::group_elem_to_json(d.value());
            out["initial"] = format_poly(initial_form(f, w));
            emit(out);
            return 0;
        }
        if (nv->parsed() || ni->parsed() || nc->parsed()) {
            const std::string& expr = opt.exprs[0];
            int n = resolve_nvars(opt.nvars, expr);
            Poly f = parse_poly(expr, n);
            Json out = Json::object();
            if (nv->parsed()) {
                auto certs = hull_vertices(PointSet::support_of(f));
                Json vertices = Json::array();
                Json certificates = Json::array();
                for (const VertexCertificate& c : certs) {
                    vertices.push_back(io::exponent_to_json(c.vertex));
                    Json cj = Json::object();
                    cj["vertex"] = io::exponent_to_json(c.vertex);
                    Json wj = Json::array();
                    for (const Rational& r : c.weight) wj.push_back(rat_to_string(r));
                    cj["weight"] = wj;
                    cj["margin"] = rat_to_string(c.margin);
                    certificates.push_back(cj);
                }
                out["vertices"] = vertices;
                out["certificates"] = certificates;
                emit(out);
                return 0;
            }
            if (ni->parsed()) {
                out["intruders"] = io::exponents_to_json(intruders(f));
                emit(out);
                return 0;
            }
            CriterionReport rep = check_monomial_criterion(f);
            out["consistent"] = rep.status == Status::verified;
            out["details"] = rep.detail;
            emit(out);
            return rep.status == Status::verified ? 0 : 1;
        }
        if (av->parsed()) {
            GaAction a = io::action_from_json(parse_json_text(opt.action_desc));
            Json out = Json::object();
            out["valid"] = true;
            out["m"] = a.m();
            out["trivial"] = a.trivial();
            emit(out);
            return 0;
        }
        if (ae->parsed()) {
            LND d = io::lnd_from_json(parse_json_text(opt.action_desc));
            log_info("derivation validated, exponentiating");
            emit(io::action_to_json(lnd_exp(d)));
            return 0;
        }
        if (ai->parsed()) {
            GaAction a = io::action_from_json(parse_json_text(opt.action_desc));
            Poly f = parse_poly(opt.exprs[0], a.m());
            Json out = Json::object();
            out["invariant"] = is_invariant(a, f);
            emit(out);
            return 0;
        }
        if (aw->parsed()) {
            GaAction a = io::action_from_json(parse_json_text(opt.action_desc));
            if (opt.n < 1) throw ArityMismatch("--n must be positive");
            Poly f = parse_poly(opt.exprs[0], opt.n);
            WitnessReport rep = stable_invariant_witness(a, f, opt.n);
            Json out = Json::object();
            out["status"] = to_string(rep.status);
            const char* clause = rep.clause == WitnessClause::ok ? "ok"
                                 : rep.clause == WitnessClause::not_invariant ? "not_invariant"
                                                                              : "not_proper";
            out["clause"] = clause;
            out["details"] = rep.detail;
            emit(out);
            return rep.status == Status::verified ? 0 : 1;
        }
        if (theorem->parsed()) {
            Json job;
            if (opt.job_path == "-") {
                job = Json::parse(std::cin);
            } else {
                std::ifstream in(opt.job_path);
                if (!in) throw Error("cannot open job file: " + opt.job_path);
                job = Json::parse(in);
            }
            log_info("dispatching theorem job");
            io::JobResult r = io::run_job(job);
            emit(r.output);
            return r.exit_code;
        }
        if (fuzz_cmd->parsed()) {
            if (list_suites) {
                Json out = Json::object();
                Json names = Json::array();
                for (const std::string& s : fuzz::suite_names()) names.push_back(s);
                out["suites"] = names;
                emit(out);
                return 0;
            }
            if (opt.suite.empty()) throw Error("--suite is required (or use --list)");
            fuzz::SuiteResult r = fuzz::run_suite(opt.suite, opt.seed, opt.count);
            Json out = Json::object();
            out["schema"] = "1";
            out["suite"] = r.suite;
            out["seed"] = r.seed;
            out["count"] = r.count;
            out["failures"] = r.failures;
            Json counters = Json::object();
            for (const auto& [k, v] : r.counters) counters[k] = v;
            out["counters"] = counters;
            Json notes = Json::array();
            for (const std::string& s : r.notes) notes.push_back(s);
            out["notes"] = notes;
            emit(out);
            return r.failures == 0 ? 0 : 1;
        }
    } catch (const initforms::Error& e) {
        return emit_error(e);
    } catch (const nlohmann::json::exception& e) {
        Json out = Json::object();
        out["status"] = "error";
        out["details"] = std::string("bad JSON input: ") + e.what();
        emit(out);
        return 3;
    } catch (const std::exception& e) {
        Json out = Json::object();
        out["status"] = "error";
        out["details"] = e.what();
        emit(out);
        return 3;
    }
    return 0;
}
