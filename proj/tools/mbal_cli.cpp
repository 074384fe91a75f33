// mbal: command-line front end for the finite modal duality toolkit.
//
// Every subcommand prints one JSON report on stdout. Exit status: 0 when all
// checks pass, 1 when a violation was found, 2 on bad input.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbal/boolcore.hpp"
#include "mbal/correspondence.hpp"
#include "mbal/duality.hpp"
#include "mbal/errors.hpp"
#include "mbal/json_io.hpp"
#include "mbal/modal.hpp"
#include "mbal/suite.hpp"
#include "mbal/term.hpp"

namespace {

using namespace mbal;

constexpr std::uint64_t kDefaultSeed = 42;

struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 50;
    std::string output;

    std::string frame_path;
    std::string func_path;
    std::string expr;
    std::string variable = "a";
    std::vector<std::string> binds;
    std::vector<std::string> laws{"M", "V"};
    bool audit = false;
    std::string frame_out;

    SuiteConfig suite;
    std::size_t max_exhaustive = 4;
    std::vector<std::size_t> random_sizes;
    std::optional<std::size_t> trials;
};

std::uint64_t seed_from_env()
{
    const char* env = std::getenv("MBAL_SEED");
    if (env == nullptr || *env == '\0') {
        return kDefaultSeed;
    }
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string_view{env}.size()) {
            throw std::invalid_argument{"trailing characters"};
        }
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string{"MBAL_SEED is not an unsigned integer: "} + env);
    }
}

FramePtr require_frame(const Options& o)
{
    if (o.frame_path.empty()) {
        throw InputError("--frame is required");
    }
    return share(load_frame(o.frame_path));
}

Environment bindings(const Options& o, const FramePtr& frame)
{
    Environment env;
    for (const std::string& b : o.binds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("--bind expects name=path, got '" + b + "'");
        }
        env.insert_or_assign(b.substr(0, eq), load_func(b.substr(eq + 1), frame));
    }
    return env;
}

// The relation-induced operator, or the term given by --expr in --var.
ModalOperator select_operator(const Options& o, const FramePtr& frame)
{
    if (o.expr.empty()) {
        return ModalOperator::relation_induced(frame);
    }
    return term_operator(parse(o.expr), o.variable, frame, bindings(o, frame));
}

std::vector<Law> selected_laws(const std::vector<std::string>& names)
{
    std::vector<Law> out;
    auto add = [&](std::span<const Law> ls) { out.insert(out.end(), ls.begin(), ls.end()); };
    for (const std::string& name : names) {
        if (name == "M") {
            add(axiom_laws().subspan(0, 5));
        } else if (name == "V") {
            add(axiom_laws().subspan(5));
        } else if (name == "L") {
            add(derived_laws().subspan(0, 7));
        } else if (name == "D") {
            add(derived_laws().subspan(7));
        } else if (name == "serial") {
            add(serial_laws());
        } else if (name == "all") {
            add(axiom_laws());
            add(derived_laws());
        } else {
            out.push_back(parse_law(name));
        }
    }
    return out;
}

struct Outcome {
    Json result;
    bool ok = true;
};

Outcome cmd_apply(const Options& o, bool diamond)
{
    const FramePtr frame = require_frame(o);
    if (o.func_path.empty()) {
        throw InputError("--func is required");
    }
    const Func f = load_func(o.func_path, frame);
    const ModalOperator op = select_operator(o, frame);
    const Func out = diamond ? op.diamond(f) : op(f);
    return {Json{{"operator", op.describe()}, {"input", values_to_json(f)}, {"values", values_to_json(out)}}, true};
}

Outcome cmd_check_axioms(const Options& o)
{
    const FramePtr frame = require_frame(o);
    const ModalOperator op = select_operator(o, frame);
    const SamplePool pool = make_pool(frame, o.samples, o.seed);
    Outcome out{Json{{"operator", op.describe()}, {"verdicts", Json::array()}}, true};
    for (Law law : selected_laws(o.laws)) {
        const Verdict v = check_law(op, law, pool);
        out.ok = out.ok && v.holds_on_samples();
        out.result["verdicts"].push_back(verdict_to_json(v));
    }
    return out;
}

Outcome cmd_reconstruct(const Options& o)
{
    const FramePtr frame = require_frame(o);
    const ModalOperator op = select_operator(o, frame);
    const Frame rebuilt = o.audit ? reconstruct_relation_audited(op) : reconstruct_relation(op);
    if (!o.frame_out.empty()) {
        std::ofstream file{o.frame_out};
        if (!file) {
            throw InputError("cannot write " + o.frame_out);
        }
        file << frame_to_json(rebuilt).dump(2) << '\n';
    }
    return {Json{{"operator", op.describe()}, {"audited", o.audit}, {"frame", frame_to_json(rebuilt)}}, true};
}

Outcome cmd_roundtrip(const Options& o)
{
    const FramePtr frame = require_frame(o);
    const ModalOperator op = select_operator(o, frame);
    Outcome out{Json{{"operator", op.describe()}}, true};
    if (op.is_relation_induced()) {
        const FrameRoundtrip fr = roundtrip_frame(frame);
        out.ok = fr.equal();
        out.result["frame_roundtrip"] = frame_roundtrip_to_json(*frame, fr);
    }
    const OperatorRoundtrip r = roundtrip_operator(op, o.samples, o.seed);
    out.ok = out.ok && r.status == OperatorRoundtrip::Status::equal;
    out.result["operator_roundtrip"] = operator_roundtrip_to_json(r);
    return out;
}

Outcome cmd_classify(const Options& o)
{
    const FramePtr frame = require_frame(o);
    const ModalOperator op = select_operator(o, frame);
    const SamplePool pool = make_pool(frame, o.samples, o.seed);
    const AlgebraClassification alg = classify_algebra(op, pool);
    Json verdicts = Json::array();
    for (const SchemeVerdict& v : alg.verdicts) {
        verdicts.push_back(scheme_verdict_to_json(v));
    }
    Outcome out{Json{{"operator", op.describe()},
                     {"frame", class_set_to_json(classify_frame(*frame))},
                     {"algebra", {{"classes", class_set_to_json(alg.classes)}, {"schemes", std::move(verdicts)}}}},
                alg.forms_agree()};
    if (op.is_relation_induced()) {
        const AgreementResult agr = agreement(frame, pool);
        out.ok = out.ok && agr.agree();
        out.result["agreement"] = agreement_to_json(agr);
    }
    return out;
}

Outcome cmd_idempotents(const Options& o)
{
    const FramePtr frame = require_frame(o);
    const ModalAlgebraFin alg = idempotent_algebra(frame);
    const DiagramVerdict dv = diagram_commutes(frame);
    const MeetPreservation mp = check_meet_preservation(alg, *frame);
    Json j = diagram_to_json(*frame, alg, dv);
    j["meets_preserved"] = mp.ok();
    return {std::move(j), dv.commutes() && mp.ok()};
}

Outcome cmd_eval(const Options& o)
{
    const FramePtr frame = require_frame(o);
    if (o.expr.empty()) {
        throw InputError("--expr is required");
    }
    const TermPtr t = parse(o.expr);
    const Func v = eval(*t, bindings(o, frame), frame);
    return {Json{{"term", print(*t)}, {"values", values_to_json(v)}}, true};
}

Outcome cmd_suite(Options o)
{
    o.suite.seed = o.seed;
    o.suite.samples = o.samples;
    o.suite.set_exhaustive(o.max_exhaustive);
    if (!o.random_sizes.empty()) {
        o.suite.set_random_sizes(o.random_sizes);
    }
    if (o.trials) {
        o.suite.trials = *o.trials;
    }
    const SuiteReport r = run_suite(o.suite);
    return {suite_to_json(r), r.passed()};
}

int run(int argc, char** argv)
{
    CLI::App app{"Finite modal duality toolkit: box operators, reconstruction, correspondence"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    o.seed = seed_from_env();

    app.add_option("--seed", o.seed, "Sampling seed (default: $MBAL_SEED or 42)");
    app.add_option("--samples", o.samples, "Random functions per check")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", o.output, "Write the report here instead of stdout");

    auto frame_opt = [&](CLI::App* sub) { sub->add_option("--frame", o.frame_path, "Frame JSON file")->required(); };
    auto operator_opts = [&](CLI::App* sub) {
        sub->add_option("--expr", o.expr, "Use the term-defined operator instead of the frame's box");
        sub->add_option("--var", o.variable, "Variable of --expr that receives the input")->capture_default_str();
        sub->add_option("--bind", o.binds, "Bind a free variable: name=path")->take_all();
    };

    CLI::App* box = app.add_subcommand("box", "Apply the box operator to a function file");
    frame_opt(box);
    box->add_option("--func", o.func_path, "Function JSON file")->required();
    operator_opts(box);

    CLI::App* dia = app.add_subcommand("dia", "Apply the diamond operator to a function file");
    frame_opt(dia);
    dia->add_option("--func", o.func_path, "Function JSON file")->required();
    operator_opts(dia);

    CLI::App* check = app.add_subcommand("check-axioms", "Check law catalogs on an operator");
    frame_opt(check);
    operator_opts(check);
    check->add_option("--laws", o.laws, "Law ids or catalogs M, V, L, D, serial, all")->delimiter(',');

    CLI::App* rec = app.add_subcommand("reconstruct", "Reconstruct the relation of an operator");
    frame_opt(rec);
    operator_opts(rec);
    rec->add_flag("--audit", o.audit, "Also check against the {0,1,2} grid definition");
    rec->add_option("--frame-out", o.frame_out, "Write the reconstructed frame file here");

    CLI::App* rt = app.add_subcommand("roundtrip", "Frame and operator roundtrips");
    frame_opt(rt);
    operator_opts(rt);

    CLI::App* cls = app.add_subcommand("classify", "Frame and algebra classification with agreement");
    frame_opt(cls);
    operator_opts(cls);

    CLI::App* idem = app.add_subcommand("idempotents", "Modal algebra of idempotents against the classical box");
    frame_opt(idem);

    CLI::App* ev = app.add_subcommand("eval", "Evaluate a term");
    frame_opt(ev);
    ev->add_option("--expr", o.expr, "Term to evaluate")->required();
    ev->add_option("--bind", o.binds, "Bind a variable: name=path")->take_all();

    CLI::App* suite = app.add_subcommand("suite", "Exhaustive and randomized acceptance battery");
    suite->add_option("--max-exhaustive", o.max_exhaustive, "Every relation up to this many points")->capture_default_str();
    suite->add_option("--random-sizes", o.random_sizes, "Frame sizes for randomized trials")->delimiter(',');
    suite->add_option("--trials", o.trials, "Random instances per size");
    suite->add_option("--threads", o.suite.threads, "Worker threads")->capture_default_str();
    suite->add_option("--mutants", o.suite.mutants, "Broken operators for the axiomatization check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "box" || name == "dia") {
        outcome = cmd_apply(o, name == "dia");
    } else if (name == "check-axioms") {
        outcome = cmd_check_axioms(o);
    } else if (name == "reconstruct") {
        outcome = cmd_reconstruct(o);
    } else if (name == "roundtrip") {
        outcome = cmd_roundtrip(o);
    } else if (name == "classify") {
        outcome = cmd_classify(o);
    } else if (name == "idempotents") {
        outcome = cmd_idempotents(o);
    } else if (name == "eval") {
        outcome = cmd_eval(o);
    } else {
        outcome = cmd_suite(o);
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    Json command = Json::array();
    for (int i = 1; i < argc; ++i) {
        command.push_back(argv[i]);
    }
    const Json report{{"command", std::move(command)},
                      {"seed", o.seed},
                      {"status", outcome.ok ? "pass" : "violation"},
                      {"result", std::move(outcome.result)},
                      {"elapsed_ms", elapsed}};
    if (o.output.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::ofstream file{o.output};
        if (!file) {
            throw InputError("cannot write " + o.output);
        }
        file << report.dump(2) << '\n';
    }
    return outcome.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const mbal::InputError& e) {
        std::cerr << "mbal: input error: " << e.what() << '\n';
        return 2;
    } catch (const mbal::InvariantViolation& e) {
        std::cerr << "mbal: invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "mbal: " << e.what() << '\n';
        return 2;
    }
}
