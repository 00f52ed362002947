// qsaw - command-line front end for the q-oscillator superalgebra workbench.
//
// Exit status: 0 all relations pass, 1 a suite failed, 2 invalid usage or
// parameters.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsaw/limits.hpp"

namespace {

using namespace qsaw;

std::string iso8601_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void emit_report(const Report& report, const std::string& path)
{
    std::string doc = report_to_json(report, iso8601_now());
    if (path.empty() || path == "-") {
        std::cout << doc;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write report to '" + path + "'");
        out << doc;
    }
    std::cerr << "suite " << report.suite << ": " << (report.pass ? "pass" : "FAIL")
              << " (max residual " << report.max_residual << ", " << report.entries.size()
              << " relations)\n";
}

struct VerifyArgs {
    std::string suite;
    int n = 2;
    std::string q_text;
    int r = 0;
    int trunc = 4;
    double tol = 1e-10;
    std::string report_path;
    int margin = -1;
    std::string norm = "fro";
};

QParam parse_q_flag(const std::string& text)
{
    auto z = parse_complex(text);
    if (!z) throw Error("--Q expects a complex literal like 1.3 or 0.7+0.3i");
    return QParam::generic(*z); // throws DegenerateParameter for 0, +-1, low-order roots
}

struct BoundSuite {
    GeneratorBinding binding;
    std::vector<Relation> relations;
    QParam q = QParam::generic(2.0);
    nlohmann::ordered_json params;
};

BoundSuite bind_suite(const std::string& suite, int n, const std::string& q_text, int r,
                      int trunc)
{
    if (!is_known_suite(suite)) throw UnknownSuite("unknown suite '" + suite + "'");
    BoundSuite out;
    out.params["n"] = n;
    const bool classical = suite == "u-sln" || suite == "pn" || suite == "ptilde";
    const bool wants_root = suite == "kfermion" || (r > 0 && suite == "uq-sln");
    if (wants_root) {
        if (r < 2) throw InvalidOrder("suite '" + suite + "' needs --r >= 2");
        out.q = primitive_root(r);
        if (out.q.nilpotency < 2)
            throw DegenerateParameter("r = 2 gives k = 1: the k-fermion sector is trivial");
        out.params["r"] = r;
    } else if (!classical) {
        if (q_text.empty()) throw Error("suite '" + suite + "' needs --Q");
        out.q = parse_q_flag(q_text);
        out.params["Q"] = format_complex(out.q.value);
    }

    if (suite == "uq-sln" && r > 0) {
        out.binding = uq_sln_kfermionic(n, out.q);
        out.relations =
            relation_suite("uq-sln-nilpotent", n, out.binding.cartan, out.q.nilpotency);
        return out;
    }
    out.params["trunc"] = trunc;
    if (suite == "uq-sln" || suite == "uq-sln-serre") {
        out.binding = uq_sln(n, out.q, trunc);
    } else if (suite == "u-sln") {
        out.binding = u_sln_classical(n, trunc);
    } else if (suite == "pn" || suite == "ptilde") {
        out.binding = ptilde_classical(n, trunc);
    } else if (suite == "ptilde-q" || suite == "ptilde-q-serre") {
        out.binding = ptilde_q(n, out.q, trunc);
    } else if (suite == "qboson") {
        out.binding = qboson_chain(n, out.q, trunc);
    } else if (suite == "qfermion") {
        out.binding = qfermion_chain(n, out.q);
        out.params.erase("trunc");
    } else if (suite == "kfermion") {
        out.binding = kfermion_chain(n, out.q);
        out.params.erase("trunc");
    } else {
        throw UnknownSuite("suite '" + suite + "' has no CLI binding");
    }
    out.relations = relation_suite(suite, n, out.binding.cartan, out.q.nilpotency);
    return out;
}

EvalOptions eval_options(const VerifyArgs& args)
{
    EvalOptions opts;
    if (args.margin >= 0) opts.margin_override = args.margin;
    opts.norm = args.norm == "spec" ? NormKind::Spectral : NormKind::Frobenius;
    return opts;
}

int cmd_verify(const VerifyArgs& args)
{
    BoundSuite bound = bind_suite(args.suite, args.n, args.q_text, args.r, args.trunc);
    bound.params["tol"] = args.tol;
    bound.params["norm"] = args.norm;
    if (args.margin >= 0) bound.params["margin"] = args.margin;
    Report report = run_suite(args.suite, bound.relations, bound.binding, bound.q, args.tol,
                              eval_options(args));
    report.params_json = bound.params.dump();
    emit_report(report, args.report_path);
    return report.pass ? 0 : 1;
}

struct LimitArgs {
    std::string target;
    int n = 2;
    int r = 4;
    int trunc_multiple = 4;
    double eps0 = 1e-2;
    int steps = 6;
    double decay = 0.5;
    double tol = 1e-6;
    int sign_branch = 1;
    std::string report_path;
};

int cmd_limit(const LimitArgs& args)
{
    EpsilonLadder ladder;
    ladder.eps0 = args.eps0;
    ladder.steps = args.steps;
    ladder.decay = args.decay;
    ladder.sign_branch = args.sign_branch;
    const int k = nilpotency_order(args.r);
    const int D = args.trunc_multiple * k;
    Report report = args.target == "sln"
                        ? verify_sln_decomposition(args.n, args.r, D, ladder, args.tol)
                        : verify_ptilde_decomposition(args.n, args.r, D, ladder, args.tol);
    emit_report(report, args.report_path);
    return report.pass ? 0 : 1;
}

struct CheckArgs {
    std::string relations_path;
    std::string binding;
    int n = 2;
    std::string q_text;
    int r = 0;
    int trunc = 4;
    double tol = 1e-10;
    std::string report_path;
    int margin = -1;
    std::string norm = "fro";
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_check_relations(const CheckArgs& args)
{
    std::string suite = args.binding;
    int n = args.n;
    std::string q_text = args.q_text;
    int r = args.r;
    int trunc = args.trunc;
    if (suite.rfind("file:", 0) == 0) {
        // serialized binding spec: {"suite":..., "n":..., "Q":"...", "r":..., "trunc":...}
        auto spec = nlohmann::json::parse(slurp(suite.substr(5)));
        suite = spec.at("suite").get<std::string>();
        if (spec.contains("n")) n = spec["n"].get<int>();
        if (spec.contains("Q")) q_text = spec["Q"].get<std::string>();
        if (spec.contains("r")) r = spec["r"].get<int>();
        if (spec.contains("trunc")) trunc = spec["trunc"].get<int>();
    }
    BoundSuite bound = bind_suite(suite, n, q_text, r, trunc);
    std::vector<Relation> relations = parse_relations(slurp(args.relations_path));
    bound.params["tol"] = args.tol;
    bound.params["relations"] = args.relations_path;
    bound.params["binding"] = suite;
    VerifyArgs vargs;
    vargs.margin = args.margin;
    vargs.norm = args.norm;
    Report report = run_suite("check-relations", relations, bound.binding, bound.q, args.tol,
                              eval_options(vargs));
    report.params_json = bound.params.dump();
    emit_report(report, args.report_path);
    return report.pass ? 0 : 1;
}

struct PrintArgs {
    std::string suite;
    int n = 2;
    int r = 0;
};

int cmd_print_suite(const PrintArgs& args)
{
    CartanData cartan;
    if (args.suite.rfind("ptilde", 0) == 0 || args.suite == "pn")
        cartan = cartan_ptilde(args.n);
    else if (args.suite.rfind("u", 0) == 0)
        cartan = cartan_sln(args.n);
    int order = args.r > 0 ? nilpotency_order(args.r) : 0;
    for (const auto& rel : relation_suite(args.suite, args.n, cartan, order))
        std::cout << print_relation(rel) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-oscillator realizations of U_Q(sl(n)) and the quantum extended strange "
                 "superalgebra, with numerical relation verification"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "build a realization and run its relation suite");
    verify->add_option("--suite", vargs.suite,
                       "uq-sln | u-sln | pn | ptilde | ptilde-q | uq-sln-serre | "
                       "ptilde-q-serre | kfermion | qboson | qfermion")
        ->required();
    verify->add_option("--n", vargs.n, "rank parameter / number of modes");
    verify->add_option("--Q", vargs.q_text, "deformation parameter, e.g. 1.3 or 0.7+0.3i");
    verify->add_option("--r", vargs.r, "root order for root-of-unity suites");
    verify->add_option("--trunc", vargs.trunc, "boson truncation dimension D");
    verify->add_option("--tol", vargs.tol, "residual tolerance (default 1e-10)");
    verify->add_option("--report", vargs.report_path, "report file (default stdout)");
    verify->add_option("--margin", vargs.margin, "interior margin override");
    verify->add_option("--norm", vargs.norm, "fro | spec")
        ->check(CLI::IsMember({"fro", "spec"}));

    LimitArgs largs;
    CLI::App* limit = app.add_subcommand("limit", "certify a Q -> q decomposition");
    limit->add_option("--target", largs.target, "sln | ptilde")
        ->required()
        ->check(CLI::IsMember({"sln", "ptilde"}));
    limit->add_option("--n", largs.n, "rank parameter");
    limit->add_option("--r", largs.r, "root order (q = exp(2 pi i / r))")->required();
    limit->add_option("--trunc-multiple", largs.trunc_multiple, "D = multiple * k");
    limit->add_option("--eps0", largs.eps0, "initial ladder offset (default 1e-2)");
    limit->add_option("--steps", largs.steps, "ladder length (default 6)");
    limit->add_option("--decay", largs.decay, "ladder decay factor (default 0.5)");
    limit->add_option("--sign-branch", largs.sign_branch, "+1 or -1 exponent branch")
        ->check(CLI::IsMember({1, -1}));
    limit->add_option("--tol", largs.tol, "residual tolerance (default 1e-6)");
    limit->add_option("--report", largs.report_path, "report file (default stdout)");

    CheckArgs cargs;
    CLI::App* check = app.add_subcommand("check-relations", "run a relations DSL file");
    check->add_option("--relations", cargs.relations_path, "DSL file, one relation per line")
        ->required();
    check->add_option("--binding", cargs.binding, "suite id or file:PATH of a binding spec")
        ->required();
    check->add_option("--n", cargs.n, "rank parameter / number of modes");
    check->add_option("--Q", cargs.q_text, "deformation parameter");
    check->add_option("--r", cargs.r, "root order");
    check->add_option("--trunc", cargs.trunc, "boson truncation dimension D");
    check->add_option("--tol", cargs.tol, "residual tolerance (default 1e-10)");
    check->add_option("--report", cargs.report_path, "report file (default stdout)");
    check->add_option("--margin", cargs.margin, "interior margin override");
    check->add_option("--norm", cargs.norm, "fro | spec")
        ->check(CLI::IsMember({"fro", "spec"}));

    PrintArgs pargs;
    CLI::App* print = app.add_subcommand("print-suite", "print a relation suite in the DSL");
    print->add_option("--suite", pargs.suite, "suite id")->required();
    print->add_option("--n", pargs.n, "rank parameter / number of modes");
    print->add_option("--r", pargs.r, "root order (kfermion / nilpotency suites)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vargs);
        if (limit->parsed()) return cmd_limit(largs);
        if (check->parsed()) return cmd_check_relations(cargs);
        if (print->parsed()) return cmd_print_suite(pargs);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
