#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <thread>

#include <nlohmann/json.hpp>

#include "qsaw/verifier.hpp"

namespace qsaw {

namespace {

// scalar * (mat or identity), with an optional grading
struct Value {
    Complex scalar = 1.0;
    std::optional<Matrix> mat;
    std::optional<Grading> grading = Grading::Even;
};

struct EvalContext {
    const GeneratorBinding& binding;
    const QParam& Q;
    const EvalOptions& opts;
    int qcoeff_counter = 0;

    Complex coeff_hook(Complex v)
    {
        if (qcoeff_counter++ == opts.perturb_index) v *= opts.coeff_perturbation;
        return v;
    }
};

Matrix materialize(const Value& v, Eigen::Index dim)
{
    if (v.mat) return v.scalar == Complex(1.0) ? *v.mat : (v.scalar * (*v.mat)).eval();
    Matrix m = Matrix::Zero(dim, dim);
    m.diagonal().setConstant(v.scalar);
    return m;
}

std::optional<Grading> combine_product(std::optional<Grading> a, std::optional<Grading> b)
{
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

Value eval_expr(const Expr& e, EvalContext& ctx);

Value eval_bracket(const Expr& e, EvalContext& ctx)
{
    Value xa = eval_expr(*e.args[0], ctx);
    Value xb = eval_expr(*e.args[1], ctx);
    const Eigen::Index dim = ctx.binding.space.total_dim();
    Matrix a = materialize(xa, dim);
    Matrix b = materialize(xb, dim);
    int sign;
    if (e.kind == Expr::Kind::Comm) {
        sign = -1;
    } else if (e.kind == Expr::Kind::Acomm) {
        sign = +1;
    } else {
        if (!xa.grading || !xb.grading)
            throw GradingMissing("gbr() on an operand without a definite grading");
        sign = (*xa.grading == Grading::Odd && *xb.grading == Grading::Odd) ? +1 : -1;
    }
    Value out;
    out.mat = a * b + double(sign) * (b * a);
    out.grading = combine_product(xa.grading, xb.grading);
    return out;
}

Value eval_expr(const Expr& e, EvalContext& ctx)
{
    switch (e.kind) {
        case Expr::Kind::Symbol: {
            const Operator& op = ctx.binding.at(e.symbol);
            Value v;
            v.mat = op.matrix;
            v.grading = op.grading;
            return v;
        }
        case Expr::Kind::Scalar: {
            Value v;
            v.scalar = e.scalar;
            return v;
        }
        case Expr::Kind::QPow: {
            Value v;
            v.scalar = ctx.coeff_hook(
                qpow(ctx.Q, double(e.qpow_num) / double(e.qpow_den)));
            return v;
        }
        case Expr::Kind::QBin: {
            Value v;
            v.scalar = ctx.coeff_hook(qbinomial(e.qbin_n, e.qbin_t, ctx.Q));
            return v;
        }
        case Expr::Kind::QNum: {
            Value arg = eval_expr(*e.args[0], ctx);
            Value v;
            if (!arg.mat) {
                if (std::abs(arg.scalar.imag()) > 1e-12)
                    throw NotDiagonal("qnum() of a non-real scalar");
                v.scalar = ctx.coeff_hook(qnumber_real(arg.scalar.real(), ctx.Q));
                return v;
            }
            Operator t{materialize(arg, ctx.binding.space.total_dim()), ctx.binding.space,
                       Grading::Even};
            v.mat = ctx.coeff_hook(1.0) * qnumber_of_operator(t, ctx.Q).matrix;
            v.grading = Grading::Even;
            return v;
        }
        case Expr::Kind::Sum: {
            const Eigen::Index dim = ctx.binding.space.total_dim();
            Value first = eval_expr(*e.args[0], ctx);
            bool all_scalar = !first.mat.has_value();
            Value acc = first;
            std::vector<Value> parts{std::move(first)};
            for (std::size_t i = 1; i < e.args.size(); ++i) {
                parts.push_back(eval_expr(*e.args[i], ctx));
                all_scalar = all_scalar && !parts.back().mat.has_value();
            }
            if (all_scalar) {
                Value v;
                v.scalar = 0.0;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    v.scalar += double(e.signs[i]) * parts[i].scalar;
                return v;
            }
            Value v;
            Matrix m = Matrix::Zero(dim, dim);
            std::optional<Grading> g;
            bool g_valid = true;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                m += double(e.signs[i]) * materialize(parts[i], dim);
                if (i == 0)
                    g = parts[i].grading;
                else if (g != parts[i].grading)
                    g_valid = false;
            }
            v.mat = std::move(m);
            v.grading = g_valid ? g : std::nullopt;
            return v;
        }
        case Expr::Kind::Product: {
            Value acc = eval_expr(*e.args[0], ctx);
            for (std::size_t i = 1; i < e.args.size(); ++i) {
                Value next = eval_expr(*e.args[i], ctx);
                acc.scalar *= next.scalar;
                if (next.mat) {
                    if (acc.mat)
                        acc.mat = (*acc.mat) * (*next.mat);
                    else
                        acc.mat = std::move(next.mat);
                }
                acc.grading = combine_product(acc.grading, next.grading);
            }
            return acc;
        }
        case Expr::Kind::Power: {
            Value base = eval_expr(*e.args[0], ctx);
            Value v;
            if (!base.mat) {
                v.scalar = std::pow(base.scalar, e.exponent);
                return v;
            }
            v.scalar = std::pow(base.scalar, e.exponent);
            Matrix acc = *base.mat;
            for (int i = 1; i < e.exponent; ++i) acc = acc * (*base.mat);
            v.mat = std::move(acc);
            if (base.grading)
                v.grading = (e.exponent % 2 == 0) ? Grading::Even
                                                  : *base.grading;
            return v;
        }
        case Expr::Kind::Comm:
        case Expr::Kind::Acomm:
        case Expr::Kind::Gbr:
            return eval_bracket(e, ctx);
    }
    throw Error("unreachable expression kind");
}

int expr_shift(const Expr& e, const GeneratorBinding& binding)
{
    switch (e.kind) {
        case Expr::Kind::Symbol:
            return binding.shift_of(e.symbol);
        case Expr::Kind::Scalar:
        case Expr::Kind::QPow:
        case Expr::Kind::QBin:
        case Expr::Kind::QNum:
            return 0;
        case Expr::Kind::Sum: {
            int worst = 0;
            for (const auto& a : e.args) worst = std::max(worst, expr_shift(*a, binding));
            return worst;
        }
        case Expr::Kind::Product: {
            int total = 0;
            for (const auto& a : e.args) total += expr_shift(*a, binding);
            return total;
        }
        case Expr::Kind::Power:
            return e.exponent * expr_shift(*e.args[0], binding);
        case Expr::Kind::Comm:
        case Expr::Kind::Acomm:
        case Expr::Kind::Gbr:
            return expr_shift(*e.args[0], binding) + expr_shift(*e.args[1], binding);
    }
    return 0;
}

int count_nodes(const Expr& e)
{
    int n = (e.kind == Expr::Kind::QPow || e.kind == Expr::Kind::QBin ||
             e.kind == Expr::Kind::QNum)
                ? 1
                : 0;
    for (const auto& a : e.args) n += count_nodes(*a);
    return n;
}

double matrix_norm(const Matrix& m, NormKind norm)
{
    if (norm == NormKind::Frobenius) return m.norm();
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

} // namespace

int count_qcoeff_nodes(const Relation& rel)
{
    return count_nodes(*rel.lhs) + count_nodes(*rel.rhs);
}

int derive_margin(const Relation& rel, const GeneratorBinding& binding)
{
    return std::max(expr_shift(*rel.lhs, binding), expr_shift(*rel.rhs, binding));
}

ReportEntry evaluate_relation(const Relation& rel, const GeneratorBinding& binding,
                              const QParam& Q, double tol, const EvalOptions& opts)
{
    ReportEntry entry;
    entry.relation = rel.name;
    int margin = opts.margin_override ? *opts.margin_override
                                      : rel.margin ? *rel.margin : derive_margin(rel, binding);
    entry.margin = margin;

    Operator proj = interior_projector(binding.space, margin);
    EvalContext ctx{binding, Q, opts};
    const Eigen::Index dim = binding.space.total_dim();
    Matrix lhs = materialize(eval_expr(*rel.lhs, ctx), dim);
    Matrix rhs = materialize(eval_expr(*rel.rhs, ctx), dim);
    double num = matrix_norm((lhs - rhs) * proj.matrix, opts.norm);
    double den = std::max(1.0, matrix_norm(lhs * proj.matrix, opts.norm));
    entry.residual = num / den;
    entry.pass = entry.residual < tol;
    return entry;
}

int resolve_thread_count()
{
    int n = 0;
    if (const char* env = std::getenv("QSAW_THREADS")) n = std::atoi(env);
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

Report run_suite(const std::string& suite_name, std::span<const Relation> suite,
                 const GeneratorBinding& binding, const QParam& Q, double tol,
                 const EvalOptions& opts)
{
    Report report;
    report.suite = suite_name;
    report.entries.resize(suite.size());

    auto eval_one = [&](std::size_t i) {
        try {
            report.entries[i] = evaluate_relation(suite[i], binding, Q, tol, opts);
        } catch (const Error& err) {
            ReportEntry entry;
            entry.relation = suite[i].name;
            entry.residual = std::numeric_limits<double>::infinity();
            entry.margin = suite[i].margin.value_or(-1);
            entry.pass = false;
            entry.error = err.what();
            report.entries[i] = std::move(entry);
        }
    };

    const int workers = std::min<int>(resolve_thread_count(), static_cast<int>(suite.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < suite.size(); ++i) eval_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < suite.size(); i = next.fetch_add(1))
                    eval_one(i);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<std::size_t> order(report.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (report.entries[a].relation != report.entries[b].relation)
            return report.entries[a].relation < report.entries[b].relation;
        return a < b;
    });
    std::vector<ReportEntry> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(std::move(report.entries[i]));
    report.entries = std::move(sorted);

    report.pass = true;
    report.max_residual = 0.0;
    for (const auto& e : report.entries) {
        report.pass = report.pass && e.pass;
        if (e.error.empty()) report.max_residual = std::max(report.max_residual, e.residual);
    }
    return report;
}

namespace {

double round_sig6(double v)
{
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

} // namespace

std::string report_to_json(const Report& report, const std::string& timestamp)
{
    nlohmann::ordered_json doc;
    doc["suite"] = report.suite;
    if (!report.params_json.empty())
        doc["params"] = nlohmann::ordered_json::parse(report.params_json);
    else
        doc["params"] = nlohmann::ordered_json::object();
    if (!timestamp.empty()) doc["timestamp"] = timestamp;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json j;
        j["relation"] = e.relation;
        if (std::isfinite(e.residual))
            j["residual"] = round_sig6(e.residual);
        else
            j["residual"] = nullptr;
        j["margin"] = e.margin;
        j["pass"] = e.pass;
        if (!e.error.empty()) j["error"] = e.error;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    doc["max_residual"] = round_sig6(report.max_residual);
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

} // namespace qsaw
