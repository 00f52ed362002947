#ifndef QSAW_VERIFIER_HPP
#define QSAW_VERIFIER_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsaw/composite.hpp"

namespace qsaw {

// ---------------------------------------------------------------------------
// Relations DSL
//
//   relation  := IDENT ":" expr "=" expr
//   expr      := term (("+"|"-") term)*
//   term      := factor ("*" factor)*
//   factor    := base ("^" INT)?
//   base      := IDENT | NUMBER | "(" expr ")" | "comm(" expr "," expr ")"
//              | "acomm(" expr "," expr ")" | "gbr(" expr "," expr ")"
//              | "qnum(" expr ")" | "qbin(" INT "," INT ")"
//              | "Qpow(" SIGNED_RATIONAL ")"
//
// One relation per line, "#" comments, whitespace insignificant. NUMBER is a
// decimal with an optional imaginary tail written without spaces ("2", "2i",
// "1.5+0.3i"); the imaginary unit alone is spelled "1i".
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Symbol, Scalar, QPow, QNum, QBin, Sum, Product, Power, Comm, Acomm, Gbr };

    Kind kind{};
    std::string symbol;          // Symbol
    Complex scalar{};            // Scalar
    long qpow_num = 0;           // QPow exponent numerator
    long qpow_den = 1;           // QPow exponent denominator (> 0)
    int qbin_n = 0, qbin_t = 0;  // QBin
    int exponent = 1;            // Power
    std::vector<ExprPtr> args;   // children (Sum/Product operands, function args)
    std::vector<int> signs;      // Sum only: +1/-1 per operand, signs[0] == +1
};

bool expr_equal(const Expr& a, const Expr& b);

struct Relation {
    std::string name;
    ExprPtr lhs;
    ExprPtr rhs;
    // Interior exclusion depth. Unset means "derive from the binding": the
    // largest total occupation shift of any product word, diagonal symbols
    // counting zero.
    std::optional<int> margin;
};

std::vector<Relation> parse_relations(std::string_view text);

std::string print_expr(const Expr& e);
std::string print_relation(const Relation& r);

/// Margin a relation defaults to against a given binding.
int derive_margin(const Relation& rel, const GeneratorBinding& binding);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

enum class NormKind { Frobenius, Spectral };

struct EvalOptions {
    NormKind norm = NormKind::Frobenius;
    std::optional<int> margin_override;
    // Negative-control hook: multiplies the value of the perturb_index-th
    // q-coefficient node (Qpow/qbin/qnum, traversal order lhs then rhs).
    double coeff_perturbation = 1.0;
    int perturb_index = -1;
};

struct ReportEntry {
    std::string relation;
    double residual = 0.0;
    int margin = 0;
    bool pass = false;
    std::string error; // empty unless the relation itself errored
};

struct Report {
    std::string suite;
    std::string params_json; // serialized parameter object
    std::vector<ReportEntry> entries;
    double max_residual = 0.0;
    bool pass = false;
};

/// Number of q-coefficient nodes (Qpow, qbin, qnum) in lhs+rhs.
int count_qcoeff_nodes(const Relation& rel);

/// residual = ||(eval(lhs) - eval(rhs)) P|| / max(1, ||eval(lhs) P||).
ReportEntry evaluate_relation(const Relation& rel, const GeneratorBinding& binding,
                              const QParam& Q, double tol, const EvalOptions& opts = {});

/// Evaluates every relation (worker count from QSAW_THREADS, 0/unset = auto),
/// aggregates with entries sorted by relation name. An erroring relation is a
/// failed entry, not an aborted suite.
Report run_suite(const std::string& suite_name, std::span<const Relation> suite,
                 const GeneratorBinding& binding, const QParam& Q, double tol,
                 const EvalOptions& opts = {});

/// Report serialization (JSON document; residuals carry 6 significant
/// digits). `timestamp` is inserted verbatim when non-empty.
std::string report_to_json(const Report& report, const std::string& timestamp = {});

int resolve_thread_count();

} // namespace qsaw

#endif
