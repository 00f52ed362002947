#include <cmath>
#include <sstream>

#include "qsaw/limits.hpp"

namespace qsaw {

namespace {

// Neville tableau: polynomial extrapolation of samples[j] = f(nodes[j]) to 0.
// Also reports the entrywise magnitude of the last correction.
std::pair<Matrix, double> neville_to_zero(const std::vector<double>& nodes,
                                          std::vector<Matrix> samples)
{
    const std::size_t n = nodes.size();
    if (n == 0) throw ExtrapolationDiverged("empty epsilon ladder");
    if (n == 1) return {samples[0], 0.0};
    Matrix previous = samples[0];
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t j = 0; j + m < n; ++j) {
            // P_{j..j+m}(0) = P_{j+1..j+m} + x_{j+m} (P_{j+1..j+m} - P_{j..j+m-1})
            //                               / (x_j - x_{j+m})
            samples[j] = samples[j + 1] +
                         (samples[j + 1] - samples[j]) * (nodes[j + m] / (nodes[j] - nodes[j + m]));
        }
        if (m == n - 2) previous = samples[0];
    }
    double err = (samples[0] - previous).cwiseAbs().maxCoeff();
    return {samples[0], err};
}

Matrix matrix_power(const Matrix& m, int k)
{
    Matrix acc = Matrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

std::string ladder_params_json(int n, int r, int D, const EpsilonLadder& ladder, double tol,
                               const std::string& target)
{
    std::ostringstream out;
    out << "{\"target\":\"" << target << "\",\"n\":" << n << ",\"r\":" << r << ",\"trunc\":" << D
        << ",\"tol\":" << tol << ",\"ladder\":{\"eps0\":" << ladder.eps0
        << ",\"steps\":" << ladder.steps << ",\"decay\":" << ladder.decay
        << ",\"sign_branch\":" << ladder.sign_branch << "}}";
    return out.str();
}

void prefix_entries(Report& from, const std::string& prefix, Report& into)
{
    for (auto& e : from.entries) {
        e.relation = prefix + e.relation;
        into.entries.push_back(std::move(e));
    }
}

} // namespace

SplitBoson split_boson(int D, int r, const EpsilonLadder& ladder)
{
    const int k = nilpotency_order(r);
    if (k < 2)
        throw DegenerateParameter("r = " + std::to_string(r) +
                                  " gives k = 1; the k-fermion sector is trivial");
    if (D % k != 0)
        throw TruncationNotMultiple("D = " + std::to_string(D) + " is not a multiple of k = " +
                                    std::to_string(k));
    if (D < 2 * k) throw DimensionTooSmall("splitting needs D >= 2k");
    if (ladder.steps < 2) throw ExtrapolationDiverged("ladder needs at least 2 steps");

    const QParam q = primitive_root(r);
    const double sign = ladder.sign_branch >= 0 ? 1.0 : -1.0;

    // a^- = Q^{s k N/2} (A^-)^k / sqrt([k]_Q!),  a^+ = (A^+)^k Q^{s k N/2} / sqrt([k]_Q!)
    std::vector<double> nodes(ladder.steps);
    std::vector<Matrix> lower_samples(ladder.steps), raise_samples(ladder.steps);
    for (int j = 0; j < ladder.steps; ++j) {
        const double eps = ladder.eps0 * std::pow(ladder.decay, j);
        nodes[j] = eps;
        QParam Qj = QParam::generic(q.value * std::exp(eps));
        ModeOperators mode = qboson_mode(D, Qj);
        Complex norm = std::sqrt(qfactorial(k, Qj));
        Matrix dress = diag_power(Qj.value, sign * 0.5 * k, mode.number).matrix;
        lower_samples[j] = dress * matrix_power(mode.lower.matrix, k) / norm;
        raise_samples[j] = matrix_power(mode.raise.matrix, k) * dress / norm;
    }
    auto [lower, err_lower] = neville_to_zero(nodes, std::move(lower_samples));
    auto [raise, err_raise] = neville_to_zero(nodes, std::move(raise_samples));
    const double err = std::max(err_lower, err_raise);
    if (err > ladder.divergence_tol)
        throw ExtrapolationDiverged("extrapolants disagree by " + std::to_string(err));

    // N_a from the extrapolated a^+ a^-: diagonal, near-integer spectrum n = km+s -> m
    Matrix prod = raise * lower;
    Matrix number = Matrix::Zero(D, D);
    for (int j = 0; j < D; ++j) {
        Complex v = prod(j, j);
        double rounded = std::round(v.real());
        if (std::abs(v - Complex(rounded, 0.0)) > 1e-6)
            throw NonIntegerSpectrum("a^+ a^- diagonal entry " + std::to_string(j) +
                                     " is not near an integer");
        if (std::abs(rounded - j / k) > 0.5)
            throw NonIntegerSpectrum("a^+ a^- spectrum does not follow n = k m + s");
        number(j, j) = rounded;
    }

    SpaceSpec space = SpaceSpec::single(ModeSpec{Species::QBoson, D, 0, 0});
    SplitBoson split;
    split.k = k;
    split.extrapolation_error = err;
    split.classical.mode = space.modes[0];
    split.classical.raise = Operator{std::move(raise), space, Grading::Even};
    split.classical.lower = Operator{std::move(lower), space, Grading::Even};
    split.classical.number = Operator{number, space, Grading::Even};

    // chi^+- = A^+-(q) q^{-s k N_a / 2}, exact at the root; N_chi = N_A - k N_a
    ModeOperators at_root = qboson_mode(D, q);
    Matrix chi_dress = diag_power(q, -sign * 0.5 * k, split.classical.number).matrix;
    split.kfermionic.mode = space.modes[0];
    split.kfermionic.raise = Operator{at_root.raise.matrix * chi_dress, space, Grading::Even};
    split.kfermionic.lower = Operator{at_root.lower.matrix * chi_dress, space, Grading::Even};
    split.kfermionic.number =
        Operator{at_root.number.matrix - double(k) * number, space, Grading::Even};
    return split;
}

ModeOperators dress_fermion(const ModeOperators& qferm, const QParam& q)
{
    if (qferm.mode.species != Species::QFermion)
        throw SpeciesMismatch("dress_fermion expects a Q-fermion mode");
    Matrix half = diag_power(q, -0.5, qferm.number).matrix;
    ModeOperators out = qferm;
    out.mode.species = Species::ClassicalFermion;
    out.lower = Operator{half * qferm.lower.matrix, qferm.lower.space, Grading::Odd};
    out.raise = Operator{qferm.raise.matrix * half, qferm.raise.space, Grading::Odd};
    return out;
}

namespace {

struct SplitChain {
    SpaceSpec space;
    std::vector<ModeOperators> classical;
    std::vector<ModeOperators> kfermionic;
    int k = 0;
};

// n independently split Q-boson modes embedded into one composite space;
// `extra_modes` appends fermionic slots for the strange-superalgebra case.
SplitChain split_chain(int n, int r, int D, const EpsilonLadder& ladder,
                       const std::vector<ModeSpec>& extra_modes)
{
    SplitBoson split = split_boson(D, r, ladder); // one mode, reused for all
    std::vector<ModeSpec> modes(n, ModeSpec{Species::QBoson, D, 0, 0});
    modes.insert(modes.end(), extra_modes.begin(), extra_modes.end());
    SplitChain chain;
    chain.space = SpaceSpec(std::move(modes));
    chain.k = split.k;
    for (int i = 0; i < n; ++i) {
        chain.classical.push_back(embed(split.classical, chain.space, i));
        chain.kfermionic.push_back(embed(split.kfermionic, chain.space, i));
    }
    return chain;
}

std::vector<Operator> collect(const GeneratorBinding& binding,
                              const std::vector<std::string>& symbols)
{
    std::vector<Operator> out;
    for (const auto& s : symbols) out.push_back(binding.at(s));
    return out;
}

} // namespace

Report verify_sln_decomposition(int n, int r, int D, const EpsilonLadder& ladder, double tol)
{
    if (n < 2) throw InvalidRank("decomposition needs n >= 2");
    SplitChain chain = split_chain(n, r, D, ladder, {});
    const QParam q = primitive_root(r);

    GeneratorBinding classical =
        sln_from_modes(chain.classical, q, /*classical=*/true, chain.space, chain.k);
    GeneratorBinding deformed =
        sln_from_modes(chain.kfermionic, q, /*classical=*/false, chain.space, 1);

    Report cl = run_suite("u-sln", relation_suite("u-sln", n, classical.cartan), classical,
                          QParam::generic(2.0), tol);
    Report qr = run_suite("uq-sln-nilpotent",
                          relation_suite("uq-sln-nilpotent", n, deformed.cartan, chain.k),
                          deformed, q, tol);

    std::vector<std::string> cl_symbols, q_symbols;
    for (int i = 1; i < n; ++i) {
        for (const char* p : {"e", "f", "h"}) cl_symbols.push_back(p + std::to_string(i));
        for (const char* p : {"E", "F", "K"}) q_symbols.push_back(p + std::to_string(i));
    }
    Operator proj = interior_projector(chain.space, chain.k + 1);
    double cross =
        commutant_residual(collect(classical, cl_symbols), collect(deformed, q_symbols), proj);

    Report report;
    report.suite = "limit-sln";
    report.params_json = ladder_params_json(n, r, D, ladder, tol, "sln");
    prefix_entries(cl, "cl:", report);
    prefix_entries(qr, "q:", report);
    ReportEntry commutant;
    commutant.relation = "commutant";
    commutant.residual = cross;
    commutant.margin = chain.k + 1;
    commutant.pass = cross < tol;
    report.entries.push_back(std::move(commutant));
    std::sort(report.entries.begin(), report.entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.relation < b.relation; });
    report.pass = true;
    for (const auto& e : report.entries) {
        report.pass = report.pass && e.pass;
        if (e.error.empty()) report.max_residual = std::max(report.max_residual, e.residual);
    }
    return report;
}

Report verify_ptilde_decomposition(int n, int r, int D, const EpsilonLadder& ladder, double tol)
{
    if (n < 2) throw InvalidRank("decomposition needs n >= 2");
    std::vector<ModeSpec> fermion_modes(n, ModeSpec{Species::QFermion, 2, 0, 0});
    SplitChain chain = split_chain(n, r, D, ladder, fermion_modes);
    const QParam q = primitive_root(r);

    ModeOperators fermion_proto = dress_fermion(qfermion_mode(q), q);
    // dressed fermions keep QFermion slots in the space: restore the species tag
    fermion_proto.mode.species = Species::QFermion;
    std::vector<ModeOperators> fermions;
    for (int i = 0; i < n; ++i) fermions.push_back(embed(fermion_proto, chain.space, n + i));

    GeneratorBinding classical =
        ptilde_from_modes(chain.classical, fermions, chain.space, chain.k);
    GeneratorBinding deformed =
        sln_from_modes(chain.kfermionic, q, /*classical=*/false, chain.space, 1);

    Report cl = run_suite("ptilde", relation_suite("ptilde", n, classical.cartan), classical,
                          QParam::generic(2.0), tol);
    Report qr = run_suite("uq-sln-nilpotent",
                          relation_suite("uq-sln-nilpotent", n, deformed.cartan, chain.k),
                          deformed, q, tol);

    std::vector<std::string> cl_symbols, q_symbols;
    for (int i = 1; i < n; ++i) {
        for (const char* p : {"X", "Y", "T"}) cl_symbols.push_back(p + std::to_string(i));
        for (const char* p : {"E", "F", "K"}) q_symbols.push_back(p + std::to_string(i));
    }
    cl_symbols.push_back("X" + std::to_string(n));
    cl_symbols.push_back("D");
    Operator proj = interior_projector(chain.space, chain.k + 1);
    double cross =
        commutant_residual(collect(deformed, q_symbols), collect(classical, cl_symbols), proj);

    Report report;
    report.suite = "limit-ptilde";
    report.params_json = ladder_params_json(n, r, D, ladder, tol, "ptilde");
    prefix_entries(cl, "cl:", report);
    prefix_entries(qr, "q:", report);
    ReportEntry commutant;
    commutant.relation = "commutant";
    commutant.residual = cross;
    commutant.margin = chain.k + 1;
    commutant.pass = cross < tol;
    report.entries.push_back(std::move(commutant));
    std::sort(report.entries.begin(), report.entries.end(),
              [](const ReportEntry& a, const ReportEntry& b) { return a.relation < b.relation; });
    report.pass = true;
    for (const auto& e : report.entries) {
        report.pass = report.pass && e.pass;
        if (e.error.empty()) report.max_residual = std::max(report.max_residual, e.residual);
    }
    return report;
}

} // namespace qsaw
