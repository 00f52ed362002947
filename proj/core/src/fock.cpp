#include "qsaw/fock.hpp"

#include <cmath>
#include <functional>

namespace qsaw {

bool is_bosonic(Species s) { return s == Species::QBoson || s == Species::ClassicalBoson; }

bool is_fermionic(Species s) { return s == Species::QFermion || s == Species::ClassicalFermion; }

const char* species_name(Species s)
{
    switch (s) {
        case Species::QBoson: return "qboson";
        case Species::QFermion: return "qfermion";
        case Species::KFermion: return "kfermion";
        case Species::ClassicalBoson: return "boson";
        case Species::ClassicalFermion: return "fermion";
    }
    return "?";
}

SpaceSpec::SpaceSpec(std::vector<ModeSpec> m) : modes(std::move(m))
{
    int counters[5] = {0, 0, 0, 0, 0};
    for (auto& mode : modes) {
        if (mode.dim < 1) throw DimensionTooSmall("mode dimension must be positive");
        if (mode.label == 0) mode.label = ++counters[static_cast<int>(mode.species)];
    }
}

SpaceSpec SpaceSpec::single(ModeSpec m) { return SpaceSpec(std::vector<ModeSpec>{m}); }

Eigen::Index SpaceSpec::total_dim() const
{
    Eigen::Index d = 1;
    for (const auto& m : modes) d *= m.dim;
    return d;
}

Eigen::Index SpaceSpec::dim_before(int mode_index) const
{
    Eigen::Index d = 1;
    for (int i = 0; i < mode_index; ++i) d *= modes[i].dim;
    return d;
}

Eigen::Index SpaceSpec::dim_after(int mode_index) const
{
    Eigen::Index d = 1;
    for (std::size_t i = mode_index + 1; i < modes.size(); ++i) d *= modes[i].dim;
    return d;
}

namespace {

ModeOperators ladder_mode(ModeSpec spec, const std::vector<Complex>& step, Grading ladder_grading)
{
    // step[n] is the amplitude connecting |n> and |n+1>.
    const int d = spec.dim;
    Matrix raise = Matrix::Zero(d, d);
    Matrix lower = Matrix::Zero(d, d);
    Matrix number = Matrix::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        raise(n + 1, n) = step[n];
        lower(n, n + 1) = step[n];
    }
    for (int n = 0; n < d; ++n) number(n, n) = n;
    SpaceSpec space = SpaceSpec::single(spec);
    return ModeOperators{spec,
                         Operator{std::move(raise), space, ladder_grading},
                         Operator{std::move(lower), space, ladder_grading},
                         Operator{std::move(number), space, Grading::Even}};
}

} // namespace

ModeOperators qboson_mode(int D, const QParam& Q)
{
    if (D < 2) throw DimensionTooSmall("Q-boson truncation needs D >= 2");
    std::vector<Complex> step(D - 1);
    for (int n = 0; n + 1 < D; ++n) step[n] = std::sqrt(qnumber(n + 1, Q));
    return ladder_mode(ModeSpec{Species::QBoson, D, 0, 0}, step, Grading::Even);
}

ModeOperators qfermion_mode(const QParam& Q)
{
    (void)qpow(Q, 1.0); // reject degenerate parameters up front
    std::vector<Complex> step{1.0};
    return ladder_mode(ModeSpec{Species::QFermion, 2, 0, 0}, step, Grading::Odd);
}

ModeOperators kfermion_mode(int k, const QParam& q)
{
    if (k < 2) throw InvalidOrder("k-fermion needs k >= 2");
    if (!q.is_root() || q.nilpotency != k)
        throw OrderMismatch("k-fermion order " + std::to_string(k) +
                            " does not match the parameter's nilpotency order " +
                            std::to_string(q.nilpotency));
    std::vector<Complex> step(k - 1);
    for (int s = 0; s + 1 < k; ++s) step[s] = std::sqrt(qnumber(s + 1, q));
    return ladder_mode(ModeSpec{Species::KFermion, k, k, 0}, step, Grading::Even);
}

ModeOperators classical_boson_mode(int D)
{
    if (D < 2) throw DimensionTooSmall("boson truncation needs D >= 2");
    std::vector<Complex> step(D - 1);
    for (int n = 0; n + 1 < D; ++n) step[n] = std::sqrt(double(n + 1));
    return ladder_mode(ModeSpec{Species::ClassicalBoson, D, 0, 0}, step, Grading::Even);
}

ModeOperators classical_fermion_mode()
{
    std::vector<Complex> step{1.0};
    return ladder_mode(ModeSpec{Species::ClassicalFermion, 2, 0, 0}, step, Grading::Odd);
}

double offdiagonal_norm(const Matrix& m)
{
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

namespace {

Operator diag_power_impl(const Operator& number_op,
                         const std::function<Complex(double)>& powfn)
{
    const Matrix& N = number_op.matrix;
    double scale = std::max(1.0, N.cwiseAbs().maxCoeff());
    if (offdiagonal_norm(N) > 1e-12 * scale)
        throw NotDiagonal("diag_power needs a diagonal number operator");
    Matrix out = Matrix::Zero(N.rows(), N.cols());
    for (Eigen::Index j = 0; j < N.rows(); ++j) {
        Complex nj = N(j, j);
        if (std::abs(nj.imag()) > 1e-12 * scale)
            throw NotDiagonal("diag_power needs a real spectrum");
        out(j, j) = powfn(nj.real());
    }
    return Operator{std::move(out), number_op.space, Grading::Even};
}

} // namespace

Operator diag_power(Complex base, double coeff, const Operator& number_op)
{
    return diag_power_impl(number_op, [&](double n) {
        if (coeff * n == 0.0) return Complex(1.0, 0.0);
        return std::pow(base, Complex(coeff * n, 0.0));
    });
}

Operator diag_power(const QParam& base, double coeff, const Operator& number_op)
{
    return diag_power_impl(number_op, [&](double n) { return qpow(base, coeff * n); });
}

} // namespace qsaw
