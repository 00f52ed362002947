#include "qsaw/composite.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qsaw {

const Operator& GeneratorBinding::at(const std::string& symbol) const
{
    auto it = generators.find(symbol);
    if (it == generators.end())
        throw UnboundSymbol("symbol '" + symbol + "' is not bound in binding '" + name + "'");
    return it->second;
}

int GeneratorBinding::shift_of(const std::string& symbol) const
{
    auto it = shifts.find(symbol);
    if (it != shifts.end()) return it->second;
    // Fallback: diagonal generators do not displace occupations.
    const Operator& op = at(symbol);
    double scale = std::max(1.0, op.matrix.cwiseAbs().maxCoeff());
    return offdiagonal_norm(op.matrix) <= 1e-12 * scale ? 0 : 1;
}

void GeneratorBinding::bind(const std::string& symbol, Operator op, int shift)
{
    if (shift >= 0) shifts[symbol] = shift;
    generators.insert_or_assign(symbol, std::move(op));
}

namespace {

Matrix kron_embed(const Matrix& op, const SpaceSpec& space, int mode_index,
                  bool with_parity_string)
{
    const auto& modes = space.modes;
    Matrix result = Matrix::Identity(1, 1);
    for (int i = 0; i < static_cast<int>(modes.size()); ++i) {
        Matrix factor;
        if (i == mode_index) {
            factor = op;
        } else if (with_parity_string && i < mode_index && is_fermionic(modes[i].species)) {
            // diag(+1,-1) parity on each fermionic mode to the left
            factor = Matrix::Identity(modes[i].dim, modes[i].dim);
            for (int n = 1; n < modes[i].dim; n += 2) factor(n, n) = -1.0;
        } else {
            factor = Matrix::Identity(modes[i].dim, modes[i].dim);
        }
        result = Eigen::kroneckerProduct(result, factor).eval();
    }
    return result;
}

} // namespace

ModeOperators embed(const ModeOperators& mode_ops, const SpaceSpec& space, int mode_index)
{
    if (mode_index < 0 || mode_index >= static_cast<int>(space.modes.size()))
        throw IndexOutOfRange("embed: mode index " + std::to_string(mode_index) +
                              " outside space with " + std::to_string(space.modes.size()) +
                              " modes");
    const ModeSpec& slot = space.modes[mode_index];
    const ModeSpec& src = mode_ops.mode;
    if (slot.species != src.species || slot.dim != src.dim || slot.order != src.order)
        throw SpeciesMismatch(std::string("embed: mode operators of species ") +
                              species_name(src.species) + " do not fit slot " +
                              std::to_string(mode_index) + " (" + species_name(slot.species) +
                              ")");
    const bool strings = is_fermionic(src.species);
    ModeOperators out;
    out.mode = slot;
    out.raise = Operator{kron_embed(mode_ops.raise.matrix, space, mode_index, strings), space,
                         mode_ops.raise.grading};
    out.lower = Operator{kron_embed(mode_ops.lower.matrix, space, mode_index, strings), space,
                         mode_ops.lower.grading};
    out.number = Operator{kron_embed(mode_ops.number.matrix, space, mode_index, false), space,
                          Grading::Even};
    return out;
}

namespace {

void require_same_space(const Operator& x, const Operator& y, const char* what)
{
    if (!(x.space == y.space))
        throw SpaceMismatch(std::string(what) + ": operands live on different spaces");
}

} // namespace

Operator commutator(const Operator& x, const Operator& y)
{
    require_same_space(x, y, "commutator");
    return Operator{x.matrix * y.matrix - y.matrix * x.matrix, x.space, x.grading + y.grading};
}

Operator anticommutator(const Operator& x, const Operator& y)
{
    require_same_space(x, y, "anticommutator");
    return Operator{x.matrix * y.matrix + y.matrix * x.matrix, x.space, x.grading + y.grading};
}

Operator graded_bracket(const Operator& x, const Operator& y)
{
    require_same_space(x, y, "graded_bracket");
    const bool both_odd = x.grading == Grading::Odd && y.grading == Grading::Odd;
    return both_odd ? anticommutator(x, y) : commutator(x, y);
}

Operator qnumber_of_operator(const Operator& T, const QParam& Q)
{
    const Matrix& m = T.matrix;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (offdiagonal_norm(m) > 1e-12 * scale)
        throw NotDiagonal("qnumber_of_operator needs a diagonal operator");
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        Complex t = m(j, j);
        if (std::abs(t.imag()) > 1e-12 * scale)
            throw NotDiagonal("qnumber_of_operator needs a real spectrum");
        out(j, j) = qnumber_real(t.real(), Q);
    }
    return Operator{std::move(out), T.space, Grading::Even};
}

Operator interior_projector(const SpaceSpec& space, int margin)
{
    if (margin < 0) throw MarginTooLarge("margin must be non-negative");
    for (const auto& m : space.modes)
        if (is_bosonic(m.species) && margin >= m.dim)
            throw MarginTooLarge("margin " + std::to_string(margin) +
                                 " >= bosonic mode dimension " + std::to_string(m.dim));
    const Eigen::Index dim = space.total_dim();
    Matrix proj = Matrix::Zero(dim, dim);
    const int nmodes = static_cast<int>(space.modes.size());
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        Eigen::Index rest = idx;
        bool keep = true;
        for (int i = nmodes - 1; i >= 0; --i) {
            const auto& mode = space.modes[i];
            int occ = static_cast<int>(rest % mode.dim);
            rest /= mode.dim;
            if (is_bosonic(mode.species) && occ >= mode.dim - margin) {
                keep = false;
                break;
            }
        }
        if (keep) proj(idx, idx) = 1.0;
    }
    return Operator{std::move(proj), space, Grading::Even};
}

double commutant_residual(std::span<const Operator> set_a, std::span<const Operator> set_b,
                          const Operator& projector)
{
    double worst = 0.0;
    for (const auto& x : set_a) {
        for (const auto& y : set_b) {
            require_same_space(x, y, "commutant_residual");
            const bool both_odd = x.grading == Grading::Odd && y.grading == Grading::Odd;
            Matrix br = x.matrix * y.matrix -
                        (both_odd ? -1.0 : 1.0) * (y.matrix * x.matrix);
            worst = std::max(worst, (br * projector.matrix).norm());
        }
    }
    return worst;
}

double commutant_residual(std::span<const Operator> set_a, std::span<const Operator> set_b)
{
    if (set_a.empty() || set_b.empty()) return 0.0;
    Operator identity{Matrix::Identity(set_a[0].matrix.rows(), set_a[0].matrix.cols()),
                      set_a[0].space, Grading::Even};
    return commutant_residual(set_a, set_b, identity);
}

} // namespace qsaw
