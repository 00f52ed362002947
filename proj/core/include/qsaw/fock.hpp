#ifndef QSAW_FOCK_HPP
#define QSAW_FOCK_HPP

#include <vector>

#include <Eigen/Dense>

#include "qsaw/qarith.hpp"

namespace qsaw {

using Matrix = Eigen::MatrixXcd;

enum class Species { QBoson, QFermion, KFermion, ClassicalBoson, ClassicalFermion };

bool is_bosonic(Species s);    // QBoson or ClassicalBoson (truncated ladders)
bool is_fermionic(Species s);  // QFermion or ClassicalFermion (parity strings)

const char* species_name(Species s);

struct ModeSpec {
    Species species{};
    int dim = 0;    // D for bosons, 2 for fermions, k for k-fermions
    int order = 0;  // k for KFermion, otherwise 0
    int label = 0;  // 1-based index among modes of the same statistics

    friend bool operator==(const ModeSpec&, const ModeSpec&) = default;
};

/// Ordered list of modes defining a tensor-product Fock space; mode 1 is the
/// slowest-varying Kronecker factor.
struct SpaceSpec {
    std::vector<ModeSpec> modes;

    SpaceSpec() = default;
    explicit SpaceSpec(std::vector<ModeSpec> m);
    static SpaceSpec single(ModeSpec m);

    Eigen::Index total_dim() const;
    // Dimension of the Kronecker factors strictly before / after mode i.
    Eigen::Index dim_before(int mode_index) const;
    Eigen::Index dim_after(int mode_index) const;

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

enum class Grading { Even, Odd };

inline Grading operator+(Grading a, Grading b)
{
    return (a == b) ? Grading::Even : Grading::Odd;
}

struct Operator {
    Matrix matrix;
    SpaceSpec space;
    Grading grading = Grading::Even;
};

struct ModeOperators {
    ModeSpec mode;
    Operator raise;
    Operator lower;
    Operator number;
};

/// Q-boson on a D-dimensional truncated Fock space:
///   A^-|n> = sqrt([n]_Q)|n-1>,  A^+|n> = sqrt([n+1]_Q)|n+1>,  A^+|D-1> = 0.
ModeOperators qboson_mode(int D, const QParam& Q);

/// Two-dimensional Q-fermion; the matrices satisfy both sign branches of the
/// deformed relations exactly.
ModeOperators qfermion_mode(const QParam& Q);

/// k-dimensional k-fermion at a root of unity q with q.nilpotency == k.
/// Identical matrix elements to a Q-boson at q truncated at k; the truncation
/// is exact because [k]_q = 0.
ModeOperators kfermion_mode(int k, const QParam& q);

ModeOperators classical_boson_mode(int D);
ModeOperators classical_fermion_mode();

/// Diagonal operator with entries base^(coeff * n_j) (principal branch) where
/// n_j runs over the spectrum of number_op.
Operator diag_power(Complex base, double coeff, const Operator& number_op);
Operator diag_power(const QParam& base, double coeff, const Operator& number_op);

/// Max |off-diagonal| entry; used for NotDiagonal checks.
double offdiagonal_norm(const Matrix& m);

} // namespace qsaw

#endif
