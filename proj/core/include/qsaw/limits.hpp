#ifndef QSAW_LIMITS_HPP
#define QSAW_LIMITS_HPP

#include "qsaw/realizations.hpp"

namespace qsaw {

/// Geometric epsilon ladder for the Q -> q limit: Q_j = q * exp(eps0 * decay^j),
/// j = 0..steps-1, extrapolated to eps = 0 by a Neville tableau.
struct EpsilonLadder {
    double eps0 = 1e-2;
    int steps = 6;
    double decay = 0.5;
    // Entrywise disagreement of the last two tableau stages above which the
    // limit is declared divergent.
    double divergence_tol = 1e-4;
    // Sign branch of the Q^{+-kN/2} dressing; the chi dressing flips with it.
    int sign_branch = +1;
};

struct SplitBoson {
    ModeOperators classical;   // a^+-, N_a (integer block spectrum)
    ModeOperators kfermionic;  // chi^+-, N_chi = N_A - k N_a
    int k = 0;
    double extrapolation_error = 0.0;
};

/// Splits one D-dimensional Q-boson at q = exp(2 pi i / r) into a classical
/// boson (extrapolated) and a k-fermion (exact at q). D must be a multiple of
/// k with D >= 2k.
SplitBoson split_boson(int D, int r, const EpsilonLadder& ladder);

/// phi^- = q^{-M/2} Phi^-, phi^+ = Phi^+ q^{-M/2}: the dressed family
/// satisfies the ordinary fermion algebra.
ModeOperators dress_fermion(const ModeOperators& qferm, const QParam& q);

/// Certifies lim_{Q->q} U_Q(sl(n)) = U_q(sl(n)) x U(sl(n)): classical suite on
/// (e,f,h), root suite (with nilpotency in place of Serre) on (E,F,K), and the
/// cross-commutant, all in one Report.
Report verify_sln_decomposition(int n, int r, int D, const EpsilonLadder& ladder, double tol);

/// Certifies lim_{Q->q} P~_Q(n) = U_q(sl(n)) x P~(n).
Report verify_ptilde_decomposition(int n, int r, int D, const EpsilonLadder& ladder, double tol);

} // namespace qsaw

#endif
