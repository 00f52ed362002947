#ifndef QSAW_REALIZATIONS_HPP
#define QSAW_REALIZATIONS_HPP

#include "qsaw/verifier.hpp"

namespace qsaw {

/// (n-1)x(n-1) A-type Cartan matrix, all d_i = 1.
CartanData cartan_sln(int n);

/// (n-1)xn matrix of the extended strange family: sl(n) block in the first
/// n-1 columns, last column zero except a_{n-1,n} = -2.
CartanData cartan_ptilde(int n);

// --- oscillator realizations ------------------------------------------------

/// U_Q(sl(n)) on n Q-boson modes: E_i = A_i^- A_{i+1}^+, F_i = A_i^+ A_{i+1}^-,
/// H_i = -N_i + N_{i+1}, K_i = Q^{H_i}.
GeneratorBinding uq_sln(int n, const QParam& Q, int D);

/// Classical U(sl(n)) on n ordinary boson modes (e_i, f_i, h_i).
GeneratorBinding u_sln_classical(int n, int D);

/// U_q(sl(n)) generators from n k-fermion modes at a root of unity
/// (E_i = chi_i^- chi_{i+1}^+, K_i = q^{-N_i + N_{i+1}}).
GeneratorBinding uq_sln_kfermionic(int n, const QParam& q);

/// Quantum extended strange superalgebra generators on n Q-boson and
/// n Q-fermion modes (X1..X{n-1}, Y, T, D, and the odd Xn).
GeneratorBinding ptilde_q(int n, const QParam& Q, int D);

/// Classical extended strange superalgebra on ordinary bosons and fermions.
GeneratorBinding ptilde_classical(int n, int D);

// Mode-level bindings for the qboson/qfermion/kfermion suites (n modes).
GeneratorBinding qboson_chain(int n, const QParam& Q, int D);
GeneratorBinding qfermion_chain(int n, const QParam& Q);
GeneratorBinding kfermion_chain(int n, const QParam& q);

// Binding builders over pre-split mode families (shared with module limits).
// `mode_shift` is the occupation displacement of one ladder application
// (1 for plain modes, k for the block operators of a split boson).
GeneratorBinding sln_from_modes(std::span<const ModeOperators> embedded, const QParam& Q,
                                bool classical, const SpaceSpec& space, int mode_shift = 1);
GeneratorBinding ptilde_from_modes(std::span<const ModeOperators> bosons,
                                   std::span<const ModeOperators> fermions,
                                   const SpaceSpec& space, int mode_shift = 1);

/// Fully instantiated relation suites.
///   uq-sln, u-sln, pn, ptilde, ptilde-q, uq-sln-serre, ptilde-q-serre,
///   uq-sln-nilpotent, qboson, qfermion, kfermion
/// `order` is the nilpotency order (kfermion / uq-sln-nilpotent only).
std::vector<Relation> relation_suite(const std::string& name, int n, const CartanData& cartan,
                                     int order = 0);

bool is_known_suite(const std::string& name);

} // namespace qsaw

#endif
