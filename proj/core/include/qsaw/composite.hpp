#ifndef QSAW_COMPOSITE_HPP
#define QSAW_COMPOSITE_HPP

#include <map>
#include <span>
#include <string>

#include "qsaw/fock.hpp"

namespace qsaw {

struct CartanData {
    Eigen::MatrixXi matrix;        // a_ij; rectangular for the extended strange family
    std::vector<int> symmetrizers; // d_i (all 1 for sl(n))

    friend bool operator==(const CartanData& a, const CartanData& b)
    {
        return a.matrix == b.matrix && a.symmetrizers == b.symmetrizers;
    }
};

/// Named operator family over one composite space. `shifts` records the
/// occupation displacement of each generator word (diagonal generators 0,
/// bilinears 1, block operators k); the verifier derives default interior
/// margins from it.
struct GeneratorBinding {
    std::string name;
    SpaceSpec space;
    std::map<std::string, Operator> generators;
    std::map<std::string, int> shifts;
    CartanData cartan;

    const Operator& at(const std::string& symbol) const;
    bool has(const std::string& symbol) const { return generators.count(symbol) != 0; }
    int shift_of(const std::string& symbol) const;
    void bind(const std::string& symbol, Operator op, int shift = -1);
};

/// Kronecker embedding of a single-mode family into a composite space.
/// Fermionic raise/lower pick up a parity string over the fermionic modes to
/// their left (Jordan-Wigner); number operators and all bosonic/k-fermionic
/// species embed without strings.
ModeOperators embed(const ModeOperators& mode_ops, const SpaceSpec& space, int mode_index);

/// x y - (-1)^{g(x) g(y)} y x.
Operator graded_bracket(const Operator& x, const Operator& y);

Operator commutator(const Operator& x, const Operator& y);
Operator anticommutator(const Operator& x, const Operator& y);

/// Functional calculus [T]_Q on a diagonal operator with real spectrum.
Operator qnumber_of_operator(const Operator& T, const QParam& Q);

/// Diagonal 0/1 projector keeping the basis states whose every bosonic
/// occupation number is < D_mode - margin. Fermionic and k-fermionic
/// coordinates are unrestricted.
Operator interior_projector(const SpaceSpec& space, int margin);

/// Max over pairs (x in A, y in B) of ||bracket(x,y) * P||_F, with the graded
/// bracket for Odd x Odd pairs and the plain commutator otherwise.
double commutant_residual(std::span<const Operator> set_a, std::span<const Operator> set_b,
                          const Operator& projector);
double commutant_residual(std::span<const Operator> set_a, std::span<const Operator> set_b);

} // namespace qsaw

#endif
