#ifndef QSAW_QARITH_HPP
#define QSAW_QARITH_HPP

#include <complex>
#include <optional>
#include <string>

#include "qsaw/errors.hpp"

namespace qsaw {

using Complex = std::complex<double>;

/// Deformation parameter. Either a generic complex number (away from the
/// degenerate values 0, +-1 and from low-order roots of unity) or a primitive
/// root of unity exp(2*pi*i/r) together with its nilpotency order k, the
/// smallest positive integer with [k]_q = 0 (k = r for odd r, r/2 for even r).
struct QParam {
    enum class Kind { Generic, RootOfUnity };

    Complex value{};
    Kind kind = Kind::Generic;
    int root_order = 0;  // r, RootOfUnity only
    int nilpotency = 0;  // k, RootOfUnity only

    static QParam generic(Complex v);
    static QParam root_of_unity(int r);

    bool is_root() const { return kind == Kind::RootOfUnity; }
};

// Maximal root order screened for when validating a Generic parameter.
inline constexpr int kGenericRootGuard = 64;

/// Smallest k >= 1 with [k]_{exp(2*pi*i/r)} = 0.
int nilpotency_order(int r);

/// QParam at exp(2*pi*i/r), r >= 2. r = 2 gives the degenerate k = 1.
QParam primitive_root(int r);

/// [t]_Q = (Q^t - Q^{-t}) / (Q - Q^{-1}).
Complex qnumber(long t, const QParam& Q);

/// Real-argument q-number, used by the operator functional calculus.
Complex qnumber_real(double t, const QParam& Q);

/// [t]_Q! = [t][t-1]...[1], with [0]! = 1.
Complex qfactorial(long t, const QParam& Q);

/// [n over t]_Q = [n]! / ([t]! [n-t]!).
Complex qbinomial(long n, long t, const QParam& Q);

/// Q^c with the principal branch; root-of-unity parameters stay exactly on
/// the unit circle.
Complex qpow(const QParam& Q, double c);

/// Parses "a", "ai", "a+bi", "a-bi" (no spaces). Returns nullopt on garbage.
std::optional<Complex> parse_complex(const std::string& text);

std::string format_complex(Complex z);

} // namespace qsaw

#endif
