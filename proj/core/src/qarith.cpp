#include "qsaw/qarith.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qsaw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// True when z sits on the unit circle at a root of unity of order <= bound.
bool is_low_order_root(Complex z, int bound)
{
    if (!near(std::abs(z), 1.0)) return false;
    Complex p = z;
    for (int m = 1; m <= bound; ++m) {
        if (near(p.real(), 1.0) && near(p.imag(), 0.0)) return true;
        p *= z;
    }
    return false;
}

} // namespace

QParam QParam::generic(Complex v)
{
    if (v == Complex(0.0, 0.0))
        throw DegenerateParameter("Q = 0 is not a valid deformation parameter");
    if (near(v.imag(), 0.0) && (near(v.real(), 1.0) || near(v.real(), -1.0)))
        throw DegenerateParameter("Q = +-1 is rejected; use the classical realizations instead");
    if (is_low_order_root(v, kGenericRootGuard))
        throw DegenerateParameter(
            "generic Q must not be a root of unity of order <= " + std::to_string(kGenericRootGuard) +
            "; use primitive_root(r) for root-of-unity work");
    QParam q;
    q.value = v;
    q.kind = Kind::Generic;
    return q;
}

int nilpotency_order(int r)
{
    if (r < 2) throw InvalidOrder("root order must satisfy r >= 2, got " + std::to_string(r));
    // [k]_q = 0 iff r | 2k; the smallest positive solution.
    return (r % 2 == 0) ? r / 2 : r;
}

QParam QParam::root_of_unity(int r)
{
    int k = nilpotency_order(r); // validates r
    QParam q;
    q.value = std::polar(1.0, kTwoPi / r);
    q.kind = Kind::RootOfUnity;
    q.root_order = r;
    q.nilpotency = k;
    return q;
}

QParam primitive_root(int r) { return QParam::root_of_unity(r); }

namespace {

void require_nondegenerate(const QParam& Q)
{
    if (Q.is_root()) {
        if (Q.root_order < 2)
            throw DegenerateParameter("root-of-unity parameter with invalid order");
        return; // exp(2 pi i / r), r >= 2 is never 0 or +1; r = 2 gives -1
    }
    if (Q.value == Complex(0.0, 0.0) || near(std::abs(Q.value - 1.0), 0.0) ||
        near(std::abs(Q.value + 1.0), 0.0))
        throw DegenerateParameter("Q in {0, 1, -1} makes q-numbers degenerate");
}

} // namespace

Complex qnumber_real(double t, const QParam& Q)
{
    require_nondegenerate(Q);
    if (Q.is_root()) {
        if (Q.root_order == 2)
            throw DegenerateParameter("q = -1 (r = 2) has a vanishing q-number denominator");
        // (q^t - q^-t)/(q - q^-1) = sin(2 pi t / r) / sin(2 pi / r), real.
        const double r = Q.root_order;
        double phase = t / r - std::floor(t / r); // reduce before the sine
        if (phase == 0.5 || phase == 0.0) return 0.0;
        return std::sin(kTwoPi * phase) / std::sin(kTwoPi / r);
    }
    Complex p = std::pow(Q.value, t);
    return (p - 1.0 / p) / (Q.value - 1.0 / Q.value);
}

Complex qnumber(long t, const QParam& Q)
{
    require_nondegenerate(Q);
    if (t == 0) return 0.0;
    if (Q.is_root()) {
        if (Q.root_order == 2)
            throw DegenerateParameter("q = -1 (r = 2) has a vanishing q-number denominator");
        const long r = Q.root_order;
        long t2 = ((2 * t) % r + r) % r;
        if (t2 == 0) return 0.0; // exact: r | 2t
        long tr = (t % r + r) % r;
        return std::sin(kTwoPi * tr / r) / std::sin(kTwoPi / r);
    }
    Complex p = std::pow(Q.value, static_cast<double>(t));
    return (p - 1.0 / p) / (Q.value - 1.0 / Q.value);
}

Complex qfactorial(long t, const QParam& Q)
{
    require_nondegenerate(Q);
    if (t < 0) throw InvalidOrder("q-factorial of a negative integer");
    Complex prod = 1.0;
    for (long j = 1; j <= t; ++j) prod *= qnumber(j, Q);
    return prod;
}

Complex qbinomial(long n, long t, const QParam& Q)
{
    if (n < 0 || t < 0 || t > n)
        throw InvalidOrder("q-binomial needs 0 <= t <= n");
    Complex dt = qfactorial(t, Q);
    Complex dnt = qfactorial(n - t, Q);
    if (std::abs(dt) < 1e-14 || std::abs(dnt) < 1e-14)
        throw DegenerateParameter(
            "q-binomial denominator vanishes (root-of-unity Q); evaluate Serre sums at generic Q");
    return qfactorial(n, Q) / (dt * dnt);
}

Complex qpow(const QParam& Q, double c)
{
    require_nondegenerate(Q);
    if (c == 0.0) return 1.0;
    if (Q.is_root()) return std::polar(1.0, kTwoPi * c / Q.root_order);
    return std::pow(Q.value, Complex(c, 0.0));
}

std::optional<Complex> parse_complex(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    const char* s = text.c_str();
    char* end = nullptr;
    double first = std::strtod(s, &end);
    if (end == s) return std::nullopt;
    if (*end == '\0') return Complex(first, 0.0);
    if (*end == 'i' && *(end + 1) == '\0') return Complex(0.0, first);
    if (*end != '+' && *end != '-') return std::nullopt;
    const char* s2 = end;
    double second = std::strtod(s2, &end);
    if (end == s2 || *end != 'i' || *(end + 1) != '\0') return std::nullopt;
    return Complex(first, second);
}

std::string format_complex(Complex z)
{
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

} // namespace qsaw
