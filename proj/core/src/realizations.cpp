#include <functional>
#include <sstream>

#include "qsaw/realizations.hpp"

namespace qsaw {

CartanData cartan_sln(int n)
{
    if (n < 2) throw InvalidRank("sl(n) needs n >= 2");
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i) {
        a(i, i) = 2;
        if (i + 1 < n - 1) {
            a(i, i + 1) = -1;
            a(i + 1, i) = -1;
        }
    }
    return CartanData{a, std::vector<int>(n - 1, 1)};
}

CartanData cartan_ptilde(int n)
{
    if (n < 2) throw InvalidRank("extended strange superalgebra needs n >= 2");
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n - 1, n);
    a.leftCols(n - 1) = cartan_sln(n).matrix;
    a(n - 2, n - 1) = -2;
    return CartanData{a, std::vector<int>(n - 1, 1)};
}

namespace {

SpaceSpec uniform_space(int n, const ModeSpec& proto)
{
    std::vector<ModeSpec> modes(n, proto);
    return SpaceSpec(std::move(modes));
}

std::vector<ModeOperators> embed_chain(const ModeOperators& proto, const SpaceSpec& space,
                                       int first, int count)
{
    std::vector<ModeOperators> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(embed(proto, space, first + i));
    return out;
}

Operator make_op(Matrix m, const SpaceSpec& space, Grading g = Grading::Even)
{
    return Operator{std::move(m), space, g};
}

} // namespace

GeneratorBinding sln_from_modes(std::span<const ModeOperators> modes, const QParam& Q,
                                bool classical, const SpaceSpec& space, int mode_shift)
{
    const int n = static_cast<int>(modes.size());
    if (n < 2) throw InvalidRank("sl(n) realization needs at least two modes");
    GeneratorBinding binding;
    binding.space = space;
    binding.cartan = cartan_sln(n);
    binding.name = classical ? "u-sln" : "uq-sln";
    const std::string e = classical ? "e" : "E";
    const std::string f = classical ? "f" : "F";
    const std::string h = classical ? "h" : "H";
    for (int i = 1; i < n; ++i) {
        const auto& lo = modes[i - 1];
        const auto& hi = modes[i];
        Matrix ei = lo.lower.matrix * hi.raise.matrix;
        Matrix fi = lo.raise.matrix * hi.lower.matrix;
        Matrix hi_m = -lo.number.matrix + hi.number.matrix;
        std::string idx = std::to_string(i);
        binding.bind(e + idx, make_op(std::move(ei), space), mode_shift);
        binding.bind(f + idx, make_op(std::move(fi), space), mode_shift);
        Operator hop = make_op(std::move(hi_m), space);
        if (!classical) {
            binding.bind("K" + idx, diag_power(Q, 1.0, hop), 0);
            binding.bind("Kinv" + idx, diag_power(Q, -1.0, hop), 0);
        }
        binding.bind(h + idx, std::move(hop), 0);
    }
    return binding;
}

GeneratorBinding uq_sln(int n, const QParam& Q, int D)
{
    if (n < 2) throw InvalidRank("U_Q(sl(n)) needs n >= 2");
    if (D < 3) throw DimensionTooSmall("U_Q(sl(n)) realization needs D >= 3");
    SpaceSpec space = uniform_space(n, ModeSpec{Species::QBoson, D, 0, 0});
    ModeOperators proto = qboson_mode(D, Q);
    auto modes = embed_chain(proto, space, 0, n);
    return sln_from_modes(modes, Q, /*classical=*/false, space);
}

GeneratorBinding u_sln_classical(int n, int D)
{
    if (n < 2) throw InvalidRank("U(sl(n)) needs n >= 2");
    if (D < 3) throw DimensionTooSmall("U(sl(n)) realization needs D >= 3");
    SpaceSpec space = uniform_space(n, ModeSpec{Species::ClassicalBoson, D, 0, 0});
    ModeOperators proto = classical_boson_mode(D);
    auto modes = embed_chain(proto, space, 0, n);
    QParam dummy = QParam::generic(2.0); // unused by the classical symbols
    return sln_from_modes(modes, dummy, /*classical=*/true, space);
}

GeneratorBinding uq_sln_kfermionic(int n, const QParam& q)
{
    if (n < 2) throw InvalidRank("U_q(sl(n)) needs n >= 2");
    if (!q.is_root() || q.nilpotency < 2)
        throw DegenerateParameter("k-fermionic realization needs a root of unity with k >= 2");
    const int k = q.nilpotency;
    SpaceSpec space = uniform_space(n, ModeSpec{Species::KFermion, k, k, 0});
    ModeOperators proto = kfermion_mode(k, q);
    auto modes = embed_chain(proto, space, 0, n);
    GeneratorBinding binding = sln_from_modes(modes, q, /*classical=*/false, space);
    binding.name = "uq-sln-kfermionic";
    return binding;
}

namespace {

// Shared by the Eq.-(21)/(22) constructions: `deformed` switches the diagonal
// Q^{...} dressings on.
GeneratorBinding ptilde_from_parts(std::span<const ModeOperators> bosons,
                                   std::span<const ModeOperators> fermions,
                                   const SpaceSpec& space, const QParam& Q, bool deformed,
                                   int boson_shift)
{
    const int n = static_cast<int>(bosons.size());
    if (n < 2) throw InvalidRank("strange superalgebra realization needs n >= 2");
    if (fermions.size() != bosons.size())
        throw SpaceMismatch("need one fermionic mode per bosonic mode");

    GeneratorBinding binding;
    binding.space = space;
    binding.cartan = cartan_ptilde(n);
    binding.name = deformed ? "ptilde-q" : "ptilde";

    const Eigen::Index dim = space.total_dim();
    Matrix sum_n = Matrix::Zero(dim, dim);
    Matrix sum_m = Matrix::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        sum_n += bosons[i].number.matrix;
        sum_m += fermions[i].number.matrix;
    }

    for (int i = 1; i < n; ++i) {
        const auto& b0 = bosons[i - 1];
        const auto& b1 = bosons[i];
        const auto& f0 = fermions[i - 1];
        const auto& f1 = fermions[i];
        Matrix g = Matrix::Identity(dim, dim);
        Matrix hdiag = Matrix::Identity(dim, dim);
        if (deformed) {
            Operator mdiff = make_op(f0.number.matrix - f1.number.matrix, space);
            Operator ndiff = make_op(b0.number.matrix - b1.number.matrix, space);
            g = diag_power(Q, 0.5, mdiff).matrix;
            hdiag = diag_power(Q, -0.5, ndiff).matrix;
        }
        Matrix xi = b0.raise.matrix * b1.lower.matrix * g +
                    f0.raise.matrix * f1.lower.matrix * hdiag;
        Matrix yi = b1.raise.matrix * b0.lower.matrix * g +
                    f1.raise.matrix * f0.lower.matrix * hdiag;
        Matrix ti = b0.number.matrix - b1.number.matrix + f0.number.matrix - f1.number.matrix;
        std::string idx = std::to_string(i);
        binding.bind("X" + idx, make_op(std::move(xi), space), boson_shift);
        binding.bind("Y" + idx, make_op(std::move(yi), space), boson_shift);
        binding.bind("T" + idx, make_op(std::move(ti), space), 0);
    }

    Matrix xn = bosons[n - 1].raise.matrix * fermions[n - 1].raise.matrix;
    if (deformed) {
        Matrix head = Matrix::Zero(dim, dim);
        for (int i = 0; i + 1 < n; ++i)
            head += bosons[i].number.matrix - fermions[i].number.matrix;
        xn = xn * diag_power(Q, 0.5, make_op(std::move(head), space)).matrix;
    }
    binding.bind("X" + std::to_string(n), make_op(std::move(xn), space, Grading::Odd),
                 boson_shift);
    binding.bind("D", make_op(0.5 * (sum_n + sum_m), space), 0);
    return binding;
}

} // namespace

GeneratorBinding ptilde_from_modes(std::span<const ModeOperators> bosons,
                                   std::span<const ModeOperators> fermions,
                                   const SpaceSpec& space, int mode_shift)
{
    QParam dummy = QParam::generic(2.0);
    return ptilde_from_parts(bosons, fermions, space, dummy, /*deformed=*/false, mode_shift);
}

GeneratorBinding ptilde_q(int n, const QParam& Q, int D)
{
    if (D < 3) throw DimensionTooSmall("P~_Q(n) realization needs D >= 3");
    std::vector<ModeSpec> modes(n, ModeSpec{Species::QBoson, D, 0, 0});
    modes.insert(modes.end(), n, ModeSpec{Species::QFermion, 2, 0, 0});
    SpaceSpec space{modes};
    ModeOperators bproto = qboson_mode(D, Q);
    ModeOperators fproto = qfermion_mode(Q);
    auto bosons = embed_chain(bproto, space, 0, n);
    auto fermions = embed_chain(fproto, space, n, n);
    return ptilde_from_parts(bosons, fermions, space, Q, /*deformed=*/true, 1);
}

GeneratorBinding ptilde_classical(int n, int D)
{
    if (D < 3) throw DimensionTooSmall("P~(n) realization needs D >= 3");
    std::vector<ModeSpec> modes(n, ModeSpec{Species::ClassicalBoson, D, 0, 0});
    modes.insert(modes.end(), n, ModeSpec{Species::ClassicalFermion, 2, 0, 0});
    SpaceSpec space{modes};
    ModeOperators bproto = classical_boson_mode(D);
    ModeOperators fproto = classical_fermion_mode();
    auto bosons = embed_chain(bproto, space, 0, n);
    auto fermions = embed_chain(fproto, space, n, n);
    QParam dummy = QParam::generic(2.0);
    return ptilde_from_parts(bosons, fermions, space, dummy, /*deformed=*/false, 1);
}

// --- mode chains -------------------------------------------------------------

GeneratorBinding qboson_chain(int n, const QParam& Q, int D)
{
    if (n < 1) throw InvalidRank("need at least one mode");
    SpaceSpec space = uniform_space(n, ModeSpec{Species::QBoson, D, 0, 0});
    ModeOperators proto = qboson_mode(D, Q);
    GeneratorBinding binding;
    binding.space = space;
    binding.name = "qboson";
    for (int i = 0; i < n; ++i) {
        ModeOperators m = embed(proto, space, i);
        std::string idx = std::to_string(i + 1);
        binding.bind("Qn" + idx, diag_power(Q, 1.0, m.number), 0);
        binding.bind("Qni" + idx, diag_power(Q, -1.0, m.number), 0);
        binding.bind("Ap" + idx, std::move(m.raise), 1);
        binding.bind("Am" + idx, std::move(m.lower), 1);
        binding.bind("N" + idx, std::move(m.number), 0);
    }
    return binding;
}

GeneratorBinding qfermion_chain(int n, const QParam& Q)
{
    if (n < 1) throw InvalidRank("need at least one mode");
    SpaceSpec space = uniform_space(n, ModeSpec{Species::QFermion, 2, 0, 0});
    ModeOperators proto = qfermion_mode(Q);
    GeneratorBinding binding;
    binding.space = space;
    binding.name = "qfermion";
    for (int i = 0; i < n; ++i) {
        ModeOperators m = embed(proto, space, i);
        std::string idx = std::to_string(i + 1);
        binding.bind("Qm" + idx, diag_power(Q, 1.0, m.number), 0);
        binding.bind("Qmi" + idx, diag_power(Q, -1.0, m.number), 0);
        binding.bind("Pp" + idx, std::move(m.raise), 1);
        binding.bind("Pm" + idx, std::move(m.lower), 1);
        binding.bind("M" + idx, std::move(m.number), 0);
    }
    return binding;
}

GeneratorBinding kfermion_chain(int n, const QParam& q)
{
    if (n < 1) throw InvalidRank("need at least one mode");
    if (!q.is_root() || q.nilpotency < 2)
        throw DegenerateParameter("k-fermion chain needs a root of unity with k >= 2");
    const int k = q.nilpotency;
    SpaceSpec space = uniform_space(n, ModeSpec{Species::KFermion, k, k, 0});
    ModeOperators proto = kfermion_mode(k, q);
    GeneratorBinding binding;
    binding.space = space;
    binding.name = "kfermion";
    for (int i = 0; i < n; ++i) {
        ModeOperators m = embed(proto, space, i);
        std::string idx = std::to_string(i + 1);
        binding.bind("Qn" + idx, diag_power(q, 1.0, m.number), 0);
        binding.bind("Qni" + idx, diag_power(q, -1.0, m.number), 0);
        binding.bind("Cp" + idx, std::move(m.raise), 1);
        binding.bind("Cm" + idx, std::move(m.lower), 1);
        binding.bind("N" + idx, std::move(m.number), 0);
    }
    return binding;
}

// --- relation suites ---------------------------------------------------------

namespace {

class SuiteBuilder {
public:
    void add(const std::string& line, std::optional<int> margin = std::nullopt)
    {
        text_ << line << "\n";
        margins_.push_back(margin);
    }

    std::vector<Relation> finish() &&
    {
        std::vector<Relation> rels = parse_relations(text_.str());
        for (std::size_t i = 0; i < rels.size(); ++i) rels[i].margin = margins_[i];
        return rels;
    }

private:
    std::ostringstream text_;
    std::vector<std::optional<int>> margins_;
};

std::string idx2(int i, int j) { return std::to_string(i) + std::to_string(j); }

// c*sym with the unit coefficient left implicit
std::string coeff(int c, const std::string& sym)
{
    if (c == 1) return sym;
    return std::to_string(c) + "*" + sym;
}

// "lhs = a*sym" when a > 0, "lhs + (-a)*sym = 0" when a < 0, "lhs = 0" when a = 0
std::string weight_line(const std::string& name, const std::string& lhs, int a,
                        const std::string& sym)
{
    if (a > 0) return name + ": " + lhs + " = " + coeff(a, sym);
    if (a < 0) return name + ": " + lhs + " + " + coeff(-a, sym) + " = 0";
    return name + ": " + lhs + " = 0";
}

std::string power_of(const std::string& sym, int p)
{
    if (p == 0) return {};
    if (p == 1) return sym;
    return sym + "^" + std::to_string(p);
}

// sum_{t=0..m} (-1)^t [m over t]_Q  xi^{m-t} xk xi^t, endpoint q-binomials
// left implicit
std::string serre_sum(const std::string& xi, const std::string& xk, int m)
{
    std::ostringstream out;
    for (int t = 0; t <= m; ++t) {
        std::vector<std::string> factors;
        if (t > 0 && t < m)
            factors.push_back("qbin(" + std::to_string(m) + "," + std::to_string(t) + ")");
        if (!power_of(xi, m - t).empty()) factors.push_back(power_of(xi, m - t));
        factors.push_back(xk);
        if (!power_of(xi, t).empty()) factors.push_back(power_of(xi, t));
        std::string term;
        for (std::size_t f = 0; f < factors.size(); ++f)
            term += (f == 0 ? "" : "*") + factors[f];
        if (t == 0)
            out << term;
        else
            out << (t % 2 ? " - " : " + ") << term;
    }
    return out.str();
}

std::string nested_ad(const std::string& x, const std::string& y, int depth)
{
    std::string out = y;
    for (int i = 0; i < depth; ++i) out = "comm(" + x + "," + out + ")";
    return out;
}

void check_cartan(const CartanData& cartan, int rows, int cols, const std::string& suite)
{
    if (cartan.matrix.rows() < rows || cartan.matrix.cols() < cols)
        throw InvalidRank("suite '" + suite + "' needs a larger Cartan matrix");
}

std::vector<Relation> suite_uq_sln(int n, const CartanData& cartan, bool classical)
{
    check_cartan(cartan, n - 1, n - 1, classical ? "u-sln" : "uq-sln");
    SuiteBuilder b;
    const std::string e = classical ? "e" : "E";
    const std::string f = classical ? "f" : "F";
    const std::string h = classical ? "h" : "H";
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            int a = cartan.matrix(i - 1, j - 1);
            std::string ii = std::to_string(i), jj = std::to_string(j);
            b.add("ef" + idx2(i, j) + ": comm(" + e + ii + "," + f + jj + ") = " +
                  (i == j ? (classical ? h + ii : "qnum(" + h + ii + ")") : "0"));
            if (classical) {
                b.add(weight_line("he" + idx2(i, j), "comm(" + h + ii + "," + e + jj + ")", a,
                                  e + jj));
                b.add(weight_line("hf" + idx2(i, j), "comm(" + h + ii + "," + f + jj + ")", -a,
                                  f + jj));
            } else {
                b.add("kce" + idx2(i, j) + ": K" + ii + "*E" + jj + "*Kinv" + ii + " = Qpow(" +
                      std::to_string(a) + ")*E" + jj);
                b.add("kcf" + idx2(i, j) + ": K" + ii + "*F" + jj + "*Kinv" + ii + " = Qpow(" +
                      std::to_string(-a) + ")*F" + jj);
            }
        }
    }
    if (!classical) {
        for (int i = 1; i < n; ++i) {
            std::string ii = std::to_string(i);
            b.add("kord" + ii + ": Kinv" + ii + "*K" + ii + " = K" + ii + "*Kinv" + ii);
            b.add("kunit" + ii + ": K" + ii + "*Kinv" + ii + " = 1");
            b.add("kunitinv" + ii + ": Kinv" + ii + "*K" + ii + " = 1");
        }
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                b.add("kk" + idx2(i, j) + ": K" + std::to_string(i) + "*K" + std::to_string(j) +
                      " = K" + std::to_string(j) + "*K" + std::to_string(i));
    } else {
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                b.add("hh" + idx2(i, j) + ": comm(h" + std::to_string(i) + ",h" +
                      std::to_string(j) + ") = 0");
        // classical Serre: (ad e_i)^{1-a_ij} e_j = 0
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int m = 1 - cartan.matrix(i - 1, j - 1);
                b.add("serree" + idx2(i, j) + ": " +
                          nested_ad("e" + std::to_string(i), "e" + std::to_string(j), m) + " = 0",
                      m);
                b.add("serref" + idx2(i, j) + ": " +
                          nested_ad("f" + std::to_string(i), "f" + std::to_string(j), m) + " = 0",
                      m);
            }
    }
    return std::move(b).finish();
}

std::vector<Relation> suite_uq_sln_serre(int n, const CartanData& cartan)
{
    check_cartan(cartan, n - 1, n - 1, "uq-sln-serre");
    SuiteBuilder b;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int m = 1 - cartan.matrix(i - 1, j - 1);
            std::string ei = "E" + std::to_string(i), ej = "E" + std::to_string(j);
            std::string fi = "F" + std::to_string(i), fj = "F" + std::to_string(j);
            b.add("serreE" + idx2(i, j) + ": " + serre_sum(ei, ej, m) + " = 0", m);
            b.add("serreF" + idx2(i, j) + ": " + serre_sum(fi, fj, m) + " = 0", m);
        }
    return std::move(b).finish();
}

std::vector<Relation> suite_uq_sln_nilpotent(int n, const CartanData& cartan, int k)
{
    if (k < 2) throw InvalidOrder("nilpotency suite needs the order k >= 2");
    std::vector<Relation> rels = suite_uq_sln(n, cartan, /*classical=*/false);
    SuiteBuilder b;
    for (int i = 1; i < n; ++i) {
        std::string ii = std::to_string(i);
        b.add("nile" + ii + ": E" + ii + "^" + std::to_string(k) + " = 0");
        b.add("nilf" + ii + ": F" + ii + "^" + std::to_string(k) + " = 0");
    }
    auto extra = std::move(b).finish();
    rels.insert(rels.end(), extra.begin(), extra.end());
    return rels;
}

std::vector<Relation> suite_pn(int n, const CartanData& cartan, bool extended, bool deformed)
{
    check_cartan(cartan, n - 1, n, extended ? "ptilde" : "pn");
    SuiteBuilder b;
    const std::string xn = "X" + std::to_string(n);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            int a = cartan.matrix(i - 1, j - 1);
            std::string ii = std::to_string(i), jj = std::to_string(j);
            std::string rhs = i == j ? (deformed ? "qnum(T" + ii + ")" : "T" + ii) : "0";
            b.add("xy" + idx2(i, j) + ": comm(X" + ii + ",Y" + jj + ") = " + rhs);
            b.add(weight_line("xt" + idx2(i, j), "comm(X" + ii + ",T" + jj + ")", -a, "X" + ii));
            b.add(weight_line("yt" + idx2(i, j), "comm(Y" + ii + ",T" + jj + ")", a, "Y" + ii));
        }
    }
    for (int i = 1; i < n; ++i) {
        int a = cartan.matrix(i - 1, n - 1);
        b.add(weight_line("txn" + std::to_string(i),
                          "gbr(T" + std::to_string(i) + "," + xn + ")", a, xn));
    }
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            b.add("tt" + idx2(i, j) + ": comm(T" + std::to_string(i) + ",T" + std::to_string(j) +
                  ") = 0");
    if (extended) {
        for (int i = 1; i < n; ++i) {
            std::string ii = std::to_string(i);
            b.add("dx" + ii + ": comm(D,X" + ii + ") = 0");
            b.add("dy" + ii + ": comm(D,Y" + ii + ") = 0");
            b.add("dt" + ii + ": comm(D,T" + ii + ") = 0");
        }
        b.add("dxn: gbr(D," + xn + ") = " + xn);
    }
    return std::move(b).finish();
}

std::vector<Relation> suite_ptilde_q_serre(int n, const CartanData& cartan)
{
    check_cartan(cartan, n - 1, n, "ptilde-q-serre");
    SuiteBuilder b;
    for (int i = 1; i < n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            int m = 1 - cartan.matrix(i - 1, k - 1);
            b.add("serrex" + idx2(i, k) + ": " +
                      serre_sum("X" + std::to_string(i), "X" + std::to_string(k), m) + " = 0",
                  m);
        }
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int m = 1 - cartan.matrix(i - 1, j - 1);
            b.add("serrey" + idx2(i, j) + ": " +
                      serre_sum("Y" + std::to_string(i), "Y" + std::to_string(j), m) + " = 0",
                  m);
        }
    return std::move(b).finish();
}

std::vector<Relation> suite_qboson(int n)
{
    SuiteBuilder b;
    for (int i = 1; i <= n; ++i) {
        std::string ii = std::to_string(i);
        b.add("qba" + ii + ": Am" + ii + "*Ap" + ii + " - Qpow(1)*Ap" + ii + "*Am" + ii +
                  " = Qni" + ii,
              1);
        b.add("qbb" + ii + ": Am" + ii + "*Ap" + ii + " - Qpow(-1)*Ap" + ii + "*Am" + ii +
                  " = Qn" + ii,
              1);
        b.add("qbcp" + ii + ": Qn" + ii + "*Ap" + ii + "*Qni" + ii + " = Qpow(1)*Ap" + ii, 0);
        b.add("qbcm" + ii + ": Qn" + ii + "*Am" + ii + "*Qni" + ii + " = Qpow(-1)*Am" + ii, 0);
        b.add("qbu" + ii + ": Qn" + ii + "*Qni" + ii + " = 1", 0);
    }
    const char* tags[2] = {"p", "m"};
    const char* ops[2] = {"Ap", "Am"};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    b.add(std::string("qbx") + tags[a] + tags[c] + idx2(i, j) + ": comm(" +
                              ops[a] + std::to_string(i) + "," + ops[c] + std::to_string(j) +
                              ") = 0",
                          0);
    return std::move(b).finish();
}

std::vector<Relation> suite_qfermion(int n)
{
    SuiteBuilder b;
    for (int i = 1; i <= n; ++i) {
        std::string ii = std::to_string(i);
        b.add("qfa" + ii + ": Pm" + ii + "*Pp" + ii + " + Qpow(1)*Pp" + ii + "*Pm" + ii +
              " = Qm" + ii);
        b.add("qfb" + ii + ": Pm" + ii + "*Pp" + ii + " + Qpow(-1)*Pp" + ii + "*Pm" + ii +
              " = Qmi" + ii);
        b.add("qfsp" + ii + ": Pp" + ii + "^2 = 0");
        b.add("qfsm" + ii + ": Pm" + ii + "^2 = 0");
        b.add("qfaa" + ii + ": acomm(Pp" + ii + ",Pp" + ii + ") = 0");
        b.add("qfc" + ii + ": Qm" + ii + "*Pp" + ii + "*Qmi" + ii + " = Qpow(1)*Pp" + ii);
        b.add("qfu" + ii + ": Qm" + ii + "*Qmi" + ii + " = 1");
    }
    const char* tags[2] = {"p", "m"};
    const char* ops[2] = {"Pp", "Pm"};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    b.add(std::string("qfx") + tags[a] + tags[c] + idx2(i, j) + ": acomm(" +
                          ops[a] + std::to_string(i) + "," + ops[c] + std::to_string(j) +
                          ") = 0");
            b.add("qfxc" + idx2(i, j) + ": Qm" + std::to_string(i) + "*Pp" + std::to_string(j) +
                  "*Qmi" + std::to_string(i) + " = Pp" + std::to_string(j));
            b.add("qfxq" + idx2(i, j) + ": Qm" + std::to_string(i) + "*Qm" + std::to_string(j) +
                  " = Qm" + std::to_string(j) + "*Qm" + std::to_string(i));
        }
    return std::move(b).finish();
}

std::vector<Relation> suite_kfermion(int n, int k)
{
    if (k < 2) throw InvalidOrder("kfermion suite needs the order k >= 2");
    SuiteBuilder b;
    for (int i = 1; i <= n; ++i) {
        std::string ii = std::to_string(i);
        b.add("kfa" + ii + ": Cm" + ii + "*Cp" + ii + " - Qpow(-1)*Cp" + ii + "*Cm" + ii +
              " = Qn" + ii);
        b.add("kfb" + ii + ": Cm" + ii + "*Cp" + ii + " - Qpow(1)*Cp" + ii + "*Cm" + ii +
              " = Qni" + ii);
        b.add("kfnp" + ii + ": comm(N" + ii + ",Cp" + ii + ") = Cp" + ii);
        b.add("kfnm" + ii + ": comm(N" + ii + ",Cm" + ii + ") + Cm" + ii + " = 0");
        b.add("kfnilp" + ii + ": Cp" + ii + "^" + std::to_string(k) + " = 0");
        b.add("kfnilm" + ii + ": Cm" + ii + "^" + std::to_string(k) + " = 0");
    }
    const char* tags[2] = {"p", "m"};
    const char* ops[2] = {"Cp", "Cm"};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int a = 0; a < 2; ++a)
                for (int c = 0; c < 2; ++c)
                    b.add(std::string("kfx") + tags[a] + tags[c] + idx2(i, j) + ": comm(" +
                          ops[a] + std::to_string(i) + "," + ops[c] + std::to_string(j) +
                          ") = 0");
    return std::move(b).finish();
}

} // namespace

bool is_known_suite(const std::string& name)
{
    static const char* names[] = {"uq-sln",        "u-sln",           "pn",
                                  "ptilde",        "ptilde-q",        "uq-sln-serre",
                                  "ptilde-q-serre", "uq-sln-nilpotent", "qboson",
                                  "qfermion",      "kfermion"};
    for (const char* n : names)
        if (name == n) return true;
    return false;
}

std::vector<Relation> relation_suite(const std::string& name, int n, const CartanData& cartan,
                                     int order)
{
    if (name == "uq-sln") return suite_uq_sln(n, cartan, false);
    if (name == "u-sln") return suite_uq_sln(n, cartan, true);
    if (name == "uq-sln-serre") return suite_uq_sln_serre(n, cartan);
    if (name == "uq-sln-nilpotent") return suite_uq_sln_nilpotent(n, cartan, order);
    if (name == "pn") return suite_pn(n, cartan, false, false);
    if (name == "ptilde") return suite_pn(n, cartan, true, false);
    if (name == "ptilde-q") return suite_pn(n, cartan, true, true);
    if (name == "ptilde-q-serre") return suite_ptilde_q_serre(n, cartan);
    if (name == "qboson") return suite_qboson(n);
    if (name == "qfermion") return suite_qfermion(n);
    if (name == "kfermion") return suite_kfermion(n, order);
    throw UnknownSuite("unknown relation suite '" + name + "'");
}

} // namespace qsaw
