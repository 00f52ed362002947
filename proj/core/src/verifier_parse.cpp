#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "qsaw/verifier.hpp"

namespace qsaw {

namespace {

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;      // identifier or punctuation
    Complex value{};       // Number
    bool integral = false; // Number had plain integer form
    long ivalue = 0;
    int column = 0;        // 1-based
};

class Lexer {
public:
    Lexer(std::string_view line, int line_no) : line_(line), line_no_(line_no) { advance(); }

    const Token& peek() const { return current_; }

    Token take()
    {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        int col = current_.kind == Token::Kind::End ? static_cast<int>(line_.size()) + 1
                                                    : current_.column;
        std::string found = current_.kind == Token::Kind::End ? "end of line"
                                                              : "'" + current_.text + "'";
        throw SyntaxError("line " + std::to_string(line_no_) + ", column " + std::to_string(col) +
                              ": expected " + expected + ", found " + found,
                          line_no_, col, expected);
    }

    int line_no() const { return line_no_; }

private:
    void advance()
    {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        current_ = Token{};
        current_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#') {
            current_.kind = Token::Kind::End;
            return;
        }
        char c = line_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   std::isalnum(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            current_.kind = Token::Kind::Ident;
            current_.text = std::string(line_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        current_.kind = Token::Kind::Punct;
        current_.text = std::string(1, c);
        ++pos_;
    }

    // decimal [i] | decimal ('+'|'-') decimal 'i', written without spaces
    std::size_t scan_decimal(std::size_t from) const
    {
        std::size_t p = from;
        while (p < line_.size() && std::isdigit(static_cast<unsigned char>(line_[p]))) ++p;
        if (p < line_.size() && line_[p] == '.') {
            ++p;
            while (p < line_.size() && std::isdigit(static_cast<unsigned char>(line_[p]))) ++p;
        }
        if (p < line_.size() && (line_[p] == 'e' || line_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < line_.size() && (line_[q] == '+' || line_[q] == '-')) ++q;
            if (q < line_.size() && std::isdigit(static_cast<unsigned char>(line_[q]))) {
                ++q;
                while (q < line_.size() && std::isdigit(static_cast<unsigned char>(line_[q]))) ++q;
                p = q;
            }
        }
        return p;
    }

    void lex_number()
    {
        std::size_t start = pos_;
        std::size_t p = scan_decimal(pos_);
        double first = std::strtod(std::string(line_.substr(start, p - start)).c_str(), nullptr);
        current_.kind = Token::Kind::Number;
        if (p < line_.size() && line_[p] == 'i') {
            current_.value = Complex(0.0, first);
            pos_ = p + 1;
        } else if (p < line_.size() && (line_[p] == '+' || line_[p] == '-')) {
            std::size_t q = scan_decimal(p + 1);
            if (q > p + 1 && q < line_.size() && line_[q] == 'i') {
                double second =
                    std::strtod(std::string(line_.substr(p, q - p)).c_str(), nullptr);
                current_.value = Complex(first, second);
                pos_ = q + 1;
            } else {
                current_.value = Complex(first, 0.0);
                pos_ = p;
            }
        } else {
            current_.value = Complex(first, 0.0);
            pos_ = p;
        }
        std::string text(line_.substr(start, pos_ - start));
        current_.text = text;
        if (text.find_first_of(".eEi") == std::string::npos) {
            current_.integral = true;
            current_.ivalue = std::strtol(text.c_str(), nullptr, 10);
        }
    }

    std::string_view line_;
    int line_no_;
    std::size_t pos_ = 0;
    Token current_;
};

class LineParser {
public:
    explicit LineParser(Lexer& lex) : lex_(lex) {}

    Relation parse_relation()
    {
        Relation rel;
        if (lex_.peek().kind != Token::Kind::Ident) lex_.fail("relation name");
        rel.name = lex_.take().text;
        expect(":");
        rel.lhs = parse_expr();
        expect("=");
        rel.rhs = parse_expr();
        if (lex_.peek().kind != Token::Kind::End) lex_.fail("end of line");
        return rel;
    }

private:
    void expect(const std::string& punct)
    {
        if (lex_.peek().kind != Token::Kind::Punct || lex_.peek().text != punct)
            lex_.fail("'" + punct + "'");
        lex_.take();
    }

    bool at_punct(const char* p) const
    {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    ExprPtr parse_expr()
    {
        std::vector<ExprPtr> terms{parse_term()};
        std::vector<int> signs{+1};
        while (at_punct("+") || at_punct("-")) {
            signs.push_back(lex_.take().text == "+" ? +1 : -1);
            terms.push_back(parse_term());
        }
        if (terms.size() == 1) return terms[0];
        auto sum = std::make_shared<Expr>();
        sum->kind = Expr::Kind::Sum;
        sum->args = std::move(terms);
        sum->signs = std::move(signs);
        return sum;
    }

    ExprPtr parse_term()
    {
        std::vector<ExprPtr> factors{parse_factor()};
        while (at_punct("*")) {
            lex_.take();
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return factors[0];
        auto prod = std::make_shared<Expr>();
        prod->kind = Expr::Kind::Product;
        prod->args = std::move(factors);
        return prod;
    }

    ExprPtr parse_factor()
    {
        ExprPtr base = parse_base();
        if (!at_punct("^")) return base;
        lex_.take();
        long e = expect_int("integer exponent");
        if (e < 0) lex_.fail("non-negative exponent");
        if (e == 1) return base;
        if (e == 0) {
            auto one = std::make_shared<Expr>();
            one->kind = Expr::Kind::Scalar;
            one->scalar = 1.0;
            return one;
        }
        auto pw = std::make_shared<Expr>();
        pw->kind = Expr::Kind::Power;
        pw->exponent = static_cast<int>(e);
        pw->args = {base};
        return pw;
    }

    long expect_int(const char* what)
    {
        bool neg = false;
        if (at_punct("-")) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Number || !lex_.peek().integral) lex_.fail(what);
        long v = lex_.take().ivalue;
        return neg ? -v : v;
    }

    ExprPtr parse_base()
    {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            auto sc = std::make_shared<Expr>();
            sc->kind = Expr::Kind::Scalar;
            sc->scalar = lex_.take().value;
            return sc;
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            lex_.take();
            ExprPtr inner = parse_expr();
            expect(")");
            return inner;
        }
        if (t.kind != Token::Kind::Ident) lex_.fail("symbol, number or '('");
        Token ident = lex_.take();
        if (!at_punct("(")) {
            auto sym = std::make_shared<Expr>();
            sym->kind = Expr::Kind::Symbol;
            sym->symbol = ident.text;
            return sym;
        }
        return parse_call(ident);
    }

    ExprPtr parse_call(const Token& ident)
    {
        auto node = std::make_shared<Expr>();
        const std::string& fn = ident.text;
        if (fn == "comm")
            node->kind = Expr::Kind::Comm;
        else if (fn == "acomm")
            node->kind = Expr::Kind::Acomm;
        else if (fn == "gbr")
            node->kind = Expr::Kind::Gbr;
        else if (fn == "qnum")
            node->kind = Expr::Kind::QNum;
        else if (fn == "qbin")
            node->kind = Expr::Kind::QBin;
        else if (fn == "Qpow")
            node->kind = Expr::Kind::QPow;
        else
            throw UnknownFunction("line " + std::to_string(lex_.line_no()) + ", column " +
                                  std::to_string(ident.column) + ": unknown function '" + fn +
                                  "'");
        expect("(");
        switch (node->kind) {
            case Expr::Kind::Comm:
            case Expr::Kind::Acomm:
            case Expr::Kind::Gbr:
                node->args.push_back(parse_expr());
                expect(",");
                node->args.push_back(parse_expr());
                break;
            case Expr::Kind::QNum:
                node->args.push_back(parse_expr());
                break;
            case Expr::Kind::QBin:
                node->qbin_n = static_cast<int>(expect_int("integer"));
                expect(",");
                node->qbin_t = static_cast<int>(expect_int("integer"));
                break;
            case Expr::Kind::QPow: {
                node->qpow_num = expect_int("signed rational");
                node->qpow_den = 1;
                if (at_punct("/")) {
                    lex_.take();
                    long d = expect_int("denominator");
                    if (d <= 0) lex_.fail("positive denominator");
                    node->qpow_den = d;
                }
                break;
            }
            default:
                break;
        }
        expect(")");
        return node;
    }

    Lexer& lex_;
};

} // namespace

std::vector<Relation> parse_relations(std::string_view text)
{
    std::vector<Relation> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        Lexer lex(line, line_no);
        if (lex.peek().kind != Token::Kind::End) {
            LineParser parser(lex);
            out.push_back(parser.parse_relation());
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

// --- printing ---------------------------------------------------------------

namespace {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = std::strtod(buf, nullptr);
    if (back == v) {
        // prefer the shortest representation that still round-trips
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[40];
            std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
            if (std::strtod(shorter, nullptr) == v) return shorter;
        }
    }
    return buf;
}

std::string print_scalar(Complex z)
{
    if (z.imag() == 0.0) return format_double(z.real());
    if (z.real() == 0.0) return format_double(z.imag()) + "i";
    std::string im = format_double(z.imag());
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return format_double(z.real()) + im + "i";
}

bool needs_parens_in_product(const Expr& e) { return e.kind == Expr::Kind::Sum; }

bool needs_parens_in_power(const Expr& e)
{
    return e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Product;
}

} // namespace

std::string print_expr(const Expr& e)
{
    switch (e.kind) {
        case Expr::Kind::Symbol:
            return e.symbol;
        case Expr::Kind::Scalar:
            return print_scalar(e.scalar);
        case Expr::Kind::QPow: {
            std::string arg = std::to_string(e.qpow_num);
            if (e.qpow_den != 1) arg += "/" + std::to_string(e.qpow_den);
            return "Qpow(" + arg + ")";
        }
        case Expr::Kind::QNum:
            return "qnum(" + print_expr(*e.args[0]) + ")";
        case Expr::Kind::QBin:
            return "qbin(" + std::to_string(e.qbin_n) + "," + std::to_string(e.qbin_t) + ")";
        case Expr::Kind::Comm:
            return "comm(" + print_expr(*e.args[0]) + "," + print_expr(*e.args[1]) + ")";
        case Expr::Kind::Acomm:
            return "acomm(" + print_expr(*e.args[0]) + "," + print_expr(*e.args[1]) + ")";
        case Expr::Kind::Gbr:
            return "gbr(" + print_expr(*e.args[0]) + "," + print_expr(*e.args[1]) + ")";
        case Expr::Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                std::string part = print_expr(*e.args[i]);
                if (e.args[i]->kind == Expr::Kind::Sum) part = "(" + part + ")";
                if (i == 0)
                    out = part;
                else
                    out += (e.signs[i] > 0 ? " + " : " - ") + part;
            }
            return out;
        }
        case Expr::Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                std::string part = print_expr(*e.args[i]);
                if (needs_parens_in_product(*e.args[i]) ||
                    e.args[i]->kind == Expr::Kind::Product)
                    part = "(" + part + ")";
                out += (i == 0 ? "" : "*") + part;
            }
            return out;
        }
        case Expr::Kind::Power: {
            std::string base = print_expr(*e.args[0]);
            if (needs_parens_in_power(*e.args[0])) base = "(" + base + ")";
            return base + "^" + std::to_string(e.exponent);
        }
    }
    return {};
}

std::string print_relation(const Relation& r)
{
    return r.name + ": " + print_expr(*r.lhs) + " = " + print_expr(*r.rhs);
}

bool expr_equal(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Symbol:
            return a.symbol == b.symbol;
        case Expr::Kind::Scalar:
            return a.scalar == b.scalar;
        case Expr::Kind::QPow:
            return a.qpow_num == b.qpow_num && a.qpow_den == b.qpow_den;
        case Expr::Kind::QBin:
            return a.qbin_n == b.qbin_n && a.qbin_t == b.qbin_t;
        case Expr::Kind::Power:
            if (a.exponent != b.exponent) return false;
            break;
        case Expr::Kind::Sum:
            if (a.signs != b.signs) return false;
            break;
        default:
            break;
    }
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

} // namespace qsaw
