#include "initforms/parse.hpp"

#include <cctype>
#include <sstream>

namespace initforms {

namespace {

// Recursive-descent parser over k[x1..xn][z]; z is handled as an extra
// variable at index nvars.
class Parser {
public:
    Parser(const std::string& text, int nvars, bool allow_z)
        : text_(text), nvars_(nvars), allow_z_(allow_z), acc_(nvars + 1) {}

    Poly run() {
        skip_ws();
        if (eof()) throw SyntaxError("empty expression", pos_);
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        acc_ += term().scale(negative ? -1 : 1);
        skip_ws();
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-') throw SyntaxError(std::string("expected '+' or '-', got '") + op + "'", pos_);
            ++pos_;
            Poly t = term();
            acc_ += op == '-' ? -t : t;
            skip_ws();
        }
        return acc_;
    }

private:
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    long long nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected a number", pos_);
        long long v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000LL) throw SyntaxError("number too large", start);
            ++pos_;
        }
        return v;
    }

    // Digit run as an arbitrary-precision integer (coefficients are unbounded).
    Int nat_big() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw SyntaxError("expected a number", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    Rational coeff() {
        skip_ws();
        bool negative = false;
        if (!eof() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        Int num = nat_big();
        Int den = 1;
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            std::size_t dpos = pos_;
            den = nat_big();
            if (den == 0) throw SyntaxError("zero denominator", dpos);
        }
        Rational r(num, den);
        return negative ? Rational(-r) : r;
    }

    // var ('^' nat)? as a monomial over nvars+1 slots.
    Poly factor() {
        skip_ws();
        if (eof()) throw SyntaxError("expected a variable", pos_);
        int index;
        if (peek() == 'x') {
            std::size_t at = pos_;
            ++pos_;
            long long vi = nat();
            if (vi < 1 || vi > nvars_)
                throw VarOutOfRange("variable x" + std::to_string(vi) + " outside x1..x" +
                                    std::to_string(nvars_) + " (at position " + std::to_string(at) + ")");
            index = static_cast<int>(vi) - 1;
        } else if (peek() == 'z') {
            if (!allow_z_) throw ZNotAllowed("z is not allowed in this context (at position " + std::to_string(pos_) + ")");
            ++pos_;
            index = nvars_;
        } else {
            throw SyntaxError(std::string("expected a variable, got '") + peek() + "'", pos_);
        }
        int exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            std::size_t at = pos_;
            long long raw = nat();
            if (raw > kMaxExponent) throw SyntaxError("exponent too large", at);
            exp = static_cast<int>(raw);
        }
        std::vector<int> e(static_cast<std::size_t>(nvars_) + 1, 0);
        e[static_cast<std::size_t>(index)] = exp;
        return Poly::monomial(nvars_ + 1, Exponent(std::move(e)), 1);
    }

    Poly term() {
        skip_ws();
        if (eof()) throw SyntaxError("expected a term", pos_);
        char c = peek();
        Poly t = Poly::constant(nvars_ + 1, 1);
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            t = t.scale(coeff());
        } else {
            t = t * factor();
        }
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            t = t * factor();
        }
        return t;
    }

    const std::string& text_;
    int nvars_;
    bool allow_z_;
    Poly acc_;
    std::size_t pos_ = 0;
};

void append_term(std::ostream& os, bool first, const Exponent& e, const Rational& c, int z_slot) {
    Rational a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    bool wrote = false;
    if (a != 1 || e.is_zero()) {
        os << rat_to_string(a);
        wrote = true;
    }
    for (int i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        if (i == z_slot)
            os << "z";
        else
            os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        wrote = true;
    }
}

std::string format_impl(const Poly& p, int z_slot) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_term(os, first, e, c, z_slot);
        first = false;
    }
    return os.str();
}

}  // namespace

Poly parse_poly(const std::string& text, int nvars) {
    Parser parser(text, nvars, /*allow_z=*/false);
    Poly wide = parser.run();
    // z never appears, so the last slot is identically zero.
    Poly out(nvars);
    for (const auto& [e, c] : wide.terms()) {
        std::vector<int> xs(e.entries().begin(), e.entries().end() - 1);
        out.add_term(Exponent(std::move(xs)), c);
    }
    return out;
}

ZPoly parse_zpoly(const std::string& text, int nvars) {
    Parser parser(text, nvars, /*allow_z=*/true);
    return ZPoly::from_poly_in_z(parser.run());
}

std::string format_poly(const Poly& p) { return format_impl(p, /*z_slot=*/-1); }

std::string format_zpoly(const ZPoly& p) { return format_impl(p.to_poly_in_z(), p.nvars()); }

int max_var_index(const std::string& text) {
    int best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x') continue;
        std::size_t j = i + 1;
        long long v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v <= 1000000) {
            v = v * 10 + (text[j] - '0');
            ++j;
        }
        if (j > i + 1 && v > best) best = static_cast<int>(v);
        i = j - 1;
    }
    return best;
}

}  // namespace initforms
