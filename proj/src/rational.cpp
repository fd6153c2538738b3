#include "initforms/rational.hpp"

#include "initforms/errors.hpp"

#include <cctype>

namespace initforms {

std::string rat_to_string(const Rational& r) {
    Int num = rat_num(r);
    Int den = rat_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rat_from_string(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t start) {
        std::size_t j = start;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == start) throw SyntaxError("expected digits in rational literal '" + text + "'", start);
        return j;
    };

    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_end = digits(i);
    Int num(text.substr(i, num_end - i));
    Int den = 1;
    i = num_end;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_end = digits(i);
        den = Int(text.substr(i, den_end - i));
        i = den_end;
        if (den == 0) throw SyntaxError("zero denominator in rational literal '" + text + "'", i - 1);
    }
    if (i != text.size()) throw SyntaxError("trailing characters in rational literal '" + text + "'", i);
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace initforms
