#include "initforms/parse.hpp"

#include <doctest.h>

using namespace initforms;

TEST_CASE("parser reads the grammar") {
    Poly p = parse_poly("x1^2*x2 + x1", 2);
    CHECK(p.coeff(Exponent({2, 1})) == 1);
    CHECK(p.coeff(Exponent({1, 0})) == 1);
    CHECK(p.term_count() == 2);

    CHECK(parse_poly("x1 - x1", 1).is_zero());
    CHECK(parse_poly("0", 1).is_zero());
    CHECK(parse_poly("  -  x1 ", 1) == parse_poly("-x1", 1));
    CHECK(parse_poly("1/2*x1 + 1/2*x1", 1) == parse_poly("x1", 1));
    CHECK(parse_poly("x1^0", 1) == Poly::constant(1, 1));
    CHECK(parse_poly("2 - 3", 1) == Poly::constant(1, -1));
    CHECK(parse_poly("x1*x1", 1) == parse_poly("x1^2", 1));
}

TEST_CASE("zpoly parsing") {
    ZPoly zp = parse_zpoly("x2 + x1*z", 2);
    CHECK(zp.coeff(0) == parse_poly("x2", 2));
    CHECK(zp.coeff(1) == parse_poly("x1", 2));

    // z-free input through the z-parser stays a plain polynomial
    CHECK(parse_zpoly("x1 + 1", 2).z_free());
}

TEST_CASE("parser rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_poly("", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1 +", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1 x2", 2), SyntaxError);
    CHECK_THROWS_AS(parse_poly("3*4", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("1/0", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1^", 1), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1^99999999", 1), SyntaxError);

    try {
        parse_poly("x1 + @", 1);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 5);
    }

    CHECK_THROWS_AS(parse_poly("x3", 2), VarOutOfRange);
    CHECK_THROWS_AS(parse_poly("x0", 2), VarOutOfRange);
    CHECK_THROWS_AS(parse_poly("x1 + z", 1), ZNotAllowed);
    CHECK_NOTHROW(parse_zpoly("x1 + z", 1));
}

TEST_CASE("canonical formatting") {
    CHECK(format_poly(parse_poly("x1^2*x2 + x1", 2)) == "x1^2*x2 + x1");
    CHECK(format_poly(parse_poly("x1 - x1", 1)) == "0");
    CHECK(format_poly(parse_poly("-x1 + 2", 1)) == "-x1 + 2");
    CHECK(format_poly(parse_poly("x2 + x1", 2)) == "x1 + x2");
    CHECK(format_poly(parse_poly("1/2*x1 - 3", 1)) == "1/2*x1 - 3");
    CHECK(format_poly(parse_poly("-1", 1)) == "-1");
    CHECK(format_poly(Poly::constant(1, 1)) == "1");
    // descending graded-lex puts higher total degree first
    CHECK(format_zpoly(parse_zpoly("x3 + x2*z + 1/2*x1*z^2", 3)) == "1/2*x1*z^2 + x2*z + x3");
}

TEST_CASE("format then parse is the identity on canonical forms") {
    const char* samples[] = {"x1^3 - 2*x1*x2 + 7", "-5/3*x1^2 + x2 - 1", "0", "42",
                             "x1*x2*x3 - x3^4 + 2/7"};
    for (const char* s : samples) {
        Poly p = parse_poly(s, 3);
        CHECK(parse_poly(format_poly(p), 3) == p);
        CHECK(format_poly(parse_poly(format_poly(p), 3)) == format_poly(p));
    }
}

TEST_CASE("max_var_index scans expressions") {
    CHECK(max_var_index("x1*x2 + x1 + x2") == 2);
    CHECK(max_var_index("7") == 0);
    CHECK(max_var_index("x12 + x3") == 12);
}
