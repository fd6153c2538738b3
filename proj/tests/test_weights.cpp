#include "initforms/fuzz.hpp"
#include "initforms/parse.hpp"
#include "initforms/weights.hpp"

#include <doctest.h>

using namespace initforms;

namespace {

Poly P(const std::string& s, int n) { return parse_poly(s, n); }

GroupElem G(std::vector<int> v) {
    std::vector<Rational> c(v.begin(), v.end());
    return GroupElem(std::move(c));
}

Weight W1(std::vector<int> entries) {
    std::vector<Rational> r(entries.begin(), entries.end());
    return Weight::from_rationals(r);
}

}  // namespace

TEST_CASE("lexicographic comparison on Q^d") {
    CHECK(G({1, 0}).cmp(G({0, 5})) > 0);
    CHECK(G({1, 2}).cmp(G({1, 2})) == 0);
    CHECK(G({0, -1}).cmp(G({0, 0})) < 0);
    CHECK_THROWS_AS(G({1}).cmp(G({1, 2})), DimMismatch);

    // translation invariance on a few fixed triples
    GroupElem a = G({1, -2}), b = G({1, 0}), c = G({-3, 7});
    CHECK(a.cmp(b) < 0);
    CHECK((a + c).cmp(b + c) < 0);
}

TEST_CASE("total-order axioms on random triples") {
    fuzz::Rng rng(0xbead5);
    for (int it = 0; it < 300; ++it) {
        int d = rng.range(1, 3);
        auto pick = [&] {
            std::vector<Rational> coords;
            for (int k = 0; k < d; ++k) coords.emplace_back(rng.range(-6, 6), rng.range(1, 3));
            return GroupElem(std::move(coords));
        };
        GroupElem a = pick(), b = pick(), c = pick();
        // antisymmetry
        if (a <= b && b <= a) CHECK(a == b);
        // transitivity
        if (a <= b && b <= c) CHECK(a <= c);
        // translation invariance
        CHECK((a <= b) == (a + c <= b + c));
        // totality
        CHECK((a <= b || b <= a));
    }
}

TEST_CASE("wdeg computes the support maximum") {
    CHECK(wdeg(P("x1^2*x2 + x1", 2), W1({1, 1})) == DegValue(G({3})));
    CHECK(wdeg(Poly(2), W1({1, 1})).is_minus_infinity());

    // d = 2 lex: max over {(1,0),(0,1)} is (1,0)
    Weight w({G({1, 0}), G({0, 1})});
    CHECK(wdeg(P("x1 + x2", 2), w) == DegValue(G({1, 0})));

    CHECK_THROWS_AS(wdeg(P("x1", 1), W1({1, 1})), ArityMismatch);
}

TEST_CASE("initial forms keep exactly the maximizing terms") {
    CHECK(initial_form(P("x1^2*x2 + x1", 2), W1({1, 1})) == P("x1^2*x2", 2));
    CHECK(initial_form(P("x1 + x2", 2), W1({0, 0})) == P("x1 + x2", 2));
    CHECK(initial_form(P("x1*x2 + x1 + x2", 2), W1({1, -1})) == P("x1", 2));
    CHECK(initial_form(Poly(2), W1({1, 1})).is_zero());
    // a nonzero polynomial has a nonzero initial form
    CHECK_FALSE(initial_form(P("x1 - x2", 2), W1({1, 1})).is_zero());
}

TEST_CASE("product law on fixed pairs") {
    Poly f = P("x1^2*x2 + x1", 2), g = P("x1*x2 + x2", 2);
    Weight w = W1({1, -2});
    CHECK(wdeg(f * g, w) == wdeg(f, w) + wdeg(g, w));
    CHECK(initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w));

    // monomial degree is the plain dot product
    CHECK(wdeg(P("x1^3*x2^2", 2), W1({2, -1})) == DegValue(G({4})));
}

TEST_CASE("deg values absorb -infinity") {
    DegValue minf = DegValue::minus_infinity();
    DegValue three(G({3}));
    CHECK(minf < three);
    CHECK((minf + three).is_minus_infinity());
    CHECK(wdeg(Poly(1) * P("x1", 1), W1({5})).is_minus_infinity());
}

TEST_CASE("initial form of a sum: verified and hypothesis-fails cases") {
    SUBCASE("symmetric tie") {
        auto rep = check_sum_initial({P("x1", 2), P("x2", 2)}, W1({1, 1}));
        CHECK(rep.status == Status::verified);
        CHECK(rep.argmax == std::vector<std::size_t>{0, 1});
        CHECK(rep.sum_of_initials == P("x1 + x2", 2));
    }
    SUBCASE("cancellation: premise absent") {
        auto rep = check_sum_initial({P("x1", 2), P("-x1 + x2", 2)}, W1({1, 0}));
        CHECK(rep.status == Status::hypothesis_fails);
    }
    SUBCASE("strict maximum") {
        auto rep = check_sum_initial({P("x1^2", 2), P("x2", 2)}, W1({1, 1}));
        CHECK(rep.status == Status::verified);
        CHECK(rep.argmax == std::vector<std::size_t>{0});
        CHECK(rep.sum_of_initials == P("x1^2", 2));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(check_sum_initial({}, W1({1})), EmptyList);
        CHECK_THROWS_AS(check_sum_initial({Poly(1), Poly(1)}, W1({1})), AllZero);
    }
}
