#include "initforms/fuzz.hpp"
#include "initforms/newton.hpp"
#include "initforms/parse.hpp"

#include <doctest.h>

#include <algorithm>

using namespace initforms;

namespace {

Poly P(const std::string& s, int n) { return parse_poly(s, n); }

Exponent E(std::vector<int> v) { return Exponent(std::move(v)); }

std::vector<Exponent> vertex_list(const Poly& f) {
    std::vector<Exponent> out;
    for (const auto& cert : hull_vertices(PointSet::support_of(f))) out.push_back(cert.vertex);
    return out;
}

bool same_points(std::vector<Exponent> a, std::vector<Exponent> b) {
    std::sort(a.begin(), a.end(), GrlexLess{});
    std::sort(b.begin(), b.end(), GrlexLess{});
    return a == b;
}

}  // namespace

TEST_CASE("support reads off the exponent set") {
    PointSet s = PointSet::support_of(P("x1*x2 + x1 + x2", 2));
    CHECK(same_points(s.points(), {E({1, 1}), E({1, 0}), E({0, 1})}));
    CHECK(PointSet::support_of(Poly(2)).empty());
    PointSet sq = PointSet::support_of(P("x1+x2", 2).pow(2));
    CHECK(same_points(sq.points(), {E({2, 0}), E({1, 1}), E({0, 2})}));
}

TEST_CASE("hull vertices by exact LP") {
    SUBCASE("midpoint is excluded") {
        PointSet s({E({0, 0}), E({2, 0}), E({0, 2}), E({1, 1})});
        auto vs = hull_vertices(s);
        std::vector<Exponent> got;
        for (const auto& c : vs) got.push_back(c.vertex);
        CHECK(same_points(got, {E({0, 0}), E({2, 0}), E({0, 2})}));
        for (const auto& c : vs) CHECK(certificate_valid(c, s));
    }
    SUBCASE("singleton") {
        PointSet s({E({3, 5})});
        auto vs = hull_vertices(s);
        REQUIRE(vs.size() == 1);
        CHECK(vs[0].vertex == E({3, 5}));
        CHECK(vs[0].weight == std::vector<Rational>{Rational(0), Rational(0)});
        CHECK(certificate_valid(vs[0], s));
    }
    SUBCASE("triangle keeps all three corners") {
        PointSet s({E({1, 1}), E({1, 0}), E({0, 1})});
        CHECK(hull_vertices(s).size() == 3);
    }
    SUBCASE("empty set is an error") {
        CHECK_THROWS_AS(hull_vertices(PointSet({})), EmptySet);
    }
}

TEST_CASE("intruder detection") {
    CHECK(same_points(intruders(P("x1*x2 + x1 + x2", 2)), {E({1, 1})}));
    CHECK(intruders(P("x2^2 - 2*x1*x3", 3)).empty());
    CHECK(intruders(P("x1", 2)).empty());
    CHECK(same_points(intruders(P("x1", 1)), {E({1})}));
    CHECK_THROWS_AS(intruders(Poly(2)), ZeroPolynomial);
}

TEST_CASE("intruder status is recomputed after ring operations") {
    Poly f = P("x1 + x2", 2);
    CHECK(intruders(f).empty());
    Poly shifted = f * P("x1", 2);  // support moves off the axes
    CHECK(same_points(intruders(shifted), {E({1, 1})}));
}

TEST_CASE("separating weights") {
    PointSet tri({E({1, 1}), E({1, 0}), E({0, 1})});
    auto cert = separating_weight(E({1, 1}), tri);
    REQUIRE(cert.has_value());
    CHECK(certificate_valid(*cert, tri));

    PointSet square({E({0, 0}), E({2, 0}), E({0, 2}), E({1, 1})});
    CHECK_FALSE(separating_weight(E({1, 1}), square).has_value());

    PointSet one({E({4})});
    auto c1 = separating_weight(E({4}), one);
    REQUIRE(c1.has_value());
    CHECK(c1->weight == std::vector<Rational>{Rational(0)});

    CHECK_THROWS_AS(separating_weight(E({9, 9}), tri), PointNotInSet);
}

TEST_CASE("separating weight coheres with initial forms") {
    Poly f = P("x1*x2 + x1 + x2", 2);
    PointSet s = PointSet::support_of(f);
    for (const auto& cert : hull_vertices(s)) {
        Poly init = initial_form(f, lift_weight(cert.weight));
        CHECK(init.term_count() == 1);
        CHECK(init.leading_term().first == cert.vertex);
    }
}

TEST_CASE("monomial criterion dictionary") {
    CHECK(check_monomial_criterion(P("x1*x2 + x1 + x2", 2)).status == Status::verified);
    CHECK(check_monomial_criterion(P("x2^2 - 2*x1*x3", 3)).status == Status::verified);
    CHECK(check_monomial_criterion(P("x1", 2)).status == Status::verified);
    CHECK_THROWS_AS(check_monomial_criterion(Poly(1)), ZeroPolynomial);
}

TEST_CASE("LP agrees with the convex-combination oracle on fixed sets") {
    // degenerate/collinear configurations that trip floating-point hulls
    std::vector<std::vector<Exponent>> sets = {
        {E({0, 0}), E({1, 1}), E({2, 2}), E({3, 3})},                    // collinear
        {E({0, 0}), E({0, 0}), E({1, 0})},                               // duplicates
        {E({0, 0, 0}), E({1, 0, 0}), E({0, 1, 0}), E({0, 0, 1}),
         E({1, 1, 1})},                                                  // simplex + point
        {E({2, 0}), E({0, 2}), E({1, 1}), E({1, 0}), E({0, 1})},
    };
    for (const auto& pts : sets) {
        PointSet s(pts);
        std::vector<Exponent> lp_vertices;
        for (const auto& cert : hull_vertices(s)) lp_vertices.push_back(cert.vertex);
        for (const Exponent& p : s.points()) {
            std::vector<Exponent> others;
            for (const Exponent& q : s.points())
                if (q != p) others.push_back(q);
            bool lp_vertex =
                std::find(lp_vertices.begin(), lp_vertices.end(), p) != lp_vertices.end();
            CHECK(lp_vertex == !fuzz::in_hull_oracle(p, others));
        }
    }
}
