#include "initforms/actions.hpp"
#include "initforms/parse.hpp"

#include <doctest.h>

using namespace initforms;

namespace {

Poly P(const std::string& s, int n) { return parse_poly(s, n); }

std::vector<ZPoly> Z(std::initializer_list<const char*> images, int m) {
    std::vector<ZPoly> out;
    for (const char* s : images) out.push_back(parse_zpoly(s, m));
    return out;
}

}  // namespace

TEST_CASE("make_coaction accepts the triangular translation") {
    GaAction a = GaAction::make_coaction(Z({"x1", "x2 + x1*z"}, 2));
    CHECK(a.m() == 2);
    CHECK_FALSE(a.trivial());
}

TEST_CASE("make_coaction on one variable") {
    GaAction a = GaAction::make_coaction(Z({"x1 + z"}, 1));
    CHECK_FALSE(a.trivial());
    CHECK_FALSE(is_invariant(a, P("x1", 1)));
    CHECK(is_invariant(a, Poly::constant(1, Rational(7, 2))));
    // quadratic z needs the 1/2 coefficient to be a coaction; without it the
    // axiom fails
    CHECK_THROWS_AS(GaAction::make_coaction(Z({"x1 + z + z^2"}, 1)), CoassocFails);
    CHECK_NOTHROW(lnd_exp(LND::make({P("1", 1)})));
}

TEST_CASE("make_coaction rejects axiom violations") {
    // (z1+z2)^2 != z1^2 + z2^2 over Q
    CHECK_THROWS_AS(GaAction::make_coaction(Z({"x1", "x2 + z^2"}, 2)), CoassocFails);
    CHECK_THROWS_AS(GaAction::make_coaction(Z({"x1 + 1", "x2"}, 2)), CounitFails);
    try {
        GaAction::make_coaction(Z({"x1 + 1", "x2"}, 2));
    } catch (const CounitFails& e) {
        CHECK(e.index == 0);
    }
}

TEST_CASE("invariance is z-freeness of the image") {
    GaAction a = GaAction::make_coaction(Z({"x1", "x2 + x1*z"}, 2));
    CHECK(is_invariant(a, P("x1", 2)));
    CHECK_FALSE(is_invariant(a, P("x2", 2)));
    CHECK(is_invariant(a, P("3*x1^2 - 1/2*x1", 2)));
    CHECK_THROWS_AS(is_invariant(a, P("x1", 1)), ArityMismatch);
}

TEST_CASE("exponentials of locally nilpotent derivations") {
    SUBCASE("one-step derivation") {
        GaAction a = lnd_exp(LND::make({Poly(2), P("x1", 2)}));
        CHECK(a.image(0) == parse_zpoly("x1", 2));
        CHECK(a.image(1) == parse_zpoly("x2 + x1*z", 2));
    }
    SUBCASE("two-step derivation picks up 1/2 z^2") {
        GaAction a = lnd_exp(LND::make({Poly(3), P("x1", 3), P("x2", 3)}));
        CHECK(a.image(2) == parse_zpoly("x3 + x2*z + 1/2*x1*z^2", 3));
        CHECK(is_invariant(a, P("x2^2 - 2*x1*x3", 3)));
    }
    SUBCASE("zero derivation gives the trivial action") {
        GaAction a = lnd_exp(LND::make({Poly(2), Poly(2)}));
        CHECK(a.trivial());
        CHECK(is_invariant(a, P("x1*x2", 2)));
    }
}

TEST_CASE("non-nilpotent derivations are rejected at the cap") {
    CHECK_THROWS_AS(LND::make({P("x1", 1)}), NotLocallyNilpotent);
    try {
        LND::make({Poly(2), P("x2", 2)}, 16);  // D(x2) = x2 never dies
    } catch (const NotLocallyNilpotent& e) {
        CHECK(e.index == 1);
        CHECK(e.cap == 16);
    }
}

TEST_CASE("derivation application is a derivation") {
    LND d = LND::make({Poly(2), P("x1", 2)});
    Poly f = P("x1*x2", 2), g = P("x2^2", 2);
    CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    CHECK(d.apply(P("x2^2 - 2*x1", 2)) == P("2*x1*x2", 2));
}

TEST_CASE("automorphism pairs verify both compositions") {
    CHECK_NOTHROW(AutomorphismPair::make({P("x1", 2), P("x2 + x1^2", 2)},
                                         {P("x1", 2), P("x2 - x1^2", 2)}));
    CHECK_THROWS_AS(AutomorphismPair::make({P("x1", 2), P("x2 + x1^2", 2)},
                                           {P("x1", 2), P("x2 + x1^2", 2)}),
                    NotAnAutomorphismPair);
}

TEST_CASE("translation actions through coordinate systems") {
    SUBCASE("identity pair translates x1") {
        auto ap = AutomorphismPair::make({P("x1", 2), P("x2", 2)}, {P("x1", 2), P("x2", 2)});
        GaAction a = translation_action(ap);
        CHECK(a.image(0) == parse_zpoly("x1 + z", 2));
        CHECK(a.image(1) == parse_zpoly("x2", 2));
    }
    SUBCASE("parabolic coordinates") {
        auto ap = AutomorphismPair::make({P("x1", 2), P("x2 + x1^2", 2)},
                                         {P("x1", 2), P("x2 - x1^2", 2)});
        GaAction a = translation_action(ap);
        CHECK(a.image(0) == parse_zpoly("x1 + z", 2));
        // G_2(F_1 + z, F_2) = (x2 + x1^2) - (x1 + z)^2
        CHECK(a.image(1) == parse_zpoly("x2 - 2*x1*z - z^2", 2));
        CHECK(is_invariant(a, P("x2 + x1^2", 2)));
        CHECK_FALSE(is_invariant(a, P("x2", 2)));
    }
    SUBCASE("swap conjugates the translation to x2") {
        auto ap = AutomorphismPair::make({P("x2", 2), P("x1", 2)}, {P("x2", 2), P("x1", 2)});
        GaAction a = translation_action(ap);
        CHECK(a.image(0) == parse_zpoly("x1", 2));
        CHECK(a.image(1) == parse_zpoly("x2 + z", 2));
    }
}

TEST_CASE("invariants form a subalgebra (samples)") {
    GaAction a = lnd_exp(LND::make({Poly(3), P("x1", 3), P("x2", 3)}));
    Poly f = P("x1", 3), g = P("x2^2 - 2*x1*x3", 3);
    REQUIRE(is_invariant(a, f));
    REQUIRE(is_invariant(a, g));
    CHECK(is_invariant(a, f + g));
    CHECK(is_invariant(a, f * g));
    CHECK(is_invariant(a, f.scale(Rational(-7, 3))));
    CHECK(is_invariant(a, f * f * g + g.scale(2) - Poly::constant(3, 5)));
}

TEST_CASE("stable invariance witnesses") {
    GaAction translate2 = GaAction::make_coaction(Z({"x1", "x2 + z"}, 2));
    CHECK(stable_invariant_witness(translate2, P("x1", 2), 2).status == Status::verified);

    auto moved = stable_invariant_witness(translate2, P("x2", 2), 2);
    CHECK(moved.status == Status::failed);
    CHECK(moved.clause == WitnessClause::not_invariant);

    GaAction trivial = lnd_exp(LND::make({Poly(1)}));
    auto improper = stable_invariant_witness(trivial, P("x1", 1), 1);
    CHECK(improper.status == Status::failed);
    CHECK(improper.clause == WitnessClause::not_proper);

    // genuine m > n witness: f in k[x1,x2] under an action on k[x1,x2,x3]
    GaAction a3 = lnd_exp(LND::make({Poly(3), P("x1", 3), P("x2", 3)}));
    CHECK(stable_invariant_witness(a3, P("x1^2 + 3", 2), 2).status == Status::verified);
}

TEST_CASE("triviality is equivalent to all generators invariant") {
    GaAction trivial = lnd_exp(LND::make({Poly(2), Poly(2)}));
    GaAction moving = GaAction::make_coaction(Z({"x1", "x2 + x1*z"}, 2));
    for (int i = 0; i < 2; ++i) {
        CHECK(is_invariant(trivial, Poly::variable(2, i)) == trivial.trivial());
    }
    bool all_inv = is_invariant(moving, P("x1", 2)) && is_invariant(moving, P("x2", 2));
    CHECK(all_inv == moving.trivial());
}
