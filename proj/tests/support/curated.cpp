#include "support/curated.hpp"

#include "initforms/parse.hpp"

#include <algorithm>

namespace initforms::testsupport {

namespace {

Poly P(const std::string& s, int n) { return parse_poly(s, n); }

CuratedAction from_lnd(std::string name, std::vector<Poly> images,
                       std::vector<Poly> kernel_gens) {
    GaAction a = lnd_exp(LND::make(std::move(images)));
    return CuratedAction{std::move(name), std::move(a), std::move(kernel_gens), false};
}

CuratedAction from_pair(std::string name, std::vector<Poly> f, std::vector<Poly> g,
                        std::vector<Poly> kernel_gens) {
    GaAction a = translation_action(AutomorphismPair::make(std::move(f), std::move(g)));
    return CuratedAction{std::move(name), std::move(a), std::move(kernel_gens), true};
}

}  // namespace

const std::vector<CuratedAction>& curated_actions() {
    static const std::vector<CuratedAction> suite = [] {
        std::vector<CuratedAction> out;

        // triangular derivations on k[x1,x2]
        out.push_back(from_lnd("lnd2-slice", {Poly(2), P("x1", 2)}, {P("x1", 2)}));
        out.push_back(from_lnd("lnd2-square", {Poly(2), P("x1^2", 2)}, {P("x1", 2)}));
        out.push_back(from_lnd("lnd2-translation", {Poly(2), P("1", 2)}, {P("x1", 2)}));
        out.push_back(from_lnd("lnd2-first-moves", {P("1", 2), Poly(2)}, {P("x2", 2)}));

        // triangular derivations on k[x1,x2,x3]
        out.push_back(from_lnd("lnd3-jordan", {Poly(3), P("x1", 3), P("x2", 3)},
                               {P("x1", 3), P("x2^2 - 2*x1*x3", 3)}));
        out.push_back(from_lnd("lnd3-product", {Poly(3), Poly(3), P("x1*x2", 3)},
                               {P("x1", 3), P("x2", 3)}));
        out.push_back(from_lnd("lnd3-square-step", {Poly(3), P("x1^2", 3), P("x2", 3)},
                               {P("x1", 3), P("x2^2 - 2*x1^2*x3", 3)}));
        out.push_back(from_lnd("lnd3-parallel", {Poly(3), P("x1", 3), P("x1^2", 3)},
                               {P("x1", 3), P("x3 - x1*x2", 3)}));
        out.push_back(from_lnd("lnd3-affine", {Poly(3), P("1", 3), P("x2", 3)},
                               {P("x1", 3), P("2*x3 - x2^2", 3)}));

        // translations conjugated through coordinate systems
        out.push_back(from_pair("pair2-identity", {P("x1", 2), P("x2", 2)},
                                {P("x1", 2), P("x2", 2)}, {P("x2", 2)}));
        out.push_back(from_pair("pair2-swap", {P("x2", 2), P("x1", 2)},
                                {P("x2", 2), P("x1", 2)}, {P("x1", 2)}));
        out.push_back(from_pair("pair2-parabola", {P("x1", 2), P("x2 + x1^2", 2)},
                                {P("x1", 2), P("x2 - x1^2", 2)}, {P("x2 + x1^2", 2)}));
        out.push_back(from_pair("pair3-shear", {P("x1 + x2*x3", 3), P("x2", 3), P("x3", 3)},
                                {P("x1 - x2*x3", 3), P("x2", 3), P("x3", 3)},
                                {P("x2", 3), P("x3", 3)}));
        out.push_back(from_pair("pair3-cycle", {P("x2", 3), P("x3 + x2^2", 3), P("x1", 3)},
                                {P("x3", 3), P("x1", 3), P("x2 - x1^2", 3)},
                                {P("x1", 3), P("x3 + x2^2", 3)}));
        return out;
    }();
    return suite;
}

std::vector<Poly> invariant_combos(const CuratedAction& ca) {
    const auto& gens = ca.kernel_gens;
    int m = ca.action.m();
    Poly one = Poly::constant(m, 1);
    std::vector<Poly> out;
    if (gens.size() == 1) {
        const Poly& g = gens[0];
        out.push_back(g);
        out.push_back(g * g + one.scale(3));
        out.push_back(g * g * g - g.scale(2));
        out.push_back(g * g + g.scale(Rational(1, 2)));
        out.push_back(g * g * g * g - one);
    } else {
        const Poly& g1 = gens[0];
        const Poly& g2 = gens[1];
        out.push_back(g1);
        out.push_back(g2);
        out.push_back(g1 * g2 + one);
        out.push_back(g1 * g1 - g2);
        out.push_back(g2 * g2 + g1 * g2 + one.scale(3));
        out.push_back(g1 * g1 * g1 + g2.scale(Rational(1, 2)));
    }
    return out;
}

int first_moving_index(const GaAction& a) {
    for (int i = 0; i < a.m(); ++i)
        if (a.image(i) != ZPoly::from_poly(Poly::variable(a.m(), i))) return i + 1;
    return 0;
}

Poly shrink_to(const Poly& f, int n) {
    Poly out(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> cut(e.entries().begin(), e.entries().begin() + n);
        for (int i = n; i < e.size(); ++i)
            if (e[i] != 0) throw ArityMismatch("polynomial uses a variable beyond the subring");
        out.add_term(Exponent(std::move(cut)), c);
    }
    return out;
}

int witness_n(const GaAction& a, const Poly& f) {
    return std::max(std::max(first_moving_index(a), f.vars_used()), 1);
}

std::vector<Weight> sample_weights(int n) {
    auto d1 = [n](auto value_at) {
        std::vector<Rational> entries;
        for (int i = 0; i < n; ++i) entries.push_back(value_at(i));
        return Weight::from_rationals(entries);
    };
    std::vector<Weight> out;
    out.push_back(d1([](int) { return Rational(1); }));
    out.push_back(d1([](int i) { return Rational(i + 1); }));
    out.push_back(d1([n](int i) { return Rational(n - i); }));
    out.push_back(d1([](int i) { return Rational(i % 2 == 0 ? 1 : -1); }));
    out.push_back(d1([](int i) { return Rational(2 * i - 1, 2); }));
    // one d = 2 lexicographic weight
    std::vector<GroupElem> lex;
    for (int i = 0; i < n; ++i) lex.push_back(GroupElem({Rational(i + 1), Rational(1 - i)}));
    out.push_back(Weight(std::move(lex)));
    return out;
}

}  // namespace initforms::testsupport
