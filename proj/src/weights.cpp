#include "initforms/weights.hpp"

namespace initforms {

GroupElem weight_dot(const Exponent& a, const Weight& w) {
    if (a.size() != w.nvars()) throw ArityMismatch("exponent length differs from weight length");
    GroupElem acc = GroupElem::zero(w.dim());
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        acc = acc + w[i].scale(Rational(a[i]));
    }
    return acc;
}

DegValue wdeg(const Poly& f, const Weight& w) {
    if (f.nvars() != w.nvars()) throw ArityMismatch("polynomial and weight have different variable counts");
    DegValue best;  // -infinity
    for (const auto& [e, c] : f.terms()) {
        DegValue d(weight_dot(e, w));
        if (best < d) best = d;
    }
    return best;
}

Poly initial_form(const Poly& f, const Weight& w) {
    if (f.nvars() != w.nvars()) throw ArityMismatch("polynomial and weight have different variable counts");
    if (f.is_zero()) return f;
    GroupElem top = wdeg(f, w).value();
    Poly r(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (weight_dot(e, w) == top) r.add_term(e, c);
    return r;
}

SumInitialReport check_sum_initial(const std::vector<Poly>& fs, const Weight& w) {
    if (fs.empty()) throw EmptyList("no polynomials supplied");
    bool all_zero = true;
    for (const Poly& f : fs)
        if (!f.is_zero()) all_zero = false;
    if (all_zero) throw AllZero("every summand is zero");

    SumInitialReport rep{Status::failed, {}, Poly(fs.front().nvars()), ""};

    DegValue delta;
    for (const Poly& f : fs) {
        DegValue d = wdeg(f, w);
        if (delta < d) delta = d;
    }
    Poly s(fs.front().nvars());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (wdeg(fs[i], w) == delta) {
            rep.argmax.push_back(i);
            s += initial_form(fs[i], w);
        }
    }
    rep.sum_of_initials = s;

    if (s.is_zero()) {
        rep.status = Status::hypothesis_fails;
        rep.detail = "maximal-degree initial forms cancel; the lemma's premise is absent";
        return rep;
    }

    Poly total(fs.front().nvars());
    for (const Poly& f : fs) total += f;
    if (initial_form(total, w) == s) {
        rep.status = Status::verified;
    } else {
        rep.status = Status::failed;
        rep.detail = "initial form of the sum differs from the sum of maximal initial forms";
    }
    return rep;
}

}  // namespace initforms
