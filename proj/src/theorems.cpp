#include "initforms/theorems.hpp"

#include "initforms/parse.hpp"

namespace initforms {

namespace {

// u over m+1 slots applies to elements of k[y1..ym][z] via their
// (m+1)-variable polynomial form.
DegValue zwdeg(const ZPoly& p, const Weight& u) { return wdeg(p.to_poly_in_z(), u); }

}  // namespace

TwistData build_twist(const AlgebraHom& psi, const Weight& u) {
    if (!psi.z_free()) throw Error("twists are defined for z-free homomorphisms");
    if (u.nvars() != psi.tgt_nvars()) throw ArityMismatch("weight length differs from target variable count");

    std::vector<GroupElem> degs;
    std::vector<ZPoly> twisted;
    degs.reserve(static_cast<std::size_t>(psi.src_nvars()));
    twisted.reserve(static_cast<std::size_t>(psi.src_nvars()));
    for (int i = 0; i < psi.src_nvars(); ++i) {
        Poly img = psi.image(i).at_z_zero();
        if (img.is_zero()) throw ZeroImage(i);
        degs.push_back(wdeg(img, u).value());
        twisted.push_back(ZPoly::from_poly(initial_form(img, u)));
    }
    return TwistData{psi, u, Weight(std::move(degs)), AlgebraHom(psi.src_nvars(), std::move(twisted))};
}

CompatReport check_initial_compat(const TwistData& t, const Poly& f) {
    if (f.nvars() != t.psi.src_nvars()) throw ArityMismatch("polynomial does not live in the source ring");
    int m = t.psi.tgt_nvars();

    Poly rhs = substitute_poly(t.psi_u, initial_form(f, t.u_psi));
    if (rhs.is_zero()) {
        return {Status::hypothesis_fails, Poly(m), rhs,
                "psi^u(f^{u_psi}) = 0: the proposition's premise is absent"};
    }
    Poly psi_f = substitute_poly(t.psi, f);
    Poly lhs = initial_form(psi_f, t.u);
    if (lhs == rhs) return {Status::verified, lhs, rhs, ""};
    return {Status::failed, lhs, rhs, "psi(f)^u differs from psi^u(f^{u_psi})"};
}

MembershipReport check_initial_membership(const TwistData& t, int l, const Poly& f) {
    if (f.nvars() != t.psi.src_nvars()) throw ArityMismatch("polynomial does not live in the source ring");
    int m = t.psi.tgt_nvars();
    if (l < 1 || l > m) throw ArityMismatch("subring index out of range");

    Poly psi_f = substitute_poly(t.psi, f);
    if (psi_f.vars_used() > l)
        throw PreconditionFails("psi(f) uses x" + std::to_string(psi_f.vars_used()) +
                                ", so f is outside the designated subring's preimage");

    Poly image = substitute_poly(t.psi_u, initial_form(f, t.u_psi));
    int used = image.vars_used();
    if (used > l) {
        return {Status::failed, used,
                "psi^u(f^{u_psi}) involves x" + std::to_string(used) + " beyond x" + std::to_string(l)};
    }
    return {Status::verified, 0, ""};
}

ZDegreeData phi_z_degree(const AlgebraHom& phi, const Weight& v, const Weight& w) {
    if (v.nvars() != phi.tgt_nvars()) throw ArityMismatch("v length differs from target variable count");
    if (w.nvars() != phi.src_nvars()) throw ArityMismatch("w length differs from source variable count");
    if (v.dim() != w.dim()) throw DimMismatch("v and w have different group dimensions");

    std::optional<ZDegreeData> best;
    for (int i = 0; i < phi.src_nvars(); ++i) {
        for (const auto& [j, p] : phi.image(i).zcoeffs()) {
            if (j == 0) continue;
            GroupElem cand = (wdeg(p, v).value() - w[i]).scale(Rational(1, j));
            if (!best || best->value < cand) best = ZDegreeData{cand, i, j};
        }
    }
    if (!best) throw NoZTerms("phi maps into the target polynomial ring: no z term anywhere");
    return *best;
}

StarReport check_star(const AlgebraHom& phi, const Weight& v, const Weight& w) {
    if (v.nvars() != phi.tgt_nvars()) throw ArityMismatch("v length differs from target variable count");
    if (w.nvars() != phi.src_nvars()) throw ArityMismatch("w length differs from source variable count");
    if (v.dim() != w.dim()) throw DimMismatch("v and w have different group dimensions");

    std::vector<Poly> forms;
    forms.reserve(static_cast<std::size_t>(phi.src_nvars()));
    for (int i = 0; i < phi.src_nvars(); ++i) {
        Poly p0 = phi.image(i).at_z_zero();
        if (p0.is_zero() || wdeg(p0, v).value() != w[i]) {
            return {Status::failed, "degree", i + 1,
                    "deg_v p_" + std::to_string(i + 1) + "(0) differs from w_" + std::to_string(i + 1)};
        }
        forms.push_back(initial_form(p0, v));
    }

    bool independent;
    try {
        independent = algebraically_independent(forms);
    } catch (const TooManyPolys&) {
        independent = false;
    }
    if (!independent)
        return {Status::failed, "independence", 0, "the v-initial forms p_i(0)^v are algebraically dependent"};
    return {Status::verified, "", 0, ""};
}

PhiData build_u(const AlgebraHom& phi, const Weight& v, const Weight& w) {
    StarReport star = check_star(phi, v, w);
    if (star.status != Status::verified) throw StarFails("condition (*) fails: " + star.detail);

    ZDegreeData zd = phi_z_degree(phi, v, w);

    std::vector<GroupElem> slots = v.per_var();
    slots.push_back(-zd.value);
    Weight u(std::move(slots));

    // (a) u_phi = w.
    for (int i = 0; i < phi.src_nvars(); ++i) {
        if (zwdeg(phi.image(i), u) != DegValue(w[i]))
            throw CheckFailed("deg_u phi(x" + std::to_string(i + 1) + ") differs from w");
    }

    // phi^u images: initial forms in the m+1-variable ring.
    std::vector<ZPoly> twisted;
    std::vector<Poly> twisted_wide;
    twisted.reserve(static_cast<std::size_t>(phi.src_nvars()));
    for (int i = 0; i < phi.src_nvars(); ++i) {
        Poly wide = initial_form(phi.image(i).to_poly_in_z(), u);
        twisted_wide.push_back(wide);
        twisted.push_back(ZPoly::from_poly_in_z(wide));
    }

    // (b) the maximizing z-power survives into phi^u(x_{i0}) with coefficient
    // p_{i0,j0}^v.
    const ZPoly& winner = twisted[static_cast<std::size_t>(zd.i0)];
    Poly expected = initial_form(phi.image(zd.i0).coeff(zd.j0), v);
    if (winner.coeff(zd.j0) != expected)
        throw CheckFailed("z^" + std::to_string(zd.j0) + " is missing from phi^u(x" +
                          std::to_string(zd.i0 + 1) + ")");

    // (c) algebraic independence of the twisted images (this is what makes
    // phi^u injective for a homomorphism out of a polynomial ring over Q).
    if (!algebraically_independent(twisted_wide))
        throw CheckFailed("phi^u images are algebraically dependent");

    return PhiData{phi, v, w, zd.value, zd.i0, zd.j0, std::move(u), std::move(twisted)};
}

NonDividingReport find_nondividing(const AlgebraHom& phi, const std::vector<Poly>& S,
                                   const std::vector<Poly>& fs, const Weight& w) {
    int n = phi.src_nvars();
    if (fs.empty()) throw EmptyInvariantList("no invariants supplied");
    if (S.empty()) throw SNotFullRank("S is empty");
    for (const Poly& g : S) {
        if (g.nvars() != n) throw ArityMismatch("an element of S lives in the wrong ring");
        if (g.is_zero()) throw ZeroPolynomial("S contains the zero polynomial");
    }
    for (const Poly& f : fs) {
        if (f.nvars() != n) throw ArityMismatch("an invariant lives in the wrong ring");
        if (f.is_zero()) throw ZeroPolynomial("the invariant list contains the zero polynomial");
    }
    if (w.nvars() != n) throw ArityMismatch("weight length differs from variable count");

    // trd_k k[S] = n: some n-subset of S must be algebraically independent.
    bool full_rank = false;
    std::vector<int> cols(static_cast<std::size_t>(n));
    if (static_cast<int>(S.size()) >= n) {
        for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<Poly> sub;
            sub.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) sub.push_back(S[static_cast<std::size_t>(cols[static_cast<std::size_t>(i)])]);
            if (algebraically_independent(sub)) {
                full_rank = true;
                break;
            }
            int i = n - 1;
            while (i >= 0 && cols[static_cast<std::size_t>(i)] == static_cast<int>(S.size()) - n + i) --i;
            if (i < 0) break;
            ++cols[static_cast<std::size_t>(i)];
            for (std::size_t k = static_cast<std::size_t>(i) + 1; k < static_cast<std::size_t>(n); ++k)
                cols[k] = cols[k - 1] + 1;
        }
    }
    if (!full_rank) throw SNotFullRank("no n algebraically independent elements in S");

    // Membership in the invariant subring, per supplied sample.
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (!substitute(phi, fs[k]).z_free())
            throw PreconditionFails("f_" + std::to_string(k + 1) + " is not phi-invariant");
    }

    NonDividingReport rep;
    rep.divides.assign(S.size(), std::vector<bool>(fs.size(), false));
    std::vector<Poly> initials;
    initials.reserve(fs.size());
    for (const Poly& f : fs) initials.push_back(initial_form(f, w));

    for (std::size_t gi = 0; gi < S.size(); ++gi) {
        bool divides_some = false;
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            bool d = exact_divide(S[gi], initials[fi]).has_value();
            rep.divides[gi][fi] = d;
            divides_some = divides_some || d;
        }
        if (!divides_some && !rep.witness) rep.witness = gi;
    }

    if (rep.witness) {
        rep.status = Status::verified;
        rep.detail = "witness g = " + format_poly(S[*rep.witness]);
    } else {
        rep.status = Status::failed;
        rep.detail = "every element of S divides some f^w despite verified hypotheses";
    }
    return rep;
}

IntruderReport check_no_intruder_stable(const Poly& f, const GaAction& a, int n) {
    if (f.is_zero()) throw ZeroPolynomial("the zero polynomial has no Newton polytope");
    WitnessReport wr = stable_invariant_witness(a, f, n);
    if (wr.status != Status::verified)
        throw WitnessInvalid("stability witness rejected: " + wr.detail);

    IntruderReport rep;
    rep.offending = intruders(f);
    if (rep.offending.empty()) {
        rep.status = Status::verified;
    } else {
        rep.status = Status::failed;
        rep.detail = "a stable invariant has an intruder vertex";
    }
    return rep;
}

NonDividingReport check_coords_instance(const AutomorphismPair& ap, int n,
                                        const std::vector<Poly>& S, const Weight& w,
                                        const std::vector<Poly>& fs) {
    if (n < 1 || n > ap.m()) throw ArityMismatch("subring index out of range");
    GaAction sigma = translation_action(ap);

    bool moves = false;
    for (int i = 0; i < n; ++i)
        if (sigma.image(i) != ZPoly::from_poly(Poly::variable(ap.m(), i))) moves = true;
    if (!moves) {
        NonDividingReport rep;
        rep.status = Status::hypothesis_fails;
        rep.detail = "k[x1..xn] is fixed by the translation action, so the hypothesis is absent";
        return rep;
    }

    return find_nondividing(sigma.restrict_to(n), S, fs, w);
}

}  // namespace initforms
