#include "initforms/actions.hpp"

#include "initforms/parse.hpp"

namespace initforms {

namespace {

// Embeds a ZPoly over m x-variables into k[x1..xm, z1, z2], sending its z to
// the slot z1 (index m) or z2 (index m+1).
Poly embed_two_z(const ZPoly& p, int m, int z_slot) {
    std::vector<int> where(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) where[static_cast<std::size_t>(i)] = i;
    where[static_cast<std::size_t>(m)] = z_slot;
    return p.to_poly_in_z().map_exponents(m + 2, where);
}

}  // namespace

GaAction GaAction::make_coaction(std::vector<ZPoly> images) {
    if (images.empty()) throw ArityMismatch("a coaction needs at least one generator image");
    int m = images.front().nvars();
    if (static_cast<int>(images.size()) != m)
        throw ArityMismatch("image count differs from the ambient variable count");
    for (const ZPoly& img : images)
        if (img.nvars() != m) throw ArityMismatch("coaction images live in different rings");

    // Counit: z = 0 recovers the identity on generators.
    for (int i = 0; i < m; ++i) {
        Poly at_zero = images[static_cast<std::size_t>(i)].at_z_zero();
        if (at_zero != Poly::variable(m, i))
            throw CounitFails(i, "z = 0 yields " + format_poly(at_zero) + " instead of x" + std::to_string(i + 1));
    }

    // Coassociativity, computed in k[x1..xm, z1, z2]: applying sigma to the
    // z-coefficients (z renamed z1, powers moved to z2) must agree with
    // substituting z -> z1 + z2.
    AlgebraHom sigma(m, images);
    Poly z2 = Poly::variable(m + 2, m + 1);
    Poly z1_plus_z2 = Poly::variable(m + 2, m) + z2;
    std::vector<int> keep_x(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) keep_x[static_cast<std::size_t>(k)] = k;
    for (int i = 0; i < m; ++i) {
        const ZPoly& img = images[static_cast<std::size_t>(i)];
        Poly lhs(m + 2);
        Poly rhs(m + 2);
        for (const auto& [j, p] : img.zcoeffs()) {
            lhs += embed_two_z(substitute(sigma, p), m, m) * z2.pow(j);
            rhs += p.map_exponents(m + 2, keep_x) * z1_plus_z2.pow(j);
        }
        if (lhs != rhs)
            throw CoassocFails(i, "sigma x id gives " + format_poly(lhs) + ", z -> z1+z2 gives " + format_poly(rhs));
    }
    return GaAction(m, std::move(images));
}

AlgebraHom GaAction::restrict_to(int n) const {
    if (n < 1 || n > m_) throw ArityMismatch("restriction index out of range");
    std::vector<ZPoly> images(images_.begin(), images_.begin() + n);
    return AlgebraHom(n, std::move(images));
}

bool GaAction::trivial() const {
    for (const ZPoly& img : images_)
        if (!img.z_free()) return false;
    return true;
}

bool is_invariant(const GaAction& a, const Poly& f) {
    if (f.nvars() != a.m()) throw ArityMismatch("polynomial does not live in the action's ring");
    ZPoly image = a.apply(f);
    bool zfree = image.z_free();
    bool fixed = image == ZPoly::from_poly(f);
    // The counit law makes these equivalent; disagreement would be a bug.
    if (zfree != fixed) throw CheckFailed("z-freeness and fixedness disagree for an invariant test");
    return fixed;
}

LND LND::make(std::vector<Poly> images, int nilpotency_cap) {
    if (images.empty()) throw ArityMismatch("a derivation needs at least one generator image");
    int m = static_cast<int>(images.size());
    for (const Poly& p : images)
        if (p.nvars() != m) throw ArityMismatch("derivation images live in the wrong ring");
    if (nilpotency_cap < 1) throw Error("nilpotency cap must be positive");

    LND d(m, std::move(images), nilpotency_cap);
    for (int i = 0; i < m; ++i) {
        Poly g = Poly::variable(m, i);
        int steps = 0;
        while (!g.is_zero()) {
            if (++steps > nilpotency_cap) throw NotLocallyNilpotent(i, nilpotency_cap);
            g = d.apply(g);
        }
    }
    return d;
}

Poly LND::apply(const Poly& f) const {
    if (f.nvars() != m_) throw ArityMismatch("polynomial does not live in the derivation's ring");
    Poly r(m_);
    for (int i = 0; i < m_; ++i) {
        if (images_[static_cast<std::size_t>(i)].is_zero()) continue;
        r += f.derivative(i) * images_[static_cast<std::size_t>(i)];
    }
    return r;
}

GaAction lnd_exp(const LND& d) {
    int m = d.m();
    std::vector<ZPoly> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        ZPoly img(m);
        Poly iter = Poly::variable(m, i);
        Rational factorial = 1;
        int j = 0;
        while (!iter.is_zero()) {
            if (j > 0) factorial *= j;
            img.add(j, iter.scale(1 / factorial));
            iter = d.apply(iter);
            ++j;
        }
        images.push_back(std::move(img));
    }
    return GaAction::make_coaction(std::move(images));
}

AutomorphismPair AutomorphismPair::make(std::vector<Poly> f, std::vector<Poly> g) {
    if (f.empty() || f.size() != g.size()) throw ArityMismatch("coordinate lists have different lengths");
    int m = static_cast<int>(f.size());
    for (const Poly& p : f)
        if (p.nvars() != m) throw ArityMismatch("coordinates live in the wrong ring");
    for (const Poly& p : g)
        if (p.nvars() != m) throw ArityMismatch("inverse coordinates live in the wrong ring");

    AlgebraHom hf = AlgebraHom::from_polys(f);
    AlgebraHom hg = AlgebraHom::from_polys(g);
    for (int j = 0; j < m; ++j) {
        if (substitute_poly(hf, g[static_cast<std::size_t>(j)]) != Poly::variable(m, j))
            throw NotAnAutomorphismPair("G" + std::to_string(j + 1) + "(F) is not x" + std::to_string(j + 1));
        if (substitute_poly(hg, f[static_cast<std::size_t>(j)]) != Poly::variable(m, j))
            throw NotAnAutomorphismPair("F" + std::to_string(j + 1) + "(G) is not x" + std::to_string(j + 1));
    }
    return AutomorphismPair(m, std::move(f), std::move(g));
}

GaAction translation_action(const AutomorphismPair& ap) {
    int m = ap.m();
    // x_j -> G_j(F_1 + z, F_2, ..., F_m)
    std::vector<ZPoly> shifted;
    shifted.reserve(static_cast<std::size_t>(m));
    shifted.push_back(ZPoly::from_poly(ap.F()[0]) + ZPoly::z(m));
    for (int i = 1; i < m; ++i) shifted.push_back(ZPoly::from_poly(ap.F()[static_cast<std::size_t>(i)]));
    AlgebraHom subst(m, std::move(shifted));

    std::vector<ZPoly> images;
    images.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) images.push_back(substitute(subst, ap.G()[static_cast<std::size_t>(j)]));

    GaAction sigma = GaAction::make_coaction(std::move(images));
    for (int i = 1; i < m; ++i)
        if (!is_invariant(sigma, ap.F()[static_cast<std::size_t>(i)]))
            throw CheckFailed("translation action fails to fix coordinate " + std::to_string(i + 1));
    return sigma;
}

WitnessReport stable_invariant_witness(const GaAction& a, const Poly& f, int n) {
    if (n < 1 || n > a.m()) throw ArityMismatch("embedding index out of range");
    if (f.nvars() != n) throw ArityMismatch("polynomial does not live in k[x1..xn]");

    if (!is_invariant(a, f.embed(a.m()))) {
        return {Status::failed, WitnessClause::not_invariant, "f moves under the action"};
    }
    for (int i = 0; i < n; ++i) {
        if (a.image(i) != ZPoly::from_poly(Poly::variable(a.m(), i))) {
            return {Status::verified, WitnessClause::ok,
                    "f is invariant and x" + std::to_string(i + 1) + " moves"};
        }
    }
    return {Status::failed, WitnessClause::not_proper,
            "the invariant ring contains all of k[x1..xn]"};
}

}  // namespace initforms
