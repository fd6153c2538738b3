#include "initforms/zpoly.hpp"

namespace initforms {

ZPoly ZPoly::from_poly_in_z(const Poly& p) {
    int m = p.nvars() - 1;
    ZPoly r(m);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> xs(e.entries().begin(), e.entries().end() - 1);
        r.add(e[m], Poly::monomial(m, Exponent(std::move(xs)), c));
    }
    return r;
}

Poly ZPoly::to_poly_in_z() const {
    Poly r(nvars_ + 1);
    for (const auto& [j, p] : zc_) {
        for (const auto& [e, c] : p.terms()) {
            std::vector<int> xs = e.entries();
            xs.push_back(j);
            r.add_term(Exponent(std::move(xs)), c);
        }
    }
    return r;
}

void ZPoly::add(int j, const Poly& p) {
    if (j < 0) throw Error("negative z-exponent");
    if (p.nvars() != nvars_) throw ArityMismatch("coefficient lives in the wrong ring");
    if (p.is_zero()) return;
    auto [it, inserted] = zc_.emplace(j, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) zc_.erase(it);
    }
}

ZPoly ZPoly::operator-() const {
    ZPoly r(nvars_);
    for (const auto& [j, p] : zc_) r.zc_.emplace(j, -p);
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (nvars_ != o.nvars_) throw ArityMismatch("z-polynomials live in different rings");
    if (this == &o) {  // doubling; avoid aliased iteration
        for (auto& [j, p] : zc_) p = p.scale(2);
        return *this;
    }
    for (const auto& [j, p] : o.zc_) add(j, p);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (nvars_ != o.nvars_) throw ArityMismatch("z-polynomials live in different rings");
    if (this == &o) {
        zc_.clear();
        return *this;
    }
    for (const auto& [j, p] : o.zc_) add(j, -p);
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.nvars_ != b.nvars_) throw ArityMismatch("z-polynomials live in different rings");
    ZPoly r(a.nvars_);
    for (const auto& [ja, pa] : a.zc_)
        for (const auto& [jb, pb] : b.zc_) r.add(ja + jb, pa * pb);
    return r;
}

ZPoly ZPoly::scale(const Rational& c) const {
    ZPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [j, p] : zc_) r.zc_.emplace(j, p.scale(c));
    return r;
}

AlgebraHom AlgebraHom::identity(int n) {
    std::vector<ZPoly> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images.push_back(ZPoly::from_poly(Poly::variable(n, i)));
    return AlgebraHom(n, std::move(images));
}

AlgebraHom AlgebraHom::from_polys(const std::vector<Poly>& images) {
    std::vector<ZPoly> zs;
    zs.reserve(images.size());
    for (const Poly& p : images) zs.push_back(ZPoly::from_poly(p));
    return AlgebraHom(static_cast<int>(images.size()), std::move(zs));
}

ZPoly substitute(const AlgebraHom& h, const Poly& f) {
    if (f.nvars() != h.src_nvars()) throw ArityMismatch("polynomial does not live in the source ring");
    int m = h.tgt_nvars();

    // Work in k[y1..ym, z] so that plain ring arithmetic does the expansion.
    std::vector<Poly> base;
    base.reserve(static_cast<std::size_t>(h.src_nvars()));
    for (const ZPoly& img : h.images()) base.push_back(img.to_poly_in_z());

    std::vector<std::vector<Poly>> powers(base.size());
    auto power = [&](std::size_t i, int k) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(m + 1, 1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base[i]);
        return cache[static_cast<std::size_t>(k)];
    };

    Poly acc(m + 1);
    for (const auto& [e, c] : f.terms()) {
        Poly t = Poly::constant(m + 1, c);
        for (int i = 0; i < f.nvars(); ++i)
            if (e[i] > 0) t = t * power(static_cast<std::size_t>(i), e[i]);
        acc += t;
    }
    return ZPoly::from_poly_in_z(acc);
}

Poly substitute_poly(const AlgebraHom& h, const Poly& f) {
    if (!h.z_free()) throw Error("substitute_poly requires a z-free homomorphism");
    return substitute(h, f).at_z_zero();
}

}  // namespace initforms
