#pragma once

#include "initforms/poly.hpp"

#include <map>
#include <vector>

namespace initforms {

// Element of k[x1..xn][z], stored as a map from z-exponent to a nonzero Poly
// coefficient. The empty map is the zero element; a map supported on j = 0 is
// a plain polynomial.
class ZPoly {
public:
    explicit ZPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw ArityMismatch("variable count must be positive");
    }

    static ZPoly from_poly(const Poly& p) {
        ZPoly r(p.nvars());
        r.add(0, p);
        return r;
    }

    static ZPoly z(int nvars) {
        ZPoly r(nvars);
        r.add(1, Poly::constant(nvars, 1));
        return r;
    }

    // Reads a Poly over nvars+1 variables, the last one playing the role of z.
    static ZPoly from_poly_in_z(const Poly& p);

    int nvars() const { return nvars_; }
    bool is_zero() const { return zc_.empty(); }
    bool z_free() const { return zc_.empty() || (zc_.size() == 1 && zc_.begin()->first == 0); }
    int z_degree() const { return zc_.empty() ? -1 : zc_.rbegin()->first; }
    const std::map<int, Poly>& zcoeffs() const { return zc_; }

    // Coefficient of z^j; the zero Poly when absent.
    Poly coeff(int j) const {
        auto it = zc_.find(j);
        return it == zc_.end() ? Poly(nvars_) : it->second;
    }

    // Setting z = 0, i.e. the constant coefficient.
    Poly at_z_zero() const { return coeff(0); }

    // The same element as a Poly over nvars+1 variables with z last.
    Poly to_poly_in_z() const;

    void add(int j, const Poly& p);

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly scale(const Rational& c) const;

    bool operator==(const ZPoly& o) const { return nvars_ == o.nvars_ && zc_ == o.zc_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

private:
    int nvars_;
    std::map<int, Poly> zc_;
};

// k-algebra homomorphism k[x1..xn] -> k[y1..ym][z], given by the images of
// the generators. Images with no z part encode a map into k[y1..ym].
class AlgebraHom {
public:
    AlgebraHom(int src_nvars, std::vector<ZPoly> images) : src_(src_nvars), images_(std::move(images)) {
        if (src_ < 1) throw ArityMismatch("source variable count must be positive");
        if (static_cast<int>(images_.size()) != src_)
            throw ArityMismatch("image count differs from source variable count");
        for (const ZPoly& img : images_)
            if (img.nvars() != images_.front().nvars())
                throw ArityMismatch("homomorphism images live in different rings");
    }

    static AlgebraHom identity(int n);

    // A z-free hom from plain polynomial images.
    static AlgebraHom from_polys(const std::vector<Poly>& images);

    int src_nvars() const { return src_; }
    int tgt_nvars() const { return images_.front().nvars(); }
    const std::vector<ZPoly>& images() const { return images_; }
    const ZPoly& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    bool z_free() const {
        for (const ZPoly& img : images_)
            if (!img.z_free()) return false;
        return true;
    }

private:
    int src_;
    std::vector<ZPoly> images_;
};

// phi(f), expanded exactly.
ZPoly substitute(const AlgebraHom& h, const Poly& f);

// Same, for a z-free hom; returns the plain polynomial image.
Poly substitute_poly(const AlgebraHom& h, const Poly& f);

}  // namespace initforms
