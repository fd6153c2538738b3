#pragma once

#include "initforms/report.hpp"
#include "initforms/zpoly.hpp"

#include <string>
#include <vector>

namespace initforms {

// Validated coaction sigma: k[x1..xm] -> k[x1..xm][z]. Construction goes
// through make_coaction, which checks both axioms:
//   counit          sigma(x_i) at z = 0 equals x_i;
//   coassociativity (sigma (x) id)(sigma(x_i)) = sigma(x_i)[z -> z1 + z2]
// so unvalidated images can never reach the theorem checkers.
class GaAction {
public:
    static GaAction make_coaction(std::vector<ZPoly> images);

    int m() const { return m_; }
    const std::vector<ZPoly>& images() const { return images_; }
    const ZPoly& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    // The action as a substitution map k[x1..xm] -> k[x1..xm][z].
    AlgebraHom hom() const { return AlgebraHom(m_, images_); }

    // Restriction sigma|k[x1..xn] for n <= m.
    AlgebraHom restrict_to(int n) const;

    // Trivial action: every generator invariant, i.e. all images z-free.
    bool trivial() const;

    // sigma(f) for f in the ambient ring.
    ZPoly apply(const Poly& f) const { return substitute(hom(), f); }

private:
    GaAction(int m, std::vector<ZPoly> images) : m_(m), images_(std::move(images)) {}

    int m_;
    std::vector<ZPoly> images_;
};

// sigma(f) = f, equivalently sigma(f) is z-free; both are asserted together.
bool is_invariant(const GaAction& a, const Poly& f);

// Derivation data D(x_i) with verified local nilpotency on generators
// (enough: the locally nilpotent elements of a derivation form a subalgebra).
class LND {
public:
    static LND make(std::vector<Poly> images, int nilpotency_cap = 64);

    int m() const { return m_; }
    const std::vector<Poly>& images() const { return images_; }
    int cap() const { return cap_; }

    // D(f) = sum_i df/dx_i * D(x_i).
    Poly apply(const Poly& f) const;

private:
    LND(int m, std::vector<Poly> images, int cap) : m_(m), images_(std::move(images)), cap_(cap) {}

    int m_;
    std::vector<Poly> images_;
    int cap_;
};

// exp(zD): sigma(x_i) = sum_j D^j(x_i) z^j / j!, a finite sum by nilpotency.
// The result is revalidated through make_coaction.
GaAction lnd_exp(const LND& d);

// Coordinate system F with inverse G; F o G = G o F = id is verified.
class AutomorphismPair {
public:
    static AutomorphismPair make(std::vector<Poly> f, std::vector<Poly> g);

    int m() const { return m_; }
    const std::vector<Poly>& F() const { return f_; }
    const std::vector<Poly>& G() const { return g_; }

private:
    AutomorphismPair(int m, std::vector<Poly> f, std::vector<Poly> g)
        : m_(m), f_(std::move(f)), g_(std::move(g)) {}

    int m_;
    std::vector<Poly> f_;
    std::vector<Poly> g_;
};

// The translation f_1 -> f_1 + z, f_i -> f_i conjugated back to the x
// coordinates: sigma(x_j) = G_j(F_1 + z, F_2, ..., F_m). Invariance of
// F_2..F_m is spot-checked at construction.
GaAction translation_action(const AutomorphismPair& ap);

// Stable-invariance witness: f in k[x1..xn] embedded in k[x1..xm] must be
// invariant while some x_i with i <= n moves, so the invariant ring misses
// k[x1..xn].
enum class WitnessClause { ok, not_invariant, not_proper };

struct WitnessReport {
    Status status = Status::failed;
    WitnessClause clause = WitnessClause::ok;
    std::string detail;
};

WitnessReport stable_invariant_witness(const GaAction& a, const Poly& f, int n);

}  // namespace initforms
