#pragma once

#include "initforms/actions.hpp"
#include "initforms/newton.hpp"
#include "initforms/weights.hpp"
#include "initforms/zpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace initforms {

// psi: k[x1..xn] -> k[y1..ym] together with a target weight u, the induced
// source weight u_psi[i] = deg_u psi(x_i), and the twisted map
// psi^u(x_i) = psi(x_i)^u. Every psi(x_i) must be nonzero.
struct TwistData {
    AlgebraHom psi;
    Weight u;
    Weight u_psi;
    AlgebraHom psi_u;
};

TwistData build_twist(const AlgebraHom& psi, const Weight& u);

// psi(f)^u = psi^u(f^{u_psi}) whenever the right-hand side is nonzero.
struct CompatReport {
    Status status = Status::failed;
    Poly lhs;  // psi(f)^u
    Poly rhs;  // psi^u(f^{u_psi})
    std::string detail;
};

CompatReport check_initial_compat(const TwistData& t, const Poly& f);

// For f with psi(f) in k[y1..yl]: psi^u(f^{u_psi}) stays inside k[y1..yl].
struct MembershipReport {
    Status status = Status::failed;
    int witness_var = 0;  // 1-based offending variable on failure
    std::string detail;
};

MembershipReport check_initial_membership(const TwistData& t, int l, const Poly& f);

// deg_v phi = max over i and j >= 1 of (deg_v p_{i,j} - w_i) / j, where
// phi(x_i) = sum_j p_{i,j} z^j. (i0, j0) records a maximizing pair.
struct ZDegreeData {
    GroupElem value;
    int i0;
    int j0;
};

ZDegreeData phi_z_degree(const AlgebraHom& phi, const Weight& v, const Weight& w);

// Condition (*): the v-initial forms of the constant parts p_i(0) are
// algebraically independent and deg_v p_i(0) = w_i.
struct StarReport {
    Status status = Status::failed;
    std::string failing_clause;  // "degree" or "independence" when failed
    int index = 0;               // 1-based generator for the degree clause
    std::string detail;
};

StarReport check_star(const AlgebraHom& phi, const Weight& v, const Weight& w);

// The weight u = (v, -deg_v phi) over m+1 slots (z last) that drives the
// divisibility-witness search. Construction asserts what makes it work:
// (a) deg_u phi(x_i) = w_i, (b) z^{j0} appears in phi^u(x_{i0}),
// (c) the phi^u images are algebraically independent. Throws StarFails when
// condition (*) is violated and NoZTerms when phi maps into k[y] already.
struct PhiData {
    AlgebraHom phi;
    Weight v;
    Weight w;
    GroupElem deg_v_phi;
    int i0;
    int j0;
    Weight u;                       // over m+1 slots, z last
    std::vector<ZPoly> phi_u_images;
};

PhiData build_u(const AlgebraHom& phi, const Weight& v, const Weight& w);

// Searches S for a g dividing no f^w with f ranging over the supplied
// invariants. Preconditions re-checked here: S contains n algebraically
// independent elements and every f is phi-invariant (phi(f) z-free).
// A missing witness is reported as failed with the divisibility matrix;
// for hypothesis-verified inputs that indicates an implementation bug.
struct NonDividingReport {
    Status status = Status::failed;
    std::optional<std::size_t> witness;        // index into S
    std::vector<std::vector<bool>> divides;    // [g][f]: g | f^w
    std::string detail;
};

NonDividingReport find_nondividing(const AlgebraHom& phi, const std::vector<Poly>& S,
                                   const std::vector<Poly>& fs, const Weight& w);

// No stable invariant has an intruder: requires a Verified stability witness
// for (a, f, n), then asserts intruders(f) is empty.
struct IntruderReport {
    Status status = Status::failed;
    std::vector<Exponent> offending;
    std::string detail;
};

IntruderReport check_no_intruder_stable(const Poly& f, const GaAction& a, int n);

// Coordinate-system instance: builds the translation action of ap, checks
// k[x1..xn] is not contained in the invariant ring, then delegates to
// find_nondividing for the invariants fs against S.
NonDividingReport check_coords_instance(const AutomorphismPair& ap, int n,
                                        const std::vector<Poly>& S, const Weight& w,
                                        const std::vector<Poly>& fs);

}  // namespace initforms
