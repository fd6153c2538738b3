#pragma once

#include "initforms/poly.hpp"
#include "initforms/report.hpp"
#include "initforms/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace initforms {

// Finite set of lattice points in Z^n (all entries >= 0), kept sorted in
// graded-lex order with duplicates removed.
class PointSet {
public:
    explicit PointSet(std::vector<Exponent> points);

    static PointSet support_of(const Poly& f) { return PointSet(f.support()); }

    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    int dim() const;
    const std::vector<Exponent>& points() const { return pts_; }
    bool contains(const Exponent& p) const;

private:
    std::vector<Exponent> pts_;
};

// Witness that `vertex` is a vertex of the convex hull: a rational linear
// functional strictly maximized there. Checkable by direct arithmetic:
// vertex.weight >= q.weight + margin for every other point q, margin > 0.
// The weight is the zero vector only for a one-point set, where strictness
// is vacuous.
struct VertexCertificate {
    Exponent vertex;
    std::vector<Rational> weight;
    Rational margin;
};

// Re-verifies a certificate against the set by plain arithmetic.
bool certificate_valid(const VertexCertificate& cert, const PointSet& pts);

// Vertices of the convex hull: p is one iff it is not a convex combination
// of the other points, decided by exact LP feasibility. Each vertex comes
// with a separating certificate extracted from the phase-1 dual.
std::vector<VertexCertificate> hull_vertices(const PointSet& pts);

// Separating weight for p within pts: nullopt when p is not a hull vertex.
// Rational entries suffice: finitely many lattice points strictly separated
// by a real functional are strictly separated by a nearby rational one.
std::optional<VertexCertificate> separating_weight(const Exponent& p, const PointSet& pts);

// Hull vertices of supp(f) with every coordinate nonzero.
std::vector<Exponent> intruders(const Poly& f);

inline bool has_intruder(const Poly& f) { return !intruders(f).empty(); }

// Checks the vertex/monomial dictionary on f: each hull vertex p carries a
// separating weight w_p with f^{w_p} the single monomial at p, and f has no
// intruder exactly when every such monomial misses some variable. A
// counterexample indicates an implementation bug.
struct CriterionReport {
    Status status = Status::failed;
    std::string detail;
};

CriterionReport check_monomial_criterion(const Poly& f);

// Lifts a rational weight vector to a d = 1 Weight usable with wdeg.
Weight lift_weight(const std::vector<Rational>& w);

}  // namespace initforms
