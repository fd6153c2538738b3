#include "initforms/newton.hpp"

#include "initforms/simplex.hpp"

#include <algorithm>

namespace initforms {

PointSet::PointSet(std::vector<Exponent> points) : pts_(std::move(points)) {
    for (const Exponent& p : pts_)
        if (p.size() != pts_.front().size()) throw ArityMismatch("points have different dimensions");
    std::sort(pts_.begin(), pts_.end(), GrlexLess{});
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

int PointSet::dim() const {
    if (pts_.empty()) throw EmptySet("empty point set has no dimension");
    return pts_.front().size();
}

bool PointSet::contains(const Exponent& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p, GrlexLess{});
}

bool certificate_valid(const VertexCertificate& cert, const PointSet& pts) {
    if (cert.margin <= 0) return false;
    if (static_cast<int>(cert.weight.size()) != cert.vertex.size()) return false;
    if (!pts.contains(cert.vertex)) return false;
    auto dot = [&](const Exponent& e) {
        Rational s = 0;
        for (int i = 0; i < e.size(); ++i) s += cert.weight[static_cast<std::size_t>(i)] * e[i];
        return s;
    };
    Rational at_vertex = dot(cert.vertex);
    for (const Exponent& q : pts.points()) {
        if (q == cert.vertex) continue;
        if (at_vertex < dot(q) + cert.margin) return false;
    }
    return true;
}

namespace {

// p in conv(others)? Encoded as the equality system
//   sum_q lambda_q * q = p,  sum_q lambda_q = 1,  lambda >= 0.
// Infeasibility yields a Farkas vector whose first n entries strictly
// separate p from the others. nullopt when p is not a vertex.
std::optional<VertexCertificate> certify_vertex(const Exponent& p, const std::vector<Exponent>& others) {
    int n = p.size();
    if (others.empty()) {
        // One-point set: vertex by convention, zero functional, vacuous margin.
        return VertexCertificate{p, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), Rational(1)};
    }
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n) + 1,
                                            std::vector<Rational>(others.size(), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::size_t k = 0; k < others.size(); ++k) {
        for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][k] = others[k][i];
        rows[static_cast<std::size_t>(n)][k] = 1;
    }
    for (int i = 0; i < n; ++i) rhs[static_cast<std::size_t>(i)] = p[i];
    rhs[static_cast<std::size_t>(n)] = 1;

    FeasibilityResult lp = equality_feasibility(rows, rhs);
    if (lp.feasible) return std::nullopt;

    std::vector<Rational> w(lp.farkas.begin(), lp.farkas.begin() + n);
    auto dot = [&](const Exponent& e) {
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += w[static_cast<std::size_t>(i)] * e[i];
        return s;
    };
    Rational at_p = dot(p);
    bool first = true;
    Rational margin = 0;
    for (const Exponent& q : others) {
        Rational gap = at_p - dot(q);
        if (first || gap < margin) margin = gap;
        first = false;
    }
    if (margin <= 0) throw CheckFailed("simplex returned a non-separating Farkas certificate");
    return VertexCertificate{p, std::move(w), std::move(margin)};
}

}  // namespace

std::vector<VertexCertificate> hull_vertices(const PointSet& pts) {
    if (pts.empty()) throw EmptySet("convex hull of the empty set");
    std::vector<VertexCertificate> out;
    for (const Exponent& p : pts.points()) {
        std::vector<Exponent> others;
        others.reserve(pts.size() - 1);
        for (const Exponent& q : pts.points())
            if (q != p) others.push_back(q);
        if (auto cert = certify_vertex(p, others)) out.push_back(std::move(*cert));
    }
    return out;
}

std::optional<VertexCertificate> separating_weight(const Exponent& p, const PointSet& pts) {
    if (!pts.contains(p)) throw PointNotInSet("point is not in the set");
    std::vector<Exponent> others;
    for (const Exponent& q : pts.points())
        if (q != p) others.push_back(q);
    return certify_vertex(p, others);
}

std::vector<Exponent> intruders(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("intruders of the zero polynomial");
    std::vector<Exponent> out;
    for (const VertexCertificate& cert : hull_vertices(PointSet::support_of(f)))
        if (cert.vertex.all_positive()) out.push_back(cert.vertex);
    return out;
}

Weight lift_weight(const std::vector<Rational>& w) {
    std::vector<GroupElem> per_var;
    per_var.reserve(w.size());
    for (const auto& v : w) per_var.push_back(GroupElem::scalar(v));
    return Weight(std::move(per_var));
}

CriterionReport check_monomial_criterion(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("criterion check on the zero polynomial");
    PointSet supp = PointSet::support_of(f);
    bool every_vertex_misses_a_variable = true;
    bool intruder_found = false;

    for (const VertexCertificate& cert : hull_vertices(supp)) {
        Weight w = lift_weight(cert.weight);
        Poly init = initial_form(f, w);
        if (init.term_count() != 1 || init.leading_term().first != cert.vertex) {
            return {Status::failed, "initial form at a separating weight is not the vertex monomial"};
        }
        // x_i divides the vertex monomial iff the i-th coordinate is >= 1;
        // run it through exact division anyway since that is the claim.
        bool missed = false;
        for (int i = 0; i < f.nvars(); ++i) {
            if (!exact_divide(Poly::variable(f.nvars(), i), init)) {
                missed = true;
                break;
            }
        }
        if (!missed) every_vertex_misses_a_variable = false;
        if (cert.vertex.all_positive()) intruder_found = true;
    }

    if (intruder_found == !every_vertex_misses_a_variable) {
        return {Status::verified,
                intruder_found ? "intruder present and witnessed by a fully divisible vertex monomial"
                               : "no intruder; every vertex monomial misses some variable"};
    }
    return {Status::failed, "intruder status disagrees with the vertex-monomial divisibility dictionary"};
}

}  // namespace initforms
