#include "initforms/fuzz.hpp"

#include "initforms/newton.hpp"
#include "initforms/parse.hpp"
#include "initforms/theorems.hpp"

#include <algorithm>
#include <functional>

namespace initforms::fuzz {

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
    // splitmix64: tiny, deterministic, platform-independent
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
    if (hi < lo) throw Error("empty range");
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Poly random_poly(Rng& rng, int nvars, int max_terms, int max_exp, bool ensure_nonzero) {
    Poly p(nvars);
    int terms = rng.range(ensure_nonzero ? 1 : 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = rng.range(0, max_exp);
        int c = rng.range(-9, 9);
        if (c == 0) c = 1;
        p.add_term(Exponent(std::move(e)), Rational(c));
    }
    if (ensure_nonzero && p.is_zero()) p.add_term(Exponent::zeros(nvars), Rational(1));
    return p;
}

namespace {

// Terms drawn with bounded total degree (rejection sampling).
Poly random_poly_totdeg(Rng& rng, int nvars, int max_terms, int max_totdeg, bool ensure_nonzero) {
    Poly p(nvars);
    int terms = rng.range(ensure_nonzero ? 1 : 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        int budget = rng.range(0, max_totdeg);
        for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(rng.range(0, nvars - 1))];
        int c = rng.range(-9, 9);
        if (c == 0) c = 1;
        p.add_term(Exponent(std::move(e)), Rational(c));
    }
    if (ensure_nonzero && p.is_zero()) p.add_term(Exponent::zeros(nvars), Rational(1));
    return p;
}

}  // namespace

Weight random_weight(Rng& rng, int nvars, int d, int lo, int hi) {
    std::vector<GroupElem> per_var;
    per_var.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) coords.emplace_back(rng.range(2 * lo, 2 * hi), 2);
        per_var.emplace_back(std::move(coords));
    }
    return Weight(std::move(per_var));
}

LND random_triangular_lnd(Rng& rng, int m, int max_deg, bool force_fixed_first) {
    std::vector<Poly> images;
    images.reserve(static_cast<std::size_t>(m));
    images.push_back(force_fixed_first ? Poly(m) : Poly::constant(m, Rational(rng.range(-2, 2))));
    for (int i = 1; i < m; ++i) {
        if (rng.chance(1, 4)) {
            images.push_back(Poly(m));
            continue;
        }
        Poly small = random_poly_totdeg(rng, i, 3, max_deg, true);
        images.push_back(small.embed(m));
    }
    return LND::make(std::move(images));
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination used by the oracles only.

namespace {

struct LinSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<Rational> solution;  // valid when unique
};

LinSolve gauss_solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        std::swap(b[piv], b[row]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinSolve out;
    out.consistent = true;
    for (std::size_t i = row; i < rows; ++i)
        if (b[i] != 0) out.consistent = false;
    out.unique = out.consistent && pivot_col.size() == cols;
    if (out.unique) {
        out.solution.assign(cols, Rational(0));
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            out.solution[pivot_col[r]] = b[r] / m[r][pivot_col[r]];
    }
    return out;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// All exponents in nvars variables with total degree <= max_deg.
void enumerate_monomials(int nvars, int max_deg, std::vector<int>& cur, std::vector<Exponent>& out) {
    if (static_cast<int>(cur.size()) == nvars) {
        out.emplace_back(cur);
        return;
    }
    int used = 0;
    for (int v : cur) used += v;
    for (int k = 0; k + used <= max_deg; ++k) {
        cur.push_back(k);
        enumerate_monomials(nvars, max_deg, cur, out);
        cur.pop_back();
    }
}

std::vector<Exponent> monomials_up_to(int nvars, int max_deg) {
    std::vector<int> cur;
    std::vector<Exponent> out;
    enumerate_monomials(nvars, max_deg, cur, out);
    return out;
}

}  // namespace

bool in_hull_oracle(const Exponent& p, const std::vector<Exponent>& others) {
    if (others.empty()) return false;
    int n = p.size();
    std::size_t max_size = std::min(others.size(), static_cast<std::size_t>(n) + 1);

    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t want) {
        if (pick.size() == want) {
            std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1,
                                                 std::vector<Rational>(want, Rational(0)));
            std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
            for (std::size_t k = 0; k < want; ++k) {
                for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][k] = others[pick[k]][i];
                m[static_cast<std::size_t>(n)][k] = 1;
            }
            for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = p[i];
            b[static_cast<std::size_t>(n)] = 1;
            LinSolve s = gauss_solve(std::move(m), std::move(b));
            if (!s.consistent || !s.unique) return false;  // dependent subsets are covered elsewhere
            for (const Rational& lambda : s.solution)
                if (lambda < 0) return false;
            return true;
        }
        for (std::size_t i = start; i < others.size(); ++i) {
            pick.push_back(i);
            if (search(i + 1, want)) return true;
            pick.pop_back();
        }
        return false;
    };

    for (std::size_t s = 1; s <= max_size; ++s) {
        pick.clear();
        if (search(0, s)) return true;
    }
    return false;
}

bool divides_oracle(const Poly& g, const Poly& f) {
    if (g.is_zero()) throw DivisionByZeroPoly("oracle division by zero");
    if (f.is_zero()) return true;
    int dq = f.total_degree() - g.total_degree();
    if (dq < 0) return false;
    int n = f.nvars();

    std::vector<Exponent> qmons = monomials_up_to(n, dq);
    // Row per monomial of the product space, column per candidate quotient
    // monomial, entries from g's coefficients.
    std::map<Exponent, std::size_t, GrlexLess> row_of;
    auto row_index = [&](const Exponent& e) {
        auto [it, inserted] = row_of.emplace(e, row_of.size());
        return it->second;
    };
    std::vector<std::pair<std::size_t, std::pair<std::size_t, Rational>>> entries;
    for (std::size_t col = 0; col < qmons.size(); ++col)
        for (const auto& [eg, cg] : g.terms())
            entries.push_back({row_index(eg + qmons[col]), {col, cg}});
    for (const auto& [e, c] : f.terms()) row_index(e);

    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(qmons.size(), Rational(0)));
    std::vector<Rational> b(row_of.size(), Rational(0));
    for (const auto& [r, ce] : entries) m[r][ce.first] += ce.second;
    for (const auto& [e, c] : f.terms()) b[row_of.at(e)] = c;

    return gauss_solve(std::move(m), std::move(b)).consistent;
}

bool annihilating_relation_exists(const Poly& p1, const Poly& p2, int max_deg) {
    if (p1.nvars() != p2.nvars()) throw ArityMismatch("oracle inputs live in different rings");

    // Columns: monomials y1^a y2^b with a + b <= max_deg; rows: x-monomials
    // of the expansions. Nontrivial nullspace == low-degree relation.
    std::vector<std::pair<int, int>> cols;
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; a + b <= max_deg; ++b) cols.push_back({a, b});

    std::map<Exponent, std::size_t, GrlexLess> row_of;
    std::vector<Poly> expansions;
    expansions.reserve(cols.size());
    for (const auto& [a, b] : cols) {
        Poly prod = p1.pow(a) * p2.pow(b);
        for (const auto& [e, c] : prod.terms()) row_of.emplace(e, row_of.size());
        expansions.push_back(std::move(prod));
    }

    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t col = 0; col < cols.size(); ++col)
        for (const auto& [e, c] : expansions[col].terms()) m[row_of.at(e)][col] = c;

    return matrix_rank(std::move(m)) < static_cast<int>(cols.size());
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

void fail(SuiteResult& res, const std::string& note) {
    ++res.failures;
    if (res.notes.size() < 5) res.notes.push_back(note);
}

void suite_product_law(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 4);
        int d = rng.range(1, 2);
        Poly f = random_poly(rng, n, 12, 3, true);
        Poly g = random_poly(rng, n, 12, 3, true);
        Weight w = random_weight(rng, n, d, -3, 3);
        Poly fg = f * g;
        if (!(wdeg(fg, w) == wdeg(f, w) + wdeg(g, w))) {
            fail(res, "deg_w(fg) != deg_w f + deg_w g at instance " + std::to_string(it));
            continue;
        }
        if (initial_form(fg, w) != initial_form(f, w) * initial_form(g, w)) {
            fail(res, "(fg)^w != f^w g^w at instance " + std::to_string(it));
            continue;
        }
        Poly fw = initial_form(f, w);
        if (initial_form(fw, w) != fw) fail(res, "initial form not idempotent at instance " + std::to_string(it));
    }
}

void suite_sum_initial(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 3);
        int d = rng.range(1, 2);
        Weight w = random_weight(rng, n, d, -2, 2);
        std::vector<Poly> fs;

        bool force_cancel = rng.chance(1, 3);
        if (force_cancel) {
            Poly g = random_poly(rng, n, 4, 2, true);
            Poly h = initial_form(g, w);
            GroupElem top = wdeg(g, w).value();
            auto below = [&](const Poly& p) {
                Poly out(n);
                for (const auto& [e, c] : p.terms())
                    if (weight_dot(e, w) < top) out.add_term(e, c);
                return out;
            };
            fs.push_back(g);
            fs.push_back(-h + below(random_poly(rng, n, 3, 2, false)));
            int extra = rng.range(0, 3);
            for (int k = 0; k < extra; ++k) fs.push_back(below(random_poly(rng, n, 3, 2, false)));
        } else {
            int l = rng.range(1, 5);
            for (int k = 0; k < l; ++k) fs.push_back(random_poly(rng, n, 4, 2, rng.chance(9, 10)));
            bool any = false;
            for (const Poly& f : fs) any = any || !f.is_zero();
            if (!any) fs.push_back(random_poly(rng, n, 4, 2, true));
        }

        SumInitialReport rep = check_sum_initial(fs, w);

        // Independent classification: recompute delta, I, and s from scratch.
        DegValue delta;
        for (const Poly& f : fs) {
            DegValue dv = wdeg(f, w);
            if (delta < dv) delta = dv;
        }
        Poly s(n);
        for (const Poly& f : fs)
            if (wdeg(f, w) == delta) s += initial_form(f, w);

        if (s.is_zero()) {
            ++res.counters["hypothesis_fails"];
            if (rep.status != Status::hypothesis_fails)
                fail(res, "cancelling family not classified hypothesis_fails at instance " + std::to_string(it));
        } else {
            ++res.counters["verified"];
            if (rep.status != Status::verified) {
                fail(res, "non-cancelling family not verified at instance " + std::to_string(it));
                continue;
            }
            Poly total(n);
            for (const Poly& f : fs) total += f;
            if (initial_form(total, w) != s || rep.sum_of_initials != s)
                fail(res, "lemma equality broken at instance " + std::to_string(it));
        }
    }
}

void suite_canonical_form(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 4);
        if (rng.chance(1, 3)) {
            // z-polynomials run through the same grammar with z admitted
            ZPoly p = ZPoly::from_poly_in_z(random_poly(rng, n + 1, 12, 3, false));
            std::string s1 = format_zpoly(p);
            ZPoly q = parse_zpoly(s1, n);
            if (q != p || format_zpoly(q) != s1) {
                fail(res, "z-poly canonical form broken at instance " + std::to_string(it) + ": " + s1);
            }
            continue;
        }
        Poly p = random_poly(rng, n, 12, 3, false);
        std::string s1 = format_poly(p);
        Poly q = parse_poly(s1, n);
        if (q != p) {
            fail(res, "parse(format(p)) != p at instance " + std::to_string(it) + ": " + s1);
            continue;
        }
        if (format_poly(q) != s1) fail(res, "format not a fixed point at instance " + std::to_string(it));
    }
}

void suite_ring_axioms(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 4);
        Poly f = random_poly(rng, n, 6, 3, false);
        Poly g = random_poly(rng, n, 6, 3, false);
        Poly h = random_poly(rng, n, 6, 3, false);
        bool ok = (f + g) + h == f + (g + h);
        ok = ok && f * g == g * f;
        ok = ok && (f * g) * h == f * (g * h);
        ok = ok && f * (g + h) == f * g + f * h;
        ok = ok && (f - f).is_zero();
        if (!ok) fail(res, "ring axiom broken at instance " + std::to_string(it));
    }
}

void suite_substitution_hom(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 3);
        int m = rng.range(1, 3);
        std::vector<ZPoly> images;
        for (int i = 0; i < n; ++i) {
            ZPoly img = ZPoly::from_poly(random_poly(rng, m, 3, 2, false));
            if (rng.chance(1, 2)) img += ZPoly::z(m) * ZPoly::from_poly(random_poly(rng, m, 2, 1, false));
            images.push_back(std::move(img));
        }
        AlgebraHom hom(n, std::move(images));
        Poly f = random_poly(rng, n, 4, 2, false);
        Poly g = random_poly(rng, n, 4, 2, false);
        if (substitute(hom, f * g) != substitute(hom, f) * substitute(hom, g)) {
            fail(res, "substitution not multiplicative at instance " + std::to_string(it));
            continue;
        }
        if (substitute(hom, f + g) != substitute(hom, f) + substitute(hom, g))
            fail(res, "substitution not additive at instance " + std::to_string(it));
    }
}

void suite_divide_soundness(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 3);
        if (rng.chance(1, 2)) {
            // constructed to divide
            Poly g = random_poly_totdeg(rng, n, 3, 3, true);
            Poly q = random_poly_totdeg(rng, n, 3, 3, true);
            Poly f = g * q;
            auto r = exact_divide(g, f);
            if (!r || *r != q || g * *r != f) {
                fail(res, "constructed quotient not recovered at instance " + std::to_string(it));
                continue;
            }
            ++res.counters["divisible"];
        } else {
            Poly g = random_poly_totdeg(rng, n, 3, 3, true);
            Poly f = random_poly_totdeg(rng, n, 4, 6, true);
            auto r = exact_divide(g, f);
            bool oracle = divides_oracle(g, f);
            if (r.has_value()) {
                ++res.counters["divisible"];
                if (g * *r != f || !oracle) {
                    fail(res, "claimed quotient fails g*q == f at instance " + std::to_string(it));
                    continue;
                }
            } else {
                ++res.counters["not_divisible"];
                if (oracle) fail(res, "NotDivisible contradicted by oracle at instance " + std::to_string(it));
            }
        }
    }
}

void suite_indep_oracle(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 3);
        if (rng.chance(1, 2)) {
            // dependent by construction, with a relation of degree <= 3
            Poly p1 = random_poly_totdeg(rng, m, 3, 2, true);
            Poly p2(m);
            int k = rng.range(1, 3);
            Rational c(rng.range(1, 4));
            p2 = p1.pow(k).scale(c);
            if (rng.chance(1, 2) && k <= 2) p2 += p1.scale(Rational(rng.range(-3, 3)));
            ++res.counters["constructed_dependent"];
            bool ind = algebraically_independent({p1, p2});
            bool rel = annihilating_relation_exists(p1, p2, 3);
            if (ind || !rel) {
                fail(res, "constructed dependence missed at instance " + std::to_string(it));
                continue;
            }
        } else {
            Poly p1 = random_poly_totdeg(rng, m, 3, 3, true);
            Poly p2 = random_poly_totdeg(rng, m, 3, 3, true);
            bool ind = algebraically_independent({p1, p2});
            bool rel = annihilating_relation_exists(p1, p2, 3);
            ++res.counters[ind ? "independent" : "dependent"];
            // A low-degree relation refutes independence; a random dependent
            // pair may only have higher-degree relations, so only this
            // direction is a theorem.
            if (ind && rel) fail(res, "independent pair admits a relation at instance " + std::to_string(it));
        }
    }
}

void suite_hull_oracle(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int dim = rng.range(1, 4);
        int npts = rng.range(1, 12);
        std::vector<Exponent> pts;
        for (int k = 0; k < npts; ++k) {
            std::vector<int> e(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i)] = rng.range(0, 6);
            pts.emplace_back(std::move(e));
        }
        PointSet set(std::move(pts));

        std::vector<Exponent> lp_vertices;
        for (const VertexCertificate& cert : hull_vertices(set)) {
            lp_vertices.push_back(cert.vertex);
            if (!certificate_valid(cert, set)) {
                fail(res, "certificate fails direct re-verification at instance " + std::to_string(it));
            }
        }
        for (const Exponent& p : set.points()) {
            std::vector<Exponent> others;
            for (const Exponent& q : set.points())
                if (q != p) others.push_back(q);
            bool lp_vertex = std::find(lp_vertices.begin(), lp_vertices.end(), p) != lp_vertices.end();
            bool oracle_vertex = !in_hull_oracle(p, others);
            if (lp_vertex != oracle_vertex) {
                fail(res, "LP and oracle disagree at instance " + std::to_string(it));
                break;
            }
        }
    }
}

void suite_coaction_axioms(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 4);
        LND d = random_triangular_lnd(rng, m, 3, rng.chance(1, 2));
        try {
            GaAction a = lnd_exp(d);
            GaAction::make_coaction(a.images());  // explicit re-validation
            bool d_zero = true;
            for (const Poly& img : d.images()) d_zero = d_zero && img.is_zero();
            if (d_zero != a.trivial()) {
                fail(res, "triviality disagrees with the zero derivation at instance " + std::to_string(it));
                continue;
            }
            // Trivial iff every generator is invariant, both directions.
            bool all_inv = true;
            for (int i = 0; i < m; ++i) all_inv = all_inv && is_invariant(a, Poly::variable(m, i));
            if (all_inv != a.trivial())
                fail(res, "triviality characterization broken at instance " + std::to_string(it));
            ++res.counters[a.trivial() ? "trivial" : "nontrivial"];
        } catch (const Error& e) {
            fail(res, std::string("valid exponential rejected: ") + e.what());
        }
    }
}

void suite_coaction_mutants(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 4);
        LND d = random_triangular_lnd(rng, m, 2, rng.chance(1, 2));
        std::vector<ZPoly> images = lnd_exp(d).images();
        int victim = rng.range(0, m - 1);
        bool counit_mutant = it % 2 == 0;
        if (counit_mutant) {
            int c = rng.range(1, 5);
            images[static_cast<std::size_t>(victim)] += ZPoly::from_poly(Poly::constant(m, Rational(c)));
        } else {
            // Touch only z^k with k >= 2: counit survives, coassociativity
            // cannot (the z-linear part pins down the whole exponential).
            int c = rng.range(1, 5);
            int k = rng.range(2, 3);
            ZPoly bump(m);
            bump.add(k, Poly::constant(m, Rational(c)));
            images[static_cast<std::size_t>(victim)] += bump;
        }
        try {
            GaAction::make_coaction(images);
            fail(res, "mutant accepted at instance " + std::to_string(it));
        } catch (const CounitFails& e) {
            ++res.counters["counit_rejected"];
            if (!counit_mutant || e.index != victim)
                fail(res, "wrong rejection class for coassoc mutant at instance " + std::to_string(it));
        } catch (const CoassocFails&) {
            ++res.counters["coassoc_rejected"];
            if (counit_mutant)
                fail(res, "wrong rejection class for counit mutant at instance " + std::to_string(it));
        }
    }
}

void suite_prop23(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 3);
        int m = rng.range(1, 3);
        std::vector<ZPoly> images;
        for (int i = 0; i < n; ++i)
            images.push_back(ZPoly::from_poly(random_poly_totdeg(rng, m, 4, 4, true)));
        AlgebraHom psi(n, std::move(images));
        Weight u = random_weight(rng, m, rng.range(1, 2), -3, 3);
        Poly f = random_poly_totdeg(rng, n, 5, 4, false);

        try {
            TwistData t = build_twist(psi, u);
            CompatReport rep = check_initial_compat(t, f);
            if (rep.status == Status::failed) {
                fail(res, "initial-form compatibility broken at instance " + std::to_string(it));
                continue;
            }
            ++res.counters[rep.status == Status::verified ? "verified" : "hypothesis_fails"];
        } catch (const Error& e) {
            fail(res, std::string("unexpected error: ") + e.what());
        }
    }
}

void suite_thm24i(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 3);
        GaAction a = lnd_exp(random_triangular_lnd(rng, m, 2, true));
        int guard = 0;
        while (a.trivial() && ++guard < 32) a = lnd_exp(random_triangular_lnd(rng, m, 2, true));
        if (a.trivial()) continue;

        Weight w = random_weight(rng, m, 1, -2, 2);
        try {
            PhiData pd = build_u(a.hom(), w, w);  // v = w since source = target here

            // phi reread as a z-free map into the m+1-variable ring, l = m.
            std::vector<ZPoly> wide;
            for (const ZPoly& img : a.images()) wide.push_back(ZPoly::from_poly(img.to_poly_in_z()));
            TwistData t = build_twist(AlgebraHom(m, std::move(wide)), pd.u);

            // f a polynomial in the fixed variable x1: invariant by construction.
            Poly fx1 = random_poly_totdeg(rng, 1, 3, 4, true);
            Poly f = fx1.embed(m);
            MembershipReport rep = check_initial_membership(t, m, f);
            if (rep.status != Status::verified)
                fail(res, "initial form left the invariant subring at instance " + std::to_string(it));
            ++res.counters["checked"];
        } catch (const Error& e) {
            fail(res, std::string("unexpected error: ") + e.what());
        }
    }
}

// Derivations of the shape D = (0, a(x1), b(x1), c(x1), ...) admit the
// visible kernel generators x1 and D(x_j) x_i - D(x_i) x_j.
struct ActionWithKernel {
    GaAction action;
    std::vector<Poly> kernel_gens;
};

ActionWithKernel random_action_with_kernel(Rng& rng, int m) {
    std::vector<Poly> images;
    images.push_back(Poly(m));
    for (int i = 1; i < m; ++i) {
        Poly a1 = random_poly_totdeg(rng, 1, 2, 2, !rng.chance(1, 4));
        images.push_back(a1.embed(m));
    }
    LND d = LND::make(images);
    std::vector<Poly> gens;
    gens.push_back(Poly::variable(m, 0));
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Poly gen = images[static_cast<std::size_t>(j)] * Poly::variable(m, i) -
                       images[static_cast<std::size_t>(i)] * Poly::variable(m, j);
            if (!gen.is_zero()) gens.push_back(gen);
        }
    return {lnd_exp(d), std::move(gens)};
}

Poly random_kernel_combo(Rng& rng, const std::vector<Poly>& gens, int m) {
    Poly f = Poly::constant(m, Rational(rng.range(-2, 2)));
    int pieces = rng.range(1, 3);
    for (int k = 0; k < pieces; ++k) {
        Poly term = Poly::constant(m, Rational(rng.range(-3, 3)));
        if (term.is_zero()) term = Poly::constant(m, 1);
        int factors = rng.range(1, 2);
        for (int t = 0; t < factors; ++t) {
            const Poly& gen = gens[static_cast<std::size_t>(rng.range(0, static_cast<int>(gens.size()) - 1))];
            term = term * gen.pow(rng.range(1, 2));
        }
        f += term;
    }
    return f;
}

void suite_invariant_subalgebra(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 4);
        ActionWithKernel ak = random_action_with_kernel(rng, m);
        Poly f = random_kernel_combo(rng, ak.kernel_gens, m);
        Poly g = random_kernel_combo(rng, ak.kernel_gens, m);
        if (!is_invariant(ak.action, f) || !is_invariant(ak.action, g)) {
            fail(res, "kernel combination moves at instance " + std::to_string(it));
            continue;
        }
        Rational c(rng.range(-4, 4), rng.chance(1, 2) ? 2 : 1);
        bool ok = is_invariant(ak.action, f + g) && is_invariant(ak.action, f * g) &&
                  is_invariant(ak.action, f.scale(c));
        if (!ok) fail(res, "invariants not closed under ring operations at instance " + std::to_string(it));
    }
}

void suite_factorial_closedness(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int m = rng.range(2, 4);
        ActionWithKernel ak = random_action_with_kernel(rng, m);
        Poly f = random_kernel_combo(rng, ak.kernel_gens, m);
        Poly g = random_kernel_combo(rng, ak.kernel_gens, m);
        if (f.is_zero() || g.is_zero()) continue;
        Poly h = f * g;
        if (!is_invariant(ak.action, h)) {
            fail(res, "product of invariants moves at instance " + std::to_string(it));
            continue;
        }
        if (!is_invariant(ak.action, f) || !is_invariant(ak.action, g))
            fail(res, "factor of an invariant product moves at instance " + std::to_string(it));
        ++res.counters["sampled"];
    }
}

void suite_monomial_criterion(Rng& rng, int count, SuiteResult& res) {
    for (int it = 0; it < count; ++it) {
        int n = rng.range(1, 4);
        Poly f = random_poly(rng, n, 10, 4, true);
        CriterionReport rep = check_monomial_criterion(f);
        if (rep.status != Status::verified)
            fail(res, "criterion reports inconsistency at instance " + std::to_string(it));
    }
}

using SuiteFn = void (*)(Rng&, int, SuiteResult&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"product-law", suite_product_law},
        {"sum-initial", suite_sum_initial},
        {"canonical-form", suite_canonical_form},
        {"ring-axioms", suite_ring_axioms},
        {"substitution-hom", suite_substitution_hom},
        {"divide-soundness", suite_divide_soundness},
        {"indep-oracle", suite_indep_oracle},
        {"hull-oracle", suite_hull_oracle},
        {"coaction-axioms", suite_coaction_axioms},
        {"coaction-mutants", suite_coaction_mutants},
        {"prop23", suite_prop23},
        {"thm24i", suite_thm24i},
        {"invariant-subalgebra", suite_invariant_subalgebra},
        {"factorial-closedness", suite_factorial_closedness},
        {"monomial-criterion", suite_monomial_criterion},
    };
    return table;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count) {
    for (const auto& [suite_name, fn] : suite_table()) {
        if (suite_name == name) {
            SuiteResult res;
            res.suite = name;
            res.seed = seed;
            res.count = count;
            Rng rng(seed);
            fn(rng, count, res);
            return res;
        }
    }
    throw Error("unknown fuzz suite: " + name);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

}  // namespace initforms::fuzz
