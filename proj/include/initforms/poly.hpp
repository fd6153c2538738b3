#pragma once

#include "initforms/exponent.hpp"
#include "initforms/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace initforms {

// Multivariate polynomial over Q in canonical form: a term map holding only
// nonzero coefficients, keyed by exponent vectors of length nvars. Terms are
// stored in descending graded-lex order, so begin() is the leading term.
// Values are immutable in spirit: every operation returns a fresh Poly.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    explicit Poly(int nvars) : nvars_(check_nvars(nvars)) {}

    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Exponent::zeros(nvars), c);
        return p;
    }

    static Poly variable(int nvars, int index);

    static Poly monomial(int nvars, const Exponent& e, const Rational& c) {
        Poly p(nvars);
        if (e.size() != nvars) throw ArityMismatch("exponent length differs from nvars");
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Coefficient at e; zero when the monomial is absent.
    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total_degree(); }

    const std::pair<const Exponent, Rational>& leading_term() const {
        if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
        return *terms_.begin();
    }

    std::vector<Exponent> support() const {
        std::vector<Exponent> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    // Accumulate c at e and drop the entry if the sum cancels.
    void add_term(const Exponent& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scale(const Rational& c) const;
    Poly pow(int k) const;

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Reinterpret in a ring with more variables, the original ones keeping
    // their indices (the k[x1..xn] -> k[x1..xm] embedding).
    Poly embed(int new_nvars) const;

    // Send variable i to position where[i] in a ring with new_nvars variables.
    Poly map_exponents(int new_nvars, const std::vector<int>& where) const;

    // 1 + highest variable index actually used; 0 for constants.
    int vars_used() const;

private:
    static int check_nvars(int n) {
        if (n < 1) throw ArityMismatch("variable count must be positive");
        return n;
    }
    void check_same_ring(const Poly& o) const {
        if (nvars_ != o.nvars_) throw ArityMismatch("polynomials live in different rings");
    }

    int nvars_;
    TermMap terms_;
};

// Entry (i,j) is d(polys[i])/dx_j; all inputs must share nvars.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& polys);

// Quotient f/g in canonical form when g divides f exactly over Q; nullopt
// otherwise. Single-divisor division with leading-term cancellation under
// graded-lex; zero remainder iff divisible since coefficients form a field.
std::optional<Poly> exact_divide(const Poly& g, const Poly& f);

// Symbolic determinant by cofactor expansion; fine at the sizes used here.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

// Jacobian criterion for algebraic independence over Q (characteristic zero).
// A random-evaluation screen witnesses full rank early; the deterministic
// fallback enumerates all n x n minors symbolically. Throws TooManyPolys when
// more polynomials than variables are supplied.
bool algebraically_independent(const std::vector<Poly>& polys);

}  // namespace initforms
