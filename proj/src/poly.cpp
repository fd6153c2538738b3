#include "initforms/poly.hpp"

#include <algorithm>
#include <random>

namespace initforms {

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw VarOutOfRange("variable index out of range");
    return monomial(nvars, Exponent::unit(nvars, index), Rational(1));
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (e.size() != nvars_) throw ArityMismatch("exponent length differs from nvars");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(o);
    if (this == &o) {  // doubling; iterating o while mutating *this would alias
        for (auto& [e, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(o);
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Poly Poly::scale(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw Error("negative polynomial power");
    Poly acc = Poly::constant(nvars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw VarOutOfRange("derivative variable out of range");
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int k = e[var];
        if (k == 0) continue;
        std::vector<int> d = e.entries();
        d[static_cast<std::size_t>(var)] = k - 1;
        r.add_term(Exponent(std::move(d)), c * k);
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[static_cast<std::size_t>(i)];
        sum += t;
    }
    return sum;
}

Poly Poly::embed(int new_nvars) const {
    if (new_nvars < nvars_) throw ArityMismatch("embedding cannot drop variables");
    std::vector<int> where(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) where[static_cast<std::size_t>(i)] = i;
    return map_exponents(new_nvars, where);
}

Poly Poly::map_exponents(int new_nvars, const std::vector<int>& where) const {
    if (static_cast<int>(where.size()) != nvars_) throw ArityMismatch("variable map has wrong length");
    Poly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        std::vector<int> d(static_cast<std::size_t>(new_nvars), 0);
        for (int i = 0; i < nvars_; ++i) {
            int t = where[static_cast<std::size_t>(i)];
            if (t < 0 || t >= new_nvars) throw VarOutOfRange("variable map target out of range");
            d[static_cast<std::size_t>(t)] += e[i];
        }
        r.add_term(Exponent(std::move(d)), c);
    }
    return r;
}

int Poly::vars_used() const {
    int hi = 0;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) hi = std::max(hi, i + 1);
    return hi;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& polys) {
    if (polys.empty()) return {};
    int m = polys.front().nvars();
    std::vector<std::vector<Poly>> rows;
    rows.reserve(polys.size());
    for (const Poly& p : polys) {
        if (p.nvars() != m) throw ArityMismatch("jacobian inputs live in different rings");
        std::vector<Poly> row;
        row.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) row.push_back(p.derivative(j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<Poly> exact_divide(const Poly& g, const Poly& f) {
    if (g.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    if (f.nvars() != g.nvars()) throw ArityMismatch("dividend and divisor live in different rings");
    Poly q(f.nvars());
    Poly r = f;
    const auto& [ge, gc] = g.leading_term();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading_term();
        auto d = re.minus(ge);
        // A term that cannot be cancelled would land in the remainder for
        // good, so divisibility fails the moment one appears.
        if (!d) return std::nullopt;
        Rational c = rc / gc;
        q.add_term(*d, c);
        r -= g * Poly::monomial(f.nvars(), *d, c);
    }
    return q;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 0) throw Error("determinant of empty matrix");
    int nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Poly det(nv);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

namespace {

// Row-echelon rank of an exact rational matrix.
int rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

bool algebraically_independent(const std::vector<Poly>& polys) {
    if (polys.empty()) return true;
    std::size_t n = polys.size();
    int m = polys.front().nvars();
    if (static_cast<int>(n) > m)
        throw TooManyPolys("more polynomials than variables: always dependent");

    auto jac = jacobian(polys);

    // Screen: rank only drops on a measure-zero set, so a full-rank random
    // evaluation already witnesses a nonzero minor. Fixed seed keeps the
    // whole routine deterministic.
    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ull);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> point;
        point.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) point.emplace_back(1 + static_cast<long>(rng() % 10000));
        std::vector<std::vector<Rational>> num(n, std::vector<Rational>(static_cast<std::size_t>(m)));
        for (std::size_t i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) num[i][static_cast<std::size_t>(j)] = jac[i][static_cast<std::size_t>(j)].evaluate(point);
        if (rational_rank(std::move(num)) == static_cast<int>(n)) return true;
    }

    // Deterministic fallback: some n x n minor must be a nonzero polynomial.
    std::vector<int> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
    while (true) {
        std::vector<std::vector<Poly>> sub;
        sub.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Poly> row;
            row.reserve(n);
            for (std::size_t j = 0; j < n; ++j) row.push_back(jac[i][static_cast<std::size_t>(cols[j])]);
            sub.push_back(std::move(row));
        }
        if (!poly_det(sub).is_zero()) return true;
        // next combination of column indices
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && cols[static_cast<std::size_t>(i)] == m - static_cast<int>(n) + i) --i;
        if (i < 0) break;
        ++cols[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) cols[j] = cols[j - 1] + 1;
    }
    return false;
}

}  // namespace initforms
