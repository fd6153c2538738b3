#pragma once

#include "initforms/poly.hpp"
#include "initforms/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace initforms {

// Element of the totally ordered group Q^d under lexicographic order. The
// order is translation-invariant and Q^d is closed under the rational
// scalings the constructions need (e.g. division by a z-exponent).
class GroupElem {
public:
    explicit GroupElem(std::vector<Rational> coords) : c_(std::move(coords)) {
        if (c_.empty()) throw DimMismatch("group element needs dimension >= 1");
    }

    static GroupElem zero(int dim) { return GroupElem(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0))); }
    static GroupElem scalar(const Rational& v) { return GroupElem({v}); }

    int dim() const { return static_cast<int>(c_.size()); }
    const std::vector<Rational>& coords() const { return c_; }

    // -1 / 0 / +1 lexicographically.
    int cmp(const GroupElem& o) const {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] < o.c_[i]) return -1;
            if (c_[i] > o.c_[i]) return 1;
        }
        return 0;
    }

    bool operator==(const GroupElem& o) const { return cmp(o) == 0; }
    bool operator!=(const GroupElem& o) const { return cmp(o) != 0; }
    bool operator<(const GroupElem& o) const { return cmp(o) < 0; }
    bool operator<=(const GroupElem& o) const { return cmp(o) <= 0; }
    bool operator>(const GroupElem& o) const { return cmp(o) > 0; }
    bool operator>=(const GroupElem& o) const { return cmp(o) >= 0; }

    GroupElem operator+(const GroupElem& o) const {
        check_dim(o);
        std::vector<Rational> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
        return GroupElem(std::move(r));
    }

    GroupElem operator-(const GroupElem& o) const {
        check_dim(o);
        std::vector<Rational> r(c_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
        return GroupElem(std::move(r));
    }

    GroupElem operator-() const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v = -v;
        return GroupElem(std::move(r));
    }

    GroupElem scale(const Rational& s) const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v *= s;
        return GroupElem(std::move(r));
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

private:
    void check_dim(const GroupElem& o) const {
        if (c_.size() != o.c_.size()) throw DimMismatch("group elements have different dimensions");
    }

    std::vector<Rational> c_;
};

// One group element per ambient variable: w = (w_1,...,w_n) in (Q^d)^n.
class Weight {
public:
    explicit Weight(std::vector<GroupElem> per_var) : w_(std::move(per_var)) {
        if (w_.empty()) throw ArityMismatch("weight needs at least one variable");
        for (const GroupElem& g : w_)
            if (g.dim() != w_.front().dim()) throw DimMismatch("weight entries have different dimensions");
    }

    // d = 1 weight from plain rationals.
    static Weight from_rationals(const std::vector<Rational>& entries) {
        std::vector<GroupElem> per_var;
        per_var.reserve(entries.size());
        for (const auto& v : entries) per_var.push_back(GroupElem::scalar(v));
        return Weight(std::move(per_var));
    }

    int nvars() const { return static_cast<int>(w_.size()); }
    int dim() const { return w_.front().dim(); }
    const GroupElem& operator[](int i) const { return w_.at(static_cast<std::size_t>(i)); }
    const std::vector<GroupElem>& per_var() const { return w_; }

private:
    std::vector<GroupElem> w_;
};

// w-degree value: a group element, or -infinity for the zero polynomial.
// -infinity absorbs under addition and is below every group element.
class DegValue {
public:
    DegValue() = default;  // -infinity
    explicit DegValue(GroupElem g) : v_(std::move(g)) {}
    static DegValue minus_infinity() { return DegValue(); }

    bool is_minus_infinity() const { return !v_.has_value(); }
    const GroupElem& value() const {
        if (!v_) throw Error("deg is -infinity");
        return *v_;
    }

    int cmp(const DegValue& o) const {
        if (!v_ && !o.v_) return 0;
        if (!v_) return -1;
        if (!o.v_) return 1;
        return v_->cmp(*o.v_);
    }
    bool operator==(const DegValue& o) const { return cmp(o) == 0; }
    bool operator<(const DegValue& o) const { return cmp(o) < 0; }

    DegValue operator+(const DegValue& o) const {
        if (!v_ || !o.v_) return minus_infinity();
        return DegValue(*v_ + *o.v_);
    }

private:
    std::optional<GroupElem> v_;
};

// a . w = a_1 w_1 + ... + a_n w_n for an exponent vector a.
GroupElem weight_dot(const Exponent& a, const Weight& w);

// deg_w f = max { a . w : a in supp(f) }; -infinity for f = 0.
DegValue wdeg(const Poly& f, const Weight& w);

// Sum of the terms of f attaining deg_w f; zero for f = 0. Ties are kept.
Poly initial_form(const Poly& f, const Weight& w);

// Initial form of a sum: with delta = max_i deg_w f_i, I the argmax set and
// s = sum_{i in I} f_i^w, the claim (f_1+...+f_l)^w = s holds whenever
// s != 0. When s = 0 the hypothesis is absent and nothing is claimed.
struct SumInitialReport {
    Status status = Status::failed;
    std::vector<std::size_t> argmax;  // indices attaining the maximal degree
    Poly sum_of_initials;
    std::string detail;
};

SumInitialReport check_sum_initial(const std::vector<Poly>& fs, const Weight& w);

}  // namespace initforms
