#pragma once

#include "initforms/errors.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace initforms {

// Exponent vector of a monomial: fixed length, all entries >= 0. Entries are
// bounded so that sums stay inside int range instead of overflowing.
inline constexpr int kMaxExponent = 1 << 24;

class Exponent {
public:
    explicit Exponent(std::vector<int> entries) : e_(std::move(entries)) {
        for (int v : e_) {
            if (v < 0) throw Error("negative entry in exponent vector");
            if (v > kMaxExponent) throw Error("exponent exceeds the supported bound");
        }
    }

    static Exponent zeros(int n) { return Exponent(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    static Exponent unit(int n, int i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        return Exponent(std::move(e));
    }

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    int total_degree() const {
        long long sum = std::accumulate(e_.begin(), e_.end(), 0LL);
        if (sum > (1LL << 30)) throw Error("total degree exceeds the supported bound");
        return static_cast<int>(sum);
    }

    bool is_zero() const {
        for (int v : e_)
            if (v != 0) return false;
        return true;
    }

    // Every coordinate nonzero: the intruder condition on a polytope vertex.
    bool all_positive() const {
        for (int v : e_)
            if (v == 0) return false;
        return true;
    }

    Exponent operator+(const Exponent& o) const {
        check_size(o);
        std::vector<int> r(e_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];  // bound re-checked by the ctor
        return Exponent(std::move(r));
    }

    // Componentwise difference; nullopt when any entry would go negative
    // (monomial divisibility test).
    std::optional<Exponent> minus(const Exponent& o) const {
        check_size(o);
        std::vector<int> r(e_);
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] -= o.e_[i];
            if (r[i] < 0) return std::nullopt;
        }
        return Exponent(std::move(r));
    }

    bool operator==(const Exponent& o) const { return e_ == o.e_; }
    bool operator!=(const Exponent& o) const { return e_ != o.e_; }

private:
    void check_size(const Exponent& o) const {
        if (size() != o.size()) throw ArityMismatch("exponent lengths differ");
    }

    std::vector<int> e_;
};

// Graded lexicographic: total degree first, then lex with x1 heaviest.
inline bool grlex_less(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw ArityMismatch("exponent lengths differ");
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.entries() < b.entries();
}

struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(b, a); }
};

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_less(a, b); }
};

}  // namespace initforms
