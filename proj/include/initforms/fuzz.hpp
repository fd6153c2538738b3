#pragma once

#include "initforms/actions.hpp"
#include "initforms/weights.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace initforms::fuzz {

// Deterministic generator: identical seeds give identical instance streams
// on every platform (no std distributions, which are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at these sizes.
    int range(int lo, int hi);
    bool chance(int num, int den) { return range(1, den) <= num; }

private:
    std::uint64_t state_;
};

Poly random_poly(Rng& rng, int nvars, int max_terms, int max_exp, bool ensure_nonzero);
Weight random_weight(Rng& rng, int nvars, int d, int lo, int hi);

// Strictly triangular derivation: D(x_1) constant, D(x_i) in k[x1..x_{i-1}],
// locally nilpotent by construction. force_fixed_first pins D(x_1) = 0.
LND random_triangular_lnd(Rng& rng, int m, int max_deg, bool force_fixed_first);

// ---- brute-force oracles -------------------------------------------------
// Independent routes used to cross-check the main implementations. They go
// through exact Gaussian elimination, never through the simplex solver, the
// division algorithm, or the Jacobian screen they are checking.

// p in conv(points \ {p})? Enumerates subsets of size <= dim+1 and solves
// the convex-combination system exactly.
bool in_hull_oracle(const Exponent& p, const std::vector<Exponent>& others);

// Does g divide f, decided by an undetermined-coefficients solve over all
// candidate quotient monomials of total degree deg f - deg g and below.
bool divides_oracle(const Poly& g, const Poly& f);

// Is there a nonzero relation P(p1, p2) = 0 with total degree <= max_deg?
bool annihilating_relation_exists(const Poly& p1, const Poly& p2, int max_deg);

// ---- suites ----------------------------------------------------------------

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    int failures = 0;
    std::map<std::string, int> counters;
    std::vector<std::string> notes;  // first few failure descriptions
};

// Runs a named property suite for `count` instances. Throws Error for an
// unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count);

const std::vector<std::string>& suite_names();

}  // namespace initforms::fuzz
