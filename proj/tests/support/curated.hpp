#pragma once

#include "initforms/actions.hpp"
#include "initforms/weights.hpp"

#include <string>
#include <vector>

namespace initforms::testsupport {

// A nontrivial action together with a sample of known kernel elements, used
// to manufacture verified invariants for the theorem checkers.
struct CuratedAction {
    std::string name;
    GaAction action;
    std::vector<Poly> kernel_gens;
    bool from_automorphism_pair = false;
};

// Triangular LND exponentials on 2 and 3 variables plus translations
// conjugated through several coordinate systems.
const std::vector<CuratedAction>& curated_actions();

// Nonzero polynomial combinations of the kernel generators (>= 4 each).
std::vector<Poly> invariant_combos(const CuratedAction& ca);

// 1-based index of the first generator the action moves; 0 for trivial.
int first_moving_index(const GaAction& a);

// Restriction of f in k[x1..xm] to k[x1..xn]; f must only use x1..xn.
Poly shrink_to(const Poly& f, int n);

// Subring size making (action, f) a valid stability witness: large enough to
// contain f and to include a moving generator.
int witness_n(const GaAction& a, const Poly& f);

// Weights over n variables used across the acceptance suite (five d = 1 and
// one d = 2 lexicographic).
std::vector<Weight> sample_weights(int n);

}  // namespace initforms::testsupport
