#pragma once

#include <string>
#include <vector>

#include "petal/classical.hpp"

namespace petal {

/// Non-crossing perfect matching closing an n-strand half-twist tangle.
/// Endpoint ids: 0..n-1 are L1..Ln (left, top to bottom), n..2n-1 are R1..Rn.
/// Non-crossing is judged in the cyclic boundary order L1..Ln, Rn..R1.
struct ClosurePattern {
    int n = 0;
    std::vector<int> mate; // involution over 2n endpoints

    bool is_rainbow() const;
    std::string text() const; // "L1-R1,L2-R2,..."
};

/// The half-twist front tangle: strand entering left position i exits at right
/// position n+1-i; each strand pair crosses exactly once. The front slope rule
/// puts the strand with the smaller slope in front: lower original index over
/// (mirror_convention flips it). Legs follow the ClosurePattern endpoint ids.
Diagram half_twist_tangle(int n, bool mirror_convention = false);

/// Left-i paired with right-i by nested outer arcs.
ClosurePattern rainbow_closure(int n);

/// All Catalan(n) non-crossing perfect matchings, canonically ordered.
std::vector<ClosurePattern> enumerate_closures(int n);

/// Component count of the closure: cycles of the half-twist reversal
/// composed with the matching.
int closure_components(const ClosurePattern& pattern);

/// One reduction step: an adjacent same-side cap retracts two strands.
struct ReductionStep {
    char side = 'L';
    int index = 0;   // cap joins positions index, index+1 on that side
    bool shed = false; // a split unknot came off
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int shed_unknots = 0;
    int base_n = 0;          // strand count at the base case (<= 2)
    int base_components = 0;
    int total_components = 0;
    bool unknot = false;
};

/// Runs the adjacent-cap reduction to a half twist on <= 2 strands. Rainbow
/// patterns with n >= 3 have no adjacent cap and are rejected.
ReductionTrace reduce_closure(const ClosurePattern& pattern);

struct FrontResult {
    bool unknot = false;
    int components = 0;
};

/// Unknot exactly when the closure has a single component.
FrontResult front_verdict(const ClosurePattern& pattern);

/// The closed classical diagram of the pattern applied to the half twist.
Diagram compose_closure(const ClosurePattern& pattern, bool mirror_convention = false);

} // namespace petal
