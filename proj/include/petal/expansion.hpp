#pragma once

#include <span>
#include <utility>
#include <vector>

#include "petal/classical.hpp"
#include "petal/diagram.hpp"

namespace petal {

/// Open tangle produced by spreading an n-multi-crossing into pairwise
/// crossings, with per-strand passage bookkeeping for the petal closure.
/// Boundary legs: entry of strand i is leg i-1, exit of strand i is leg n+i-1.
struct ExpansionTangle {
    Diagram diagram;
    std::vector<int> heights;
    // Per strand (0-based), crossing passages in traversal order as
    // (incoming dart, outgoing dart) pairs of the tangle diagram.
    std::vector<std::vector<std::pair<int, int>>> passages;
};

/// Spreads the multi-crossing with heights h into n(n-1)/2 pairwise crossings.
/// The strand with the smaller h value is the over strand at each crossing;
/// crossing geometry follows the chord-angle model (strand i at angle
/// (i-1)*pi/n, direction alternating with parity).
ExpansionTangle spread_multicrossing(std::span<const int> heights);
ExpansionTangle spread_multicrossing(const PetalPermutation& perm);

/// Closes the tangle through the petals of the given diagram, inserting one
/// negative curl crossing per half-twist. The result is a single-component
/// closed diagram with n(n-1)/2 + k crossings.
Diagram close_petals(const ExpansionTangle& tangle, const LagrangianPetalDiagram& diag);

/// Convenience: spread + close with canonical twists.
Diagram expand_petal_diagram(const LagrangianPetalDiagram& diag);

} // namespace petal
