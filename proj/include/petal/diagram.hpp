#pragma once

#include <vector>

#include "petal/permutation.hpp"

namespace petal {

/// A Lagrangian petal diagram: height permutation plus per-petal half-twist
/// counts. Petal p joins strands p and p+1 (petal n joins strands n and 1).
/// All twists carry the single orientation that contributes -1 to both writhe
/// and turning.
struct LagrangianPetalDiagram {
    PetalPermutation perm;
    std::vector<int> twists; // twists[p-1] = half-twist count on petal p

    int n() const noexcept { return perm.n(); }

    /// Total half-twist count; always >= 1 for a closed Lagrangian curve.
    int k() const;

    /// True when every petal has at most one twist and the twist set equals
    /// the cyclic-ascent set of the height function.
    bool is_standard() const;
};

/// The standard twist placement: one twist on petal p exactly when
/// h(p) < h(p+1) cyclically. For n = 1 the single petal carries one twist
/// (forced by the zero-total-signed-area closure constraint).
LagrangianPetalDiagram canonical_twists(const PetalPermutation& perm);

/// (n+1)/2 - k.
long long rotation_number(const LagrangianPetalDiagram& diag);

struct TbBreakdown {
    long long tb;
    int k;
    long long sigma_sum;
};

/// tb = -k + sum of sign_sigma over all strand pairs.
TbBreakdown thurston_bennequin(const LagrangianPetalDiagram& diag);

/// Adds one half-twist on the chosen petal (1-based); drops tb and rot by 1.
LagrangianPetalDiagram stabilize(const LagrangianPetalDiagram& diag, int petal);

} // namespace petal
