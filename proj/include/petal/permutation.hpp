#pragma once

#include <span>
#include <vector>

#include "petal/errors.hpp"

namespace petal {

/// Height assignment of an n-strand multi-crossing: h(i) = k means strand i
/// (in traversal order) is the k-th highest strand, 1 = topmost.
///
/// n must be odd (a petal projection with two or more petals closes into a
/// single component only for odd petal counts); n = 1 is the one-petal curve.
class PetalPermutation {
public:
    /// Validates and wraps a height sequence given in traversal order.
    static PetalPermutation validate(std::span<const int> values);
    static PetalPermutation validate(std::initializer_list<int> values);

    int n() const noexcept { return static_cast<int>(h_.size()); }

    /// Height of strand i, 1-based; h(n+1) wraps to h(1).
    int h(int i) const;

    const std::vector<int>& heights() const noexcept { return h_; }

    bool operator==(const PetalPermutation& other) const = default;

private:
    explicit PetalPermutation(std::vector<int> h) : h_(std::move(h)) {}
    std::vector<int> h_;
};

/// Crossing-sign function of the pair (i, j), i < j, from the height order and
/// the strand-index parity f(i,j) = i + j mod 2:
///   +1  if h(i) > h(j) and f = 0, or h(i) < h(j) and f = 1,
///   -1  otherwise.
int sign_sigma(const PetalPermutation& perm, int i, int j);

/// Sum of sign_sigma over all pairs 1 <= i < j <= n.
long long sigma_sum(const PetalPermutation& perm);

/// Cyclic relabeling of traversal start so that h(1) = 1.
PetalPermutation canonical_rotation(const PetalPermutation& perm);

/// Cyclic relabeling by an arbitrary shift r (strand 1 of the result is
/// strand 1+r of the input).
PetalPermutation cyclic_shift(const PetalPermutation& perm, int r);

/// The (1, (n+3)/2, 2, (n+5)/2, ..., (n-1)/2, n, (n+1)/2) height pattern:
/// odd positions take 1,2,...,(n+1)/2 and even positions (n+3)/2,...,n.
PetalPermutation lambda_family(int n);

/// ((n-1)/2)^2 - 1, the bound on tb over all n-petal projections.
long long tb_upper_bound(int n);

} // namespace petal
