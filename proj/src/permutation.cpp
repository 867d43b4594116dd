#include "petal/permutation.hpp"

#include <algorithm>
#include <string>

namespace petal {

PetalPermutation PetalPermutation::validate(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0)
        fail(Err::Empty, "empty height sequence");
    if (n % 2 == 0)
        fail(Err::EvenPetalCount,
             "petal count must be odd (got n=" + std::to_string(n) + ")");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            fail(Err::NotBijection,
                 "heights must be a bijection on {1.." + std::to_string(n) + "}");
        seen[static_cast<size_t>(v)] = true;
    }
    return PetalPermutation(std::vector<int>(values.begin(), values.end()));
}

PetalPermutation PetalPermutation::validate(std::initializer_list<int> values) {
    return validate(std::span<const int>(values.begin(), values.size()));
}

int PetalPermutation::h(int i) const {
    const int n = this->n();
    if (i < 1 || i > n + 1)
        fail(Err::IndexOutOfRange, "strand index " + std::to_string(i) + " out of range");
    if (i == n + 1)
        i = 1;
    return h_[static_cast<size_t>(i) - 1];
}

int sign_sigma(const PetalPermutation& perm, int i, int j) {
    const int n = perm.n();
    if (i < 1 || j < 1 || i > n || j > n)
        fail(Err::IndexOutOfRange, "pair index out of range");
    if (i >= j)
        fail(Err::NotStrictlyOrdered, "sign_sigma requires i < j");
    const bool above = perm.h(i) > perm.h(j);
    const bool odd_pair = ((i + j) % 2) != 0;
    return (above != odd_pair) ? 1 : -1;
}

long long sigma_sum(const PetalPermutation& perm) {
    long long total = 0;
    const int n = perm.n();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            total += sign_sigma(perm, i, j);
    return total;
}

PetalPermutation cyclic_shift(const PetalPermutation& perm, int r) {
    const int n = perm.n();
    r = ((r % n) + n) % n;
    std::vector<int> shifted(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        shifted[static_cast<size_t>(i) - 1] = perm.h((i + r - 1) % n + 1);
    return PetalPermutation::validate(shifted);
}

PetalPermutation canonical_rotation(const PetalPermutation& perm) {
    const auto& h = perm.heights();
    const auto pos = std::find(h.begin(), h.end(), 1);
    return cyclic_shift(perm, static_cast<int>(pos - h.begin()));
}

PetalPermutation lambda_family(int n) {
    if (n % 2 == 0)
        fail(Err::EvenPetalCount, "lambda family requires odd n");
    if (n < 3)
        fail(Err::TooSmall, "lambda family requires n >= 3");
    std::vector<int> h(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        h[static_cast<size_t>(i) - 1] = (i % 2 != 0) ? (i + 1) / 2 : (n + 1 + i) / 2;
    return PetalPermutation::validate(h);
}

long long tb_upper_bound(int n) {
    if (n < 1 || n % 2 == 0)
        fail(Err::EvenPetalCount, "bound defined for odd n >= 1");
    const long long q = (n - 1) / 2;
    return q * q - 1;
}

} // namespace petal
