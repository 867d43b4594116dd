#include "petal/diagram.hpp"

#include <numeric>
#include <string>

namespace petal {

int LagrangianPetalDiagram::k() const {
    return std::accumulate(twists.begin(), twists.end(), 0);
}

bool LagrangianPetalDiagram::is_standard() const {
    const int nn = n();
    if (nn == 1)
        return twists[0] == 1;
    for (int p = 1; p <= nn; ++p) {
        const int want = perm.h(p) < perm.h(p + 1) ? 1 : 0;
        if (twists[static_cast<size_t>(p) - 1] != want)
            return false;
    }
    return true;
}

LagrangianPetalDiagram canonical_twists(const PetalPermutation& perm) {
    const int n = perm.n();
    std::vector<int> twists(static_cast<size_t>(n), 0);
    if (n == 1) {
        twists[0] = 1;
    } else {
        for (int p = 1; p <= n; ++p)
            if (perm.h(p) < perm.h(p + 1))
                twists[static_cast<size_t>(p) - 1] = 1;
    }
    return LagrangianPetalDiagram{perm, std::move(twists)};
}

long long rotation_number(const LagrangianPetalDiagram& diag) {
    return (diag.n() + 1) / 2 - diag.k();
}

TbBreakdown thurston_bennequin(const LagrangianPetalDiagram& diag) {
    const long long sigma = sigma_sum(diag.perm);
    const int k = diag.k();
    return TbBreakdown{-static_cast<long long>(k) + sigma, k, sigma};
}

LagrangianPetalDiagram stabilize(const LagrangianPetalDiagram& diag, int petal) {
    if (petal < 1 || petal > diag.n())
        fail(Err::IndexOutOfRange, "petal index " + std::to_string(petal) + " out of range");
    LagrangianPetalDiagram out = diag;
    out.twists[static_cast<size_t>(petal) - 1] += 1;
    return out;
}

} // namespace petal
