#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "petal/diagram.hpp"
#include "petal/permutation.hpp"

using namespace petal;

namespace {

// Enumerates all height permutations with h(1) = 1.
std::vector<PetalPermutation> canonical_perms(int n) {
    std::vector<int> tail(static_cast<size_t>(n) - 1);
    std::iota(tail.begin(), tail.end(), 2);
    std::vector<PetalPermutation> out;
    do {
        std::vector<int> h{1};
        h.insert(h.end(), tail.begin(), tail.end());
        out.push_back(PetalPermutation::validate(h));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

} // namespace

TEST_CASE("validate_permutation accepts bijections on odd n") {
    auto p = PetalPermutation::validate({1, 4, 2, 5, 3});
    CHECK(p.n() == 5);
    CHECK(p.h(2) == 4);
    CHECK(p.h(6) == 1); // cyclic wrap
}

TEST_CASE("validate_permutation rejects bad input") {
    CHECK_THROWS_AS(PetalPermutation::validate(std::vector<int>{}), Error);
    try {
        PetalPermutation::validate({1, 2});
        FAIL("expected EvenPetalCount");
    } catch (const Error& e) {
        CHECK(e.code() == Err::EvenPetalCount);
    }
    try {
        PetalPermutation::validate({1, 3, 3});
        FAIL("expected NotBijection");
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotBijection);
    }
}

TEST_CASE("sign_sigma on (1,3,2) matches the four-case table") {
    auto p = PetalPermutation::validate({1, 3, 2});
    CHECK(sign_sigma(p, 1, 2) == 1);  // h(1)<h(2), f=1
    CHECK(sign_sigma(p, 1, 3) == -1); // h(1)<h(3), f=0
    CHECK(sign_sigma(p, 2, 3) == -1); // h(2)>h(3), f=1
    CHECK_THROWS_AS(sign_sigma(p, 2, 2), Error);
    CHECK_THROWS_AS(sign_sigma(p, 0, 2), Error);
}

TEST_CASE("canonical twists sit on cyclic ascents") {
    auto d132 = canonical_twists(PetalPermutation::validate({1, 3, 2}));
    CHECK(d132.twists == std::vector<int>{1, 0, 0});
    CHECK(d132.k() == 1);
    CHECK(d132.is_standard());

    auto d5 = canonical_twists(PetalPermutation::validate({1, 4, 2, 5, 3}));
    CHECK(d5.twists == std::vector<int>{1, 0, 1, 0, 0});
    CHECK(d5.k() == 2);

    auto d1 = canonical_twists(PetalPermutation::validate({1}));
    CHECK(d1.k() == 1);
}

TEST_CASE("rotation number (n+1)/2 - k") {
    auto d5 = canonical_twists(PetalPermutation::validate({1, 4, 2, 5, 3}));
    CHECK(rotation_number(d5) == 1);
    auto d1 = canonical_twists(PetalPermutation::validate({1}));
    CHECK(rotation_number(d1) == 0);
    LagrangianPetalDiagram d7{PetalPermutation::validate({1, 5, 2, 6, 3, 7, 4}),
                              {1, 1, 1, 1, 0, 0, 0}};
    CHECK(d7.k() == 4);
    CHECK(rotation_number(d7) == 0);
}

TEST_CASE("thurston-bennequin values frozen by hand evaluation") {
    auto tb132 = thurston_bennequin(canonical_twists(PetalPermutation::validate({1, 3, 2})));
    CHECK(tb132.sigma_sum == -1);
    CHECK(tb132.k == 1);
    CHECK(tb132.tb == -2);

    auto tb1 = thurston_bennequin(canonical_twists(PetalPermutation::validate({1})));
    CHECK(tb1.sigma_sum == 0);
    CHECK(tb1.tb == -1);

    auto tb5 = thurston_bennequin(canonical_twists(PetalPermutation::validate({1, 4, 2, 5, 3})));
    CHECK(tb5.sigma_sum == -4);
    CHECK(tb5.tb == -6);
}

TEST_CASE("canonical rotation shifts the start so h(1)=1") {
    CHECK(canonical_rotation(PetalPermutation::validate({2, 1, 3})).heights() ==
          std::vector<int>{1, 3, 2});
    CHECK(canonical_rotation(PetalPermutation::validate({1, 4, 2, 5, 3})).heights() ==
          std::vector<int>{1, 4, 2, 5, 3});
    CHECK(canonical_rotation(PetalPermutation::validate({3, 1, 2})).heights() ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("lambda family instantiation") {
    CHECK(lambda_family(3).heights() == std::vector<int>{1, 3, 2});
    CHECK(lambda_family(5).heights() == std::vector<int>{1, 4, 2, 5, 3});
    CHECK(lambda_family(7).heights() == std::vector<int>{1, 5, 2, 6, 3, 7, 4});
    CHECK_THROWS_AS(lambda_family(4), Error);
    CHECK_THROWS_AS(lambda_family(1), Error);
}

TEST_CASE("tb upper bound formula") {
    CHECK(tb_upper_bound(3) == 0);
    CHECK(tb_upper_bound(5) == 3);
    CHECK(tb_upper_bound(9) == 15);
}

TEST_CASE("stabilize drops tb and rot by one") {
    auto d1 = canonical_twists(PetalPermutation::validate({1}));
    auto s1 = stabilize(d1, 1);
    CHECK(s1.k() == 2);
    CHECK(thurston_bennequin(s1).tb == -2);
    CHECK(rotation_number(s1) == -1);

    auto d132 = canonical_twists(PetalPermutation::validate({1, 3, 2}));
    auto s2 = stabilize(d132, 2);
    CHECK(s2.k() == 2);
    CHECK(thurston_bennequin(s2).tb == -3);
    CHECK(rotation_number(s2) == 0);
    CHECK(!s2.is_standard()); // the extra twist is off the ascent set

    auto s3 = stabilize(stabilize(d132, 1), 1);
    CHECK(thurston_bennequin(s3).tb == thurston_bennequin(d132).tb - 2);
    CHECK_THROWS_AS(stabilize(d132, 4), Error);
}

TEST_CASE("cyclic relabeling invariance of tb and rot") {
    for (int n : {3, 5, 7}) {
        for (const auto& p : canonical_perms(n)) {
            const auto base = thurston_bennequin(canonical_twists(p));
            const auto rot_base = rotation_number(canonical_twists(p));
            for (int r = 0; r < n; ++r) {
                const auto shifted = canonical_twists(cyclic_shift(p, r));
                CHECK(thurston_bennequin(shifted).tb == base.tb);
                CHECK(rotation_number(shifted) == rot_base);
            }
        }
    }
}

TEST_CASE("sigma row of strand 1 cancels when h(1)=1") {
    for (int n : {3, 5, 7}) {
        for (const auto& p : canonical_perms(n)) {
            long long row = 0;
            for (int j = 2; j <= n; ++j)
                row += sign_sigma(p, 1, j);
            CHECK(row == 0);
        }
    }
}

TEST_CASE("square exclusion: no all-positive 2x2 sigma square") {
    for (int n : {3, 5, 7}) {
        for (const auto& p : canonical_perms(n)) {
            for (int i = 1; i + 1 < n; ++i) {
                for (int j = i + 2; j <= n - 1; ++j) {
                    const bool all_pos = sign_sigma(p, i, j) == 1 && sign_sigma(p, i + 1, j) == 1 &&
                                         sign_sigma(p, i, j + 1) == 1 &&
                                         sign_sigma(p, i + 1, j + 1) == 1;
                    CHECK_FALSE(all_pos);
                }
            }
        }
    }
}

TEST_CASE("sigma sum bound and k >= 1 and parity, exhaustive small n") {
    for (int n : {3, 5, 7}) {
        const long long q = (n - 1) / 2;
        for (const auto& p : canonical_perms(n)) {
            const auto diag = canonical_twists(p);
            const auto tb = thurston_bennequin(diag);
            CHECK(tb.sigma_sum <= q * q);
            CHECK(diag.k() >= 1);
            CHECK((tb.tb + rotation_number(diag)) % 2 != 0);
            CHECK(tb.tb <= tb_upper_bound(n));
        }
    }
}
