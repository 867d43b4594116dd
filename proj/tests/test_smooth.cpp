#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "petal/expansion.hpp"
#include "petal/smooth.hpp"

using namespace petal;

namespace {

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

TEST_CASE("laurent polynomial arithmetic and printing") {
    const auto delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    CHECK(delta.to_string("A") == "-A^-2 - A^2");
    CHECK((delta * delta).to_string("A") == "A^-4 + 2 + A^4");
    CHECK(LaurentPoly::one().is_one());
    CHECK(delta.inverted_variable() == delta);
    CHECK(delta.eval_at_minus_one() == -2);
    CHECK(LaurentPoly::monomial(1, 3).eval_at_minus_one() == -1);
}

TEST_CASE("unknot fixtures") {
    const auto d = unknot_diagram();
    CHECK(component_count(d) == 1);
    CHECK(determinant(d) == 1);
    CHECK(jones(d).is_one());
}

TEST_CASE("trefoil fixture: writhe +3, det 3, atlas jones") {
    const auto t = trefoil_diagram();
    CHECK(t.crossing_count() == 3);
    CHECK(component_count(t) == 1);
    CHECK(writhe(t) == 3);
    CHECK(determinant(t) == 3);
    CHECK(jones(t).to_string("t", 2) == "-t^-4 + t^-3 + t^-1");
}

TEST_CASE("trefoil mirror pair via braid closures") {
    const auto pos = braid_closure(2, {-1, -1, -1});
    CHECK(writhe(pos) == 3);
    CHECK(determinant(pos) == 3);
    CHECK(jones(pos).to_string("t", 2) == "-t^-4 + t^-3 + t^-1");

    const auto neg = braid_closure(2, {1, 1, 1});
    CHECK(writhe(neg) == -3);
    CHECK(jones(neg) == jones(pos).inverted_variable());
    CHECK(jones(neg).to_string("t", 2) == "t + t^3 - t^4");
}

TEST_CASE("mirror relation on jones") {
    const auto t = trefoil_diagram();
    CHECK(jones(mirror(t)) == jones(t).inverted_variable());
    const auto f8 = figure_eight_diagram();
    CHECK(jones(mirror(f8)) == jones(f8)); // amphichiral
}

TEST_CASE("figure-eight fixture: det 5, symmetric jones") {
    const auto f8 = figure_eight_diagram();
    CHECK(f8.crossing_count() == 4);
    CHECK(component_count(f8) == 1);
    CHECK(writhe(f8) == 0);
    CHECK(determinant(f8) == 5);
    CHECK(jones(f8).to_string("t", 2) == "t^-2 - t^-1 + 1 - t + t^2");
}

TEST_CASE("jones is invariant under R1 curls") {
    const std::vector<Diagram> fixtures{trefoil_diagram(), figure_eight_diagram(),
                                        expand_petal_diagram(canonical_twists(
                                            PetalPermutation::validate({1, 3, 2})))};
    for (const auto& d : fixtures) {
        const auto base = jones(d);
        for (const bool positive : {true, false}) {
            const auto curled = add_curl(d, 2, positive);
            CHECK(trace_faces(curled).euler_ok);
            CHECK(writhe(curled) == writhe(d) + (positive ? 1 : -1));
            CHECK(jones(curled) == base);
        }
    }
}

TEST_CASE("determinant equals |jones(-1)| on all fixtures") {
    std::vector<Diagram> fixtures{unknot_diagram(), trefoil_diagram(), figure_eight_diagram(),
                                  braid_closure(2, {-1, -1, -1})};
    for (const auto& p : canonical_perms(5))
        fixtures.push_back(expand_petal_diagram(canonical_twists(p)));
    for (const auto& d : fixtures) {
        if (d.crossing_count() > 14)
            continue;
        const auto v = jones(d).eval_at_minus_one(2);
        CHECK(determinant(d) == (v < 0 ? BigInt(-v) : v));
    }
}

TEST_CASE("every closed 3-petal diagram is a determinant-1 jones-1 knot") {
    for (const auto& p : canonical_perms(3)) {
        const auto d = expand_petal_diagram(canonical_twists(p));
        CHECK(component_count(d) == 1);
        CHECK(determinant(d) == 1);
        CHECK(jones(d).is_one());
    }
}

TEST_CASE("lambda_5 expands to a trefoil") {
    const auto d = expand_petal_diagram(canonical_twists(PetalPermutation::validate({1, 4, 2, 5, 3})));
    CHECK(determinant(d) == 3);
    const auto names = identify_candidates(determinant(d), jones(d));
    REQUIRE(names.size() == 1);
    CHECK(names[0].substr(0, 7) == "trefoil");
}

TEST_CASE("certify_unknot verdict taxonomy") {
    const auto curl = close_petals(spread_multicrossing(PetalPermutation::validate({1})),
                                   canonical_twists(PetalPermutation::validate({1})));
    CHECK(certify_unknot(curl) == UnknotVerdict::certified_unknot);
    CHECK(certify_unknot(trefoil_diagram()) == UnknotVerdict::not_unknot);
    const auto d132 = expand_petal_diagram(canonical_twists(PetalPermutation::validate({1, 3, 2})));
    CHECK(certify_unknot(d132) == UnknotVerdict::indeterminate);
    CHECK(certify_unknot(d132, true) == UnknotVerdict::certified_unknot);
}

TEST_CASE("identify candidates from the fingerprint table") {
    CHECK(identify_candidates(1, LaurentPoly::one()) == std::vector<std::string>{"unknot"});
    CHECK(identify_candidates(7, std::nullopt).empty());
    CHECK(identify_candidates(3, std::nullopt).size() == 2); // both trefoil chiralities
}

TEST_CASE("bracket crossing cap") {
    Diagram big;
    big.crossings.resize(25);
    big.init_peers();
    CHECK_THROWS_AS(kauffman_bracket(big), Error);
}
