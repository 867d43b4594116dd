#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "petal/geometry.hpp"

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

// Independent segment intersection for the twist-lobe audit.
Point intersect(Point a, Point b, Point c, Point d) {
    const double rX = b.x - a.x, rY = b.y - a.y;
    const double sX = d.x - c.x, sY = d.y - c.y;
    const double denom = rX * sY - rY * sX;
    REQUIRE(std::abs(denom) > 1e-14);
    const double t = ((c.x - a.x) * sY - (c.y - a.y) * sX) / denom;
    REQUIRE(t > 0.0);
    REQUIRE(t < 1.0);
    return Point{a.x + t * rX, a.y + t * rY};
}

// Shoelace audit of every lobe against its assigned area, via the marks only.
void audit_areas(const PetalPermutation& perm, int segments) {
    const auto diag = canonical_twists(perm);
    const auto areas = assign_areas(perm);
    const auto poly = realize_polyline(diag, segments);
    const Point origin{0.0, 0.0};

    for (int p = 1; p <= perm.n(); ++p) {
        const LobeMark& mark = poly.lobe_marks[static_cast<size_t>(p) - 1];
        const LobeAreas want = areas[static_cast<size_t>(p) - 1];
        std::vector<Point> plain{origin};
        if (!mark.has_twist) {
            for (size_t v = mark.begin; v <= mark.end; ++v)
                plain.push_back(poly.vertices[v]);
            CHECK(std::abs(shoelace_area(plain) - want.plain) <= 1e-6 * want.plain);
            continue;
        }
        const Point va = poly.vertices[mark.twist_begin - 1];
        const Point b1 = poly.vertices[mark.twist_begin];
        const Point b2 = poly.vertices[mark.twist_end];
        const Point vb = poly.vertices[mark.twist_end + 1];
        const Point x = intersect(va, b1, b2, vb);

        for (size_t v = mark.begin; v < mark.twist_begin; ++v)
            plain.push_back(poly.vertices[v]);
        plain.push_back(x);
        for (size_t v = mark.twist_end + 1; v <= mark.end; ++v)
            plain.push_back(poly.vertices[v]);
        CHECK(std::abs(shoelace_area(plain) - want.plain) <= 1e-6 * want.plain);

        const double twist = shoelace_area({x, b1, b2});
        CHECK(twist < 0.0); // clockwise lobe
        CHECK(std::abs(-twist - want.twist) <= 1e-6 * want.twist);
    }
}

} // namespace

TEST_CASE("assign_areas follows the d rules") {
    const auto a132 = assign_areas(PetalPermutation::validate({1, 3, 2}));
    CHECK(a132[0].plain == 1.0);
    CHECK(a132[0].twist == 3.0);
    CHECK(a132[1].plain == 1.0);
    CHECK(a132[1].twist == 0.0);
    CHECK(a132[2].plain == 1.0);
    CHECK(a132[2].twist == 0.0);

    const auto a5 = assign_areas(PetalPermutation::validate({1, 4, 2, 5, 3}));
    CHECK(a5[0].twist == 4.0);
    CHECK(a5[2].twist == 4.0);

    const auto a1 = assign_areas(PetalPermutation::validate({1}));
    CHECK(a1[0].plain == 1.0);
    CHECK(a1[0].twist == 1.0);
}

TEST_CASE("signed increments telescope to zero for any permutation") {
    for (const auto& p : canonical_perms(7)) {
        const auto areas = assign_areas(p);
        double total = 0.0;
        for (const auto& a : areas)
            total += a.twist > 0.0 ? (a.twist - a.plain) : -a.plain;
        CHECK(std::abs(total) < 1e-12);
    }
}

TEST_CASE("realize_polyline structure") {
    const auto poly = realize_polyline(canonical_twists(PetalPermutation::validate({1})), 32);
    CHECK(poly.strand_marks.size() == 1);
    CHECK(poly.vertices.front().x == poly.vertices.back().x);
    CHECK(poly.vertices.front().y == poly.vertices.back().y);

    for (const auto& p : canonical_perms(5)) {
        const auto rose = realize_polyline(canonical_twists(p), 32);
        CHECK(rose.strand_marks.size() == 5);
        std::vector<double> angles = rose.strand_angles;
        std::sort(angles.begin(), angles.end());
        CHECK(std::adjacent_find(angles.begin(), angles.end()) == angles.end());
    }
    CHECK_THROWS_AS(realize_polyline(canonical_twists(PetalPermutation::validate({1, 3, 2})), 8),
                    Error);
}

TEST_CASE("area audit against the shoelace oracle") {
    audit_areas(PetalPermutation::validate({1}), 32);
    audit_areas(PetalPermutation::validate({1, 3, 2}), 32);
    audit_areas(PetalPermutation::validate({1, 4, 2, 5, 3}), 32);
    audit_areas(PetalPermutation::validate({1, 5, 2, 6, 3, 7, 4}), 48);
}

TEST_CASE("integral of y dx over a counterclockwise unit square is -1") {
    ClosedPolyline square;
    square.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
    const auto profile = recover_z_profile(square);
    CHECK(profile.samples.back() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("open polylines are rejected") {
    ClosedPolyline open;
    open.vertices = {{0, 0}, {1, 0}, {1, 1}};
    CHECK_THROWS_AS(recover_z_profile(open), Error);
}

TEST_CASE("figure-eight z profile closes and single strand passes the check") {
    const auto diag = canonical_twists(PetalPermutation::validate({1}));
    const auto poly = realize_polyline(diag, 32);
    const auto profile = recover_z_profile(poly);
    CHECK(profile.closure_defect <= 1e-9 * profile.total_variation);
    CHECK(crossing_height_check(diag, poly, profile).pass);
}

TEST_CASE("crossing z-order of (1,3,2) descends as 1, 3, 2") {
    const auto diag = canonical_twists(PetalPermutation::validate({1, 3, 2}));
    const auto poly = realize_polyline(diag, 32);
    const auto profile = recover_z_profile(poly);
    const auto check = crossing_height_check(diag, poly, profile);
    CHECK(check.pass);
    CHECK(check.observed_order == std::vector<int>{1, 3, 2});
}

TEST_CASE("crossing height check passes exhaustively for n <= 7") {
    for (int n : {3, 5, 7}) {
        for (const auto& p : canonical_perms(n)) {
            const auto diag = canonical_twists(p);
            const auto poly = realize_polyline(diag, 32);
            const auto profile = recover_z_profile(poly);
            const auto check = crossing_height_check(diag, poly, profile);
            CHECK(check.pass);
            CHECK(check.relative_closure_defect <= 1e-9);
        }
    }
}

TEST_CASE("tampered areas fail the height check with a witness order") {
    const auto perm = PetalPermutation::validate({1, 4, 2, 5, 3});
    const auto diag = canonical_twists(perm);
    auto areas = assign_areas(perm);
    std::swap(areas[0].plain, areas[1].plain); // 1 <-> 2
    const auto poly = build_rose(5, areas, 32);
    const auto profile = recover_z_profile(poly);
    const auto check = crossing_height_check(diag, poly, profile);
    CHECK_FALSE(check.pass);
    CHECK(check.observed_order.size() == 5);
}

TEST_CASE("turning number basics") {
    ClosedPolyline circle;
    for (int i = 0; i <= 64; ++i) {
        const double a = 2.0 * 3.14159265358979323846 * i / 64.0;
        circle.vertices.push_back({std::cos(a), std::sin(a)});
    }
    circle.vertices.back() = circle.vertices.front();
    CHECK(turning_number(circle) == 1);

    ClosedPolyline degenerate;
    degenerate.vertices = {{0, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 0}};
    CHECK_THROWS_AS(turning_number(degenerate), Error);
}

TEST_CASE("twist-free rose turns (n+1)/2 times") {
    std::vector<LobeAreas> flat(5, LobeAreas{1.0, 0.0});
    const auto rose = build_rose(5, flat, 32);
    CHECK(turning_number(rose) == 3);
}

TEST_CASE("turning number equals rotation number, exhaustively for n <= 7") {
    for (int n : {1, 3, 5, 7}) {
        for (const auto& p : canonical_perms(n)) {
            const auto diag = canonical_twists(p);
            CHECK(turning_number(realize_polyline(diag, 32)) == rotation_number(diag));
        }
    }
}
