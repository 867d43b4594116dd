#include "petal/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace petal {

namespace {

constexpr double kPi = std::numbers::pi;

// Motion direction of strand i: chords sit at angle (i-1)*pi/n, entry side
// alternating with strand parity so consecutive petals occupy disjoint sectors.
double strand_direction(int i, int n) {
    double a = static_cast<double>(i - 1) * kPi / n;
    if (i % 2 == 0)
        a += kPi;
    return a;
}

Point polar(double r, double a) {
    return Point{r * std::cos(a), r * std::sin(a)};
}

} // namespace

std::vector<LobeAreas> assign_areas(const PetalPermutation& perm) {
    const int n = perm.n();
    if (n == 1)
        return {LobeAreas{1.0, 1.0}};
    std::vector<LobeAreas> areas(static_cast<size_t>(n));
    for (int p = 1; p <= n; ++p) {
        const int d = perm.h(p + 1) - perm.h(p);
        if (d > 0)
            areas[static_cast<size_t>(p) - 1] = LobeAreas{1.0, 1.0 + d};
        else
            areas[static_cast<size_t>(p) - 1] = LobeAreas{static_cast<double>(-d), 0.0};
    }
    return areas;
}

ClosedPolyline build_rose(int n, const std::vector<LobeAreas>& areas, int m) {
    if (m < 16)
        fail(Err::InvalidResolution, "segments_per_lobe must be >= 16");
    if (static_cast<int>(areas.size()) != n)
        fail(Err::IndexOutOfRange, "need one lobe-area record per petal");

    const double delta = kPi / n / m; // arc step within one sector
    const double sin_delta = std::sin(delta);

    ClosedPolyline poly;
    poly.strand_marks.resize(static_cast<size_t>(n));
    poly.lobe_marks.resize(static_cast<size_t>(n));
    poly.strand_angles.resize(static_cast<size_t>(n));

    for (int p = 1; p <= n; ++p) {
        poly.strand_angles[static_cast<size_t>(p) - 1] = strand_direction(p, n);

        // Crossing-center passage of strand p.
        poly.strand_marks[static_cast<size_t>(p) - 1] = poly.vertices.size();
        poly.vertices.push_back(Point{0.0, 0.0});

        const LobeAreas target = areas[static_cast<size_t>(p) - 1];
        const double exit_angle = strand_direction(p, n);

        // Fan radius; with a twist the detour bulge contributes T/lambda^2 of
        // the plain area, so the fan is scaled down to compensate exactly.
        double lambda = 0.0;
        double fan_target = target.plain;
        const bool twisted = target.twist > 0.0;
        if (twisted) {
            lambda = std::max(2.0 * std::sqrt(target.twist / target.plain), 1.0);
            if (lambda >= 0.9 * m)
                fail(Err::InvalidResolution,
                     "segments_per_lobe too small for twist area ratio; increase it");
            fan_target = target.plain - target.twist / (lambda * lambda);
        }
        const double L = std::sqrt(2.0 * fan_target / (m * sin_delta));

        LobeMark& mark = poly.lobe_marks[static_cast<size_t>(p) - 1];
        mark.begin = poly.vertices.size();
        mark.has_twist = twisted;

        const int detour_after = (m - 1) / 2; // detour replaces gap (j, j+1)
        for (int j = 0; j <= m; ++j) {
            poly.vertices.push_back(polar(L, exit_angle + j * delta));
            if (twisted && j == detour_after) {
                const Point va = poly.vertices.back();
                const Point vb = polar(L, exit_angle + (j + 1) * delta);
                const double g = L * std::sin(delta / 2.0);
                const double c = lambda * g;
                const double H = target.twist * (g + c) / (c * c);
                const Point mid{(va.x + vb.x) / 2.0, (va.y + vb.y) / 2.0};
                const Point vhat{(vb.x - va.x) / (2.0 * g), (vb.y - va.y) / (2.0 * g)};
                const Point uhat{vhat.y, -vhat.x}; // outward normal
                mark.twist_begin = poly.vertices.size();
                poly.vertices.push_back(Point{mid.x + H * uhat.x + c * vhat.x,
                                              mid.y + H * uhat.y + c * vhat.y});
                mark.twist_end = poly.vertices.size();
                poly.vertices.push_back(Point{mid.x + H * uhat.x - c * vhat.x,
                                              mid.y + H * uhat.y - c * vhat.y});
            }
        }
        mark.end = poly.vertices.size() - 1;
    }

    poly.vertices.push_back(poly.vertices.front()); // exact closure
    return poly;
}

ClosedPolyline realize_polyline(const LagrangianPetalDiagram& diag, int segments_per_lobe) {
    if (!diag.is_standard())
        fail(Err::NotStandard, "realize_polyline requires the standard twist placement");
    return build_rose(diag.n(), assign_areas(diag.perm), segments_per_lobe);
}

ZProfile recover_z_profile(const ClosedPolyline& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 2)
        fail(Err::OpenCurve, "polyline too short");
    const double dx0 = v.front().x - v.back().x;
    const double dy0 = v.front().y - v.back().y;
    if (std::abs(dx0) > 1e-12 || std::abs(dy0) > 1e-12)
        fail(Err::OpenCurve, "polyline is not closed");

    ZProfile profile;
    profile.samples.resize(v.size());
    profile.samples[0] = 0.0;
    double tv = 0.0;
    for (size_t i = 1; i < v.size(); ++i) {
        const double inc = 0.5 * (v[i].y + v[i - 1].y) * (v[i].x - v[i - 1].x);
        profile.samples[i] = profile.samples[i - 1] + inc;
        tv += std::abs(inc);
    }
    profile.total_variation = tv;
    profile.closure_defect = std::abs(profile.samples.back() - profile.samples.front());

    profile.crossing_heights.reserve(poly.strand_marks.size());
    for (size_t idx : poly.strand_marks)
        profile.crossing_heights.push_back(-profile.samples[idx]);
    return profile;
}

HeightCheckResult crossing_height_check(const LagrangianPetalDiagram& diag,
                                        const ClosedPolyline& poly,
                                        const ZProfile& profile) {
    (void)poly;
    HeightCheckResult result;
    const int n = diag.n();
    result.relative_closure_defect =
        profile.total_variation > 0.0 ? profile.closure_defect / profile.total_variation : 0.0;

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<size_t>(i)] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return profile.crossing_heights[static_cast<size_t>(a) - 1] >
               profile.crossing_heights[static_cast<size_t>(b) - 1];
    });
    result.observed_order = order;

    result.min_gap = std::numeric_limits<double>::infinity();
    for (int r = 1; r < n; ++r) {
        const double gap = profile.crossing_heights[static_cast<size_t>(order[r - 1]) - 1] -
                           profile.crossing_heights[static_cast<size_t>(order[r]) - 1];
        result.min_gap = std::min(result.min_gap, gap);
    }
    if (n == 1)
        result.min_gap = 1.0;

    bool order_ok = true;
    for (int r = 0; r < n; ++r)
        if (diag.perm.h(order[static_cast<size_t>(r)]) != r + 1)
            order_ok = false;

    result.pass = order_ok && result.min_gap > 1e-6 &&
                  result.relative_closure_defect <= 1e-9;
    return result;
}

long long turning_number(const ClosedPolyline& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3)
        fail(Err::DegenerateSegment, "polyline too short");

    const size_t nseg = v.size() - 1;
    std::vector<Point> dir(nseg);
    for (size_t i = 0; i < nseg; ++i) {
        dir[i] = Point{v[i + 1].x - v[i].x, v[i + 1].y - v[i].y};
        if (std::hypot(dir[i].x, dir[i].y) < 1e-15)
            fail(Err::DegenerateSegment, "zero-length segment at vertex " + std::to_string(i));
    }

    double total = 0.0;
    for (size_t i = 0; i < nseg; ++i) {
        const Point& a = dir[i];
        const Point& b = dir[(i + 1) % nseg];
        total += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
    }
    const double turns = total / (2.0 * kPi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 0.01)
        fail(Err::NonIntegerTurning, "turning residue " + std::to_string(turns - rounded));
    return static_cast<long long>(rounded);
}

double shoelace_area(const std::vector<Point>& polygon) {
    double twice = 0.0;
    const size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        twice += a.x * b.y - a.y * b.x;
    }
    return 0.5 * twice;
}

} // namespace petal
