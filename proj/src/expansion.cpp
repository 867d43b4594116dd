#include "petal/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace petal {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOffsetScale = 0.01; // pencil perturbation size

struct Vec {
    double x, y;
};

double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }

double motion_angle(int i, int n) {
    double a = static_cast<double>(i - 1) * kPi / n;
    if (i % 2 == 0)
        a += kPi;
    return a;
}

// Generic distinct offsets so the perturbed pencil is a true line arrangement.
double line_offset(int i) {
    const double z = std::fmod(static_cast<double>(i) * 0.6180339887498949, 1.0);
    return kOffsetScale * (z - 0.5);
}

struct Passage {
    int in_dart;
    double t; // position along the strand's line
};

} // namespace

ExpansionTangle spread_multicrossing(std::span<const int> heights) {
    const int n = static_cast<int>(heights.size());
    if (n == 0)
        fail(Err::Empty, "empty height sequence");
    {
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        for (int v : heights) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                fail(Err::NotBijection, "heights must be a bijection on {1..n}");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    ExpansionTangle tangle;
    tangle.heights.assign(heights.begin(), heights.end());
    tangle.passages.resize(static_cast<size_t>(n));

    std::vector<Vec> u(static_cast<size_t>(n));
    std::vector<Vec> base(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const double a = motion_angle(i, n);
        u[static_cast<size_t>(i) - 1] = Vec{std::cos(a), std::sin(a)};
        const Vec nrm{-std::sin(a), std::cos(a)};
        base[static_cast<size_t>(i) - 1] = Vec{line_offset(i) * nrm.x, line_offset(i) * nrm.y};
    }

    Diagram& d = tangle.diagram;
    std::vector<std::vector<Passage>> along(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Vec ui = u[static_cast<size_t>(i) - 1];
            const Vec uj = u[static_cast<size_t>(j) - 1];
            const Vec pij{base[static_cast<size_t>(j) - 1].x - base[static_cast<size_t>(i) - 1].x,
                          base[static_cast<size_t>(j) - 1].y - base[static_cast<size_t>(i) - 1].y};
            const double denom = cross(ui, uj);
            const double ti = cross(pij, uj) / denom;
            const double tj = cross(pij, ui) / denom;

            const int hi = heights[static_cast<size_t>(i) - 1];
            const int hj = heights[static_cast<size_t>(j) - 1];
            const int over = hi < hj ? i : j;
            const int under = hi < hj ? j : i;
            const Vec uu = u[static_cast<size_t>(under) - 1];
            const Vec uo = u[static_cast<size_t>(over) - 1];

            Diagram::Crossing c;
            c.strand_a = over;
            c.strand_b = under;
            // Slot 0 holds the under entry in the build direction; the rest
            // follow counterclockwise.
            struct DartInfo {
                Vec v;
                int tag; // 0 under-in, 1 under-out, 2 over-in, 3 over-out
            };
            std::array<DartInfo, 4> darts{DartInfo{Vec{-uu.x, -uu.y}, 0},
                                          DartInfo{Vec{uu.x, uu.y}, 1},
                                          DartInfo{Vec{-uo.x, -uo.y}, 2},
                                          DartInfo{Vec{uo.x, uo.y}, 3}};
            const double a0 = std::atan2(darts[0].v.y, darts[0].v.x);
            std::sort(darts.begin() + 1, darts.end(), [&](const DartInfo& a, const DartInfo& b) {
                auto key = [&](const DartInfo& q) {
                    double ang = std::atan2(q.v.y, q.v.x) - a0;
                    while (ang <= 0.0)
                        ang += 2.0 * kPi;
                    return ang;
                };
                return key(a) < key(b);
            });
            if (darts[2].tag != 1)
                fail(Err::NotBijection, "crossing rotation is not strand-alternating");

            std::array<int, 4> slot_of_tag{};
            for (int s = 0; s < 4; ++s) {
                c.dart_dx[static_cast<size_t>(s)] = darts[static_cast<size_t>(s)].v.x;
                c.dart_dy[static_cast<size_t>(s)] = darts[static_cast<size_t>(s)].v.y;
                slot_of_tag[static_cast<size_t>(darts[static_cast<size_t>(s)].tag)] = s;
            }

            const int id = d.crossing_count();
            d.crossings.push_back(c);
            along[static_cast<size_t>(under) - 1].push_back(
                Passage{id * 4 + slot_of_tag[0], under == i ? ti : tj});
            along[static_cast<size_t>(over) - 1].push_back(
                Passage{id * 4 + slot_of_tag[2], over == i ? ti : tj});
        }
    }

    d.leg_count = 2 * n;
    d.init_peers();

    for (int i = 1; i <= n; ++i) {
        auto& seq = along[static_cast<size_t>(i) - 1];
        std::sort(seq.begin(), seq.end(), [](const Passage& a, const Passage& b) { return a.t < b.t; });
        for (size_t q = 1; q < seq.size(); ++q)
            if (seq[q].t - seq[q - 1].t < 1e-12)
                fail(Err::NotBijection, "degenerate arrangement: coincident crossings");

        int prev_out = d.leg_dart(i - 1); // entry leg
        for (const Passage& p : seq) {
            const int in_dart = p.in_dart;
            const int out_dart = (in_dart / 4) * 4 + (in_dart % 4 + 2) % 4;
            d.connect(prev_out, in_dart);
            tangle.passages[static_cast<size_t>(i) - 1].push_back({in_dart, out_dart});
            prev_out = out_dart;
        }
        d.connect(prev_out, d.leg_dart(n + i - 1)); // exit leg
    }
    return tangle;
}

ExpansionTangle spread_multicrossing(const PetalPermutation& perm) {
    return spread_multicrossing(std::span<const int>(perm.heights()));
}

Diagram close_petals(const ExpansionTangle& tangle, const LagrangianPetalDiagram& diag) {
    const int n = static_cast<int>(tangle.heights.size());
    if (n != diag.n() || tangle.heights != diag.perm.heights())
        fail(Err::NotBijection, "tangle heights do not match the diagram");

    Diagram d;
    d.crossings = tangle.diagram.crossings;

    // Cyclic passage sequence: strand 1, petal 1 curls, strand 2, ...
    std::vector<std::pair<int, int>> cycle;
    std::vector<size_t> strand_first_pos(static_cast<size_t>(n), 0);

    for (int p = 1; p <= n; ++p) {
        strand_first_pos[static_cast<size_t>(p) - 1] = cycle.size();
        for (const auto& pass : tangle.passages[static_cast<size_t>(p) - 1])
            cycle.push_back(pass);

        const double mid = motion_angle(p, n) + kPi / (2 * n); // petal sector middle
        const Vec uhat{std::cos(mid), std::sin(mid)};
        const Vec vhat{-std::sin(mid), std::cos(mid)};
        for (int t = 0; t < diag.twists[static_cast<size_t>(p) - 1]; ++t) {
            // Negative curl: the outward stem passes over the inward return.
            const Vec s{uhat.x + 0.15 * vhat.x, uhat.y + 0.15 * vhat.y};
            const Vec r{-uhat.x + 0.15 * vhat.x, -uhat.y + 0.15 * vhat.y};
            Diagram::Crossing c;
            c.is_twist = true;
            c.strand_a = p;
            c.strand_b = p;
            const std::array<Vec, 4> dirs{Vec{-r.x, -r.y}, s, r, Vec{-s.x, -s.y}};
            for (int slot = 0; slot < 4; ++slot) {
                c.dart_dx[static_cast<size_t>(slot)] = dirs[static_cast<size_t>(slot)].x;
                c.dart_dy[static_cast<size_t>(slot)] = dirs[static_cast<size_t>(slot)].y;
            }
            const int id = d.crossing_count();
            d.crossings.push_back(c);
            cycle.push_back({Diagram::dart_id(id, 3), Diagram::dart_id(id, 1)}); // stem
            cycle.push_back({Diagram::dart_id(id, 0), Diagram::dart_id(id, 2)}); // return
        }
    }

    d.leg_count = 0;
    d.free_loops = 0;
    d.init_peers();
    const size_t m = cycle.size();
    if (m == 0)
        fail(Err::Empty, "nothing to close");
    for (size_t q = 0; q < m; ++q)
        d.connect(cycle[q].second, cycle[(q + 1) % m].first);
    d.start_dart = cycle[(strand_first_pos[0] + m - 1) % m].second; // strand 1 entry edge

    orient(d);
    const int comps = component_count(d);
    if (comps != 1)
        fail(Err::ComponentCountNotOne,
             "petal closure produced " + std::to_string(comps) + " components");
    return d;
}

Diagram expand_petal_diagram(const LagrangianPetalDiagram& diag) {
    return close_petals(spread_multicrossing(diag.perm), diag);
}

} // namespace petal
