#pragma once

#include <cstddef>
#include <vector>

#include "petal/diagram.hpp"

namespace petal {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Disk areas of one petal: the plain lobe and the twist lobe (0 if untwisted).
struct LobeAreas {
    double plain = 0.0;
    double twist = 0.0;
};

/// Per-petal lobe areas realizing the height function. With d = h(p+1) - h(p)
/// cyclically: an ascent petal (d > 0) gets plain 1 and twist 1 + d, a descent
/// petal gets plain |d| and no twist. Signed increments telescope to zero.
/// n = 1 uses the fixed pair {1, 1}.
std::vector<LobeAreas> assign_areas(const PetalPermutation& perm);

struct LobeMark {
    size_t begin = 0; // vertex index of the petal's exit point
    size_t end = 0;   // vertex index of the next strand's entry point
    bool has_twist = false;
    size_t twist_begin = 0; // first detour vertex (outward stem end)
    size_t twist_end = 0;   // second detour vertex
};

/// Closed planar polyline of a rose curve: the last vertex repeats the first.
/// strand_marks[i-1] is the vertex where strand i passes the crossing center.
struct ClosedPolyline {
    std::vector<Point> vertices;
    std::vector<size_t> strand_marks;
    std::vector<LobeMark> lobe_marks;
    std::vector<double> strand_angles; // chord direction of each strand, radians
};

/// Rose curve with given lobe areas: strand i runs straight through the origin
/// at angle (i-1)*pi/n (direction alternating with strand parity), petal p is a
/// circular-fan lobe in its own angular sector scaled to the plain area, and a
/// twist is a small clockwise detour lobe on the petal arc scaled to the twist
/// area. Plain lobes are traversed counterclockwise.
ClosedPolyline build_rose(int n, const std::vector<LobeAreas>& areas, int segments_per_lobe);

/// build_rose driven by assign_areas; requires the standard twist placement.
ClosedPolyline realize_polyline(const LagrangianPetalDiagram& diag, int segments_per_lobe);

struct ZProfile {
    std::vector<double> samples;          // cumulative integral of y dx per vertex
    std::vector<double> crossing_heights; // per-strand height at the crossing center
    double closure_defect = 0.0;          // |last - first| of samples
    double total_variation = 0.0;
};

/// Trapezoid integration of y dx along the polyline. Crossing heights are read
/// at the strand marks with the frozen axis convention: height = -integral, so
/// that the topmost strand (h = 1) carries the largest height.
ZProfile recover_z_profile(const ClosedPolyline& poly);

struct HeightCheckResult {
    bool pass = false;
    std::vector<int> observed_order; // strand indices sorted by descending height
    double min_gap = 0.0;
    double relative_closure_defect = 0.0;
};

/// Passes iff sorting strands by descending crossing height reproduces h
/// exactly and the z profile closes up to 1e-9 relative.
HeightCheckResult crossing_height_check(const LagrangianPetalDiagram& diag,
                                        const ClosedPolyline& poly,
                                        const ZProfile& profile);

/// Accumulated exterior angle / 2*pi, rounded; the residue must be < 0.01.
long long turning_number(const ClosedPolyline& poly);

/// Signed shoelace area of a polygon (counterclockwise positive).
double shoelace_area(const std::vector<Point>& polygon);

} // namespace petal
