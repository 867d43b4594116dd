#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "petal/errors.hpp"

namespace petal {

/// A classical knot/link diagram as a combinatorial map. Each crossing is a
/// 4-valent vertex with darts (half-edges) in counterclockwise rotation order;
/// the under strand passes through slots {0,2} and the over strand through
/// {1,3}. Edges pair darts; open tangles carry boundary legs.
///
/// Frozen sign convention: a crossing is positive exactly when the over strand
/// enters at the slot one step counterclockwise from the under entry, i.e.
/// when the frame (under direction, over direction) is positively oriented.
struct Diagram {
    struct Crossing {
        std::array<double, 4> dart_dx{}; // nominal outward direction of each dart
        std::array<double, 4> dart_dy{};
        int under_in_slot = -1; // 0 or 2 once oriented
        int over_in_slot = -1;  // 1 or 3 once oriented
        int sign = 0;           // +1 / -1 once oriented
        int strand_a = 0;       // builder metadata: strand pair at a spread
        int strand_b = 0;       //   multi-crossing, 0 otherwise
        bool is_twist = false;  // half-twist curl crossing
    };

    std::vector<Crossing> crossings;
    std::vector<int> peer; // dart involution over 4C + leg_count darts; -1 unset
    int leg_count = 0;     // legs occupy dart ids 4C .. 4C+leg_count-1
    int free_loops = 0;    // crossingless circles
    int start_dart = -1;   // canonical traversal start (an outgoing dart)

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    bool is_closed() const { return leg_count == 0; }
    static int dart_id(int crossing, int slot) { return 4 * crossing + slot; }
    int leg_dart(int leg) const { return 4 * crossing_count() + leg; }
    int dart_total() const { return 4 * crossing_count() + leg_count; }

    void init_peers() { peer.assign(static_cast<size_t>(dart_total()), -1); }
    void connect(int dart_a, int dart_b);
};

/// Walks every component of a closed diagram and assigns traversal data:
/// under/over entry slots and crossing signs.
void orient(Diagram& d);

/// Number of link components (traversal cycles plus free loops).
int component_count(const Diagram& d);

/// Sum of crossing signs of a closed oriented diagram.
long long writhe(const Diagram& d);

/// Plane reflection: swaps over/under everywhere and reverses rotations.
Diagram mirror(const Diagram& d);

/// Welds boundary legs pairwise and returns the closed diagram. A pair list
/// that wires legs into crossing-free circles increments free_loops.
Diagram close_legs(const Diagram& d, const std::vector<std::pair<int, int>>& leg_pairs);

/// PD notation, one X[a,b,c,d] term per crossing (incoming under arc first,
/// then counterclockwise); arcs numbered along the traversal from start_dart.
std::string to_pd_code(const Diagram& d);

/// Signed Gauss code: O/U tokens with crossing id and sign along the traversal.
std::string to_gauss_code(const Diagram& d);

/// Parses PD notation (with or without the PD[...] wrapper).
Diagram parse_pd_code(const std::string& text);

/// Plat-free closure of a braid word. Letter +r crosses the strand at
/// position r over the one at r+1; -r crosses it under. Fixture builder.
Diagram braid_closure(int strands, const std::vector<int>& word);

/// Inserts an R1 curl on the edge leaving `out_dart`; `positive` picks the
/// crossing sign. Test and fixture helper.
Diagram add_curl(const Diagram& d, int out_dart, bool positive);

/// Face structure of the closed diagram's underlying 4-valent plane graph.
struct FaceData {
    int face_count = 0;
    std::vector<int> face_of_dart;  // orbit id per dart
    std::vector<int> corner_face;   // face at corner (slot s, s+1), 4 per crossing
    std::vector<int> color;         // checkerboard color per face (0/1)
    bool euler_ok = false;          // V - E + F == 2 (connected diagrams)
};

FaceData trace_faces(const Diagram& d);

} // namespace petal
