#include "petal/classical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace petal {

namespace {

int opposite(int dart) { return (dart / 4) * 4 + (dart % 4 + 2) % 4; }
int rotate_ccw(int dart) { return (dart / 4) * 4 + (dart % 4 + 1) % 4; }

// Per-component sequences of outgoing darts; start_dart leads when set.
std::vector<std::vector<int>> walk_components(const Diagram& d) {
    const int nd = 4 * d.crossing_count();
    std::vector<bool> out_used(static_cast<size_t>(nd), false);
    std::vector<std::vector<int>> comps;

    auto edge_done = [&](int dart) {
        return out_used[static_cast<size_t>(dart)] ||
               out_used[static_cast<size_t>(d.peer[static_cast<size_t>(dart)])];
    };
    auto walk_from = [&](int d0) {
        std::vector<int> seq;
        int cur = d0;
        while (!out_used[static_cast<size_t>(cur)]) {
            out_used[static_cast<size_t>(cur)] = true;
            seq.push_back(cur);
            cur = opposite(d.peer[static_cast<size_t>(cur)]);
        }
        return seq;
    };

    if (d.start_dart >= 0 && d.start_dart < nd && !edge_done(d.start_dart))
        comps.push_back(walk_from(d.start_dart));
    for (int dart = 0; dart < nd; ++dart)
        if (!edge_done(dart))
            comps.push_back(walk_from(dart));
    return comps;
}

void require_closed(const Diagram& d, const char* op) {
    if (!d.is_closed())
        fail(Err::OpenTangle, std::string(op) + " requires a closed diagram");
}

} // namespace

void Diagram::connect(int dart_a, int dart_b) {
    peer[static_cast<size_t>(dart_a)] = dart_b;
    peer[static_cast<size_t>(dart_b)] = dart_a;
}

void orient(Diagram& d) {
    require_closed(d, "orient");
    for (auto& c : d.crossings) {
        c.under_in_slot = -1;
        c.over_in_slot = -1;
        c.sign = 0;
    }
    for (const auto& comp : walk_components(d)) {
        for (int out : comp) {
            const int in = d.peer[static_cast<size_t>(out)];
            const int slot = in % 4;
            auto& c = d.crossings[static_cast<size_t>(in / 4)];
            if (slot == 0 || slot == 2)
                c.under_in_slot = slot;
            else
                c.over_in_slot = slot;
        }
    }
    for (auto& c : d.crossings) {
        if (c.under_in_slot < 0 || c.over_in_slot < 0)
            fail(Err::ComponentCountNotOne, "inconsistent traversal: unvisited passage");
        c.sign = (c.over_in_slot == (c.under_in_slot + 1) % 4) ? 1 : -1;
    }
}

int component_count(const Diagram& d) {
    require_closed(d, "component_count");
    return static_cast<int>(walk_components(d).size()) + d.free_loops;
}

long long writhe(const Diagram& d) {
    require_closed(d, "writhe");
    const Diagram* src = &d;
    Diagram scratch;
    if (!d.crossings.empty() && d.crossings.front().sign == 0) {
        scratch = d;
        orient(scratch);
        src = &scratch;
    }
    long long total = 0;
    for (const auto& c : src->crossings)
        total += c.sign;
    return total;
}

Diagram mirror(const Diagram& d) {
    // Swapping over and under at every crossing mirrors the knot; cycling the
    // slot labels by one keeps the under strand on {0,2} and the rotation CCW.
    static constexpr int remap[4] = {1, 2, 3, 0}; // new slot s holds old slot remap[s]
    Diagram out = d;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        for (int s = 0; s < 4; ++s) {
            out.crossings[ci].dart_dx[static_cast<size_t>(s)] =
                d.crossings[ci].dart_dx[static_cast<size_t>(remap[s])];
            out.crossings[ci].dart_dy[static_cast<size_t>(s)] =
                d.crossings[ci].dart_dy[static_cast<size_t>(remap[s])];
        }
        out.crossings[ci].under_in_slot = -1;
        out.crossings[ci].over_in_slot = -1;
        out.crossings[ci].sign = 0;
    }
    auto remap_dart = [&](int dart) {
        if (dart < 0 || dart >= 4 * d.crossing_count())
            return dart; // legs keep their ids
        return (dart / 4) * 4 + (dart % 4 + 3) % 4; // old slot r lands on new slot r-1
    };
    for (int dart = 0; dart < d.dart_total(); ++dart)
        out.peer[static_cast<size_t>(remap_dart(dart))] =
            remap_dart(d.peer[static_cast<size_t>(dart)]);
    out.start_dart = remap_dart(d.start_dart);
    if (out.is_closed() && !out.crossings.empty())
        orient(out);
    return out;
}

Diagram close_legs(const Diagram& t, const std::vector<std::pair<int, int>>& leg_pairs) {
    const int nl = t.leg_count;
    std::vector<int> mate(static_cast<size_t>(nl), -1);
    for (const auto& [a, b] : leg_pairs) {
        if (a < 0 || b < 0 || a >= nl || b >= nl || a == b || mate[static_cast<size_t>(a)] >= 0 ||
            mate[static_cast<size_t>(b)] >= 0)
            fail(Err::IndexOutOfRange, "leg pairing is not a perfect matching");
        mate[static_cast<size_t>(a)] = b;
        mate[static_cast<size_t>(b)] = a;
    }
    for (int l = 0; l < nl; ++l)
        if (mate[static_cast<size_t>(l)] < 0)
            fail(Err::IndexOutOfRange, "leg " + std::to_string(l) + " left unmatched");

    Diagram out;
    out.crossings = t.crossings;
    out.leg_count = 0;
    out.free_loops = t.free_loops;
    out.start_dart = t.start_dart;
    out.init_peers();

    const int nd = 4 * t.crossing_count();
    std::vector<bool> leg_seen(static_cast<size_t>(nl), false);
    for (int dart = 0; dart < nd; ++dart) {
        int x = t.peer[static_cast<size_t>(dart)];
        while (x >= nd) {
            const int leg = x - nd;
            leg_seen[static_cast<size_t>(leg)] = true;
            const int other = mate[static_cast<size_t>(leg)];
            leg_seen[static_cast<size_t>(other)] = true;
            x = t.peer[static_cast<size_t>(nd + other)];
        }
        out.peer[static_cast<size_t>(dart)] = x;
    }

    // Leg cycles that never touch a crossing close into free circles.
    for (int l = 0; l < nl; ++l) {
        if (leg_seen[static_cast<size_t>(l)])
            continue;
        int cur = l;
        while (!leg_seen[static_cast<size_t>(cur)]) {
            leg_seen[static_cast<size_t>(cur)] = true;
            const int across = t.peer[static_cast<size_t>(nd + cur)] - nd; // leg joined by a strand
            leg_seen[static_cast<size_t>(across)] = true;
            cur = mate[static_cast<size_t>(across)];
        }
        out.free_loops += 1;
    }

    if (!out.crossings.empty())
        orient(out);
    return out;
}

std::string to_pd_code(const Diagram& d) {
    require_closed(d, "to_pd_code");
    Diagram copy = d;
    if (!copy.crossings.empty() && copy.crossings.front().sign == 0)
        orient(copy);

    const auto comps = walk_components(copy);
    std::vector<int> arc_of(static_cast<size_t>(4 * copy.crossing_count()), 0);
    int next_arc = 1;
    std::vector<int> order; // crossings in first-encounter order
    std::vector<int> encounter(copy.crossings.size(), -1);
    for (const auto& comp : comps) {
        for (int out : comp) {
            arc_of[static_cast<size_t>(out)] = next_arc;
            arc_of[static_cast<size_t>(copy.peer[static_cast<size_t>(out)])] = next_arc;
            ++next_arc;
            const int c = copy.peer[static_cast<size_t>(out)] / 4;
            if (encounter[static_cast<size_t>(c)] < 0) {
                encounter[static_cast<size_t>(c)] = static_cast<int>(order.size());
                order.push_back(c);
            }
        }
    }

    std::ostringstream os;
    os << "PD[";
    for (size_t i = 0; i < order.size(); ++i) {
        const int c = order[i];
        const int u = copy.crossings[static_cast<size_t>(c)].under_in_slot;
        os << (i ? ", " : "") << "X[";
        for (int s = 0; s < 4; ++s)
            os << (s ? "," : "") << arc_of[static_cast<size_t>(Diagram::dart_id(c, (u + s) % 4))];
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string to_gauss_code(const Diagram& d) {
    require_closed(d, "to_gauss_code");
    Diagram copy = d;
    if (!copy.crossings.empty() && copy.crossings.front().sign == 0)
        orient(copy);

    std::vector<int> id(copy.crossings.size(), -1);
    int next_id = 1;
    std::ostringstream os;
    bool first = true;
    for (const auto& comp : walk_components(copy)) {
        for (int out : comp) {
            const int in = copy.peer[static_cast<size_t>(out)];
            const int c = in / 4;
            if (id[static_cast<size_t>(c)] < 0)
                id[static_cast<size_t>(c)] = next_id++;
            const bool under = (in % 4 == 0 || in % 4 == 2);
            os << (first ? "" : " ") << (under ? 'U' : 'O') << id[static_cast<size_t>(c)]
               << (copy.crossings[static_cast<size_t>(c)].sign > 0 ? '+' : '-');
            first = false;
        }
    }
    return os.str();
}

Diagram parse_pd_code(const std::string& text) {
    std::vector<std::array<int, 4>> terms;
    size_t pos = 0;
    while (true) {
        const size_t x = text.find("X[", pos);
        if (x == std::string::npos)
            break;
        std::array<int, 4> labels{};
        size_t p = x + 2;
        for (int s = 0; s < 4; ++s) {
            while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == ','))
                ++p;
            size_t q = p;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q])))
                ++q;
            if (q == p)
                fail(Err::ParseError, "bad PD term near position " + std::to_string(p));
            labels[static_cast<size_t>(s)] = std::stoi(text.substr(p, q - p));
            p = q;
        }
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p])))
            ++p;
        if (p >= text.size() || text[p] != ']')
            fail(Err::ParseError, "unterminated PD term");
        terms.push_back(labels);
        pos = p + 1;
    }
    if (terms.empty())
        fail(Err::ParseError, "no X[a,b,c,d] terms found");

    Diagram d;
    d.crossings.resize(terms.size());
    d.init_peers();
    std::map<int, std::vector<int>> where; // label -> darts
    for (size_t c = 0; c < terms.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            where[terms[c][static_cast<size_t>(s)]].push_back(
                Diagram::dart_id(static_cast<int>(c), s));
            d.crossings[c].dart_dx[static_cast<size_t>(s)] = std::cos(s * 1.5707963267948966);
            d.crossings[c].dart_dy[static_cast<size_t>(s)] = std::sin(s * 1.5707963267948966);
        }
    }
    for (const auto& [label, darts] : where) {
        if (darts.size() != 2)
            fail(Err::ParseError, "arc label " + std::to_string(label) + " used " +
                                      std::to_string(darts.size()) + " times (want 2)");
        d.connect(darts[0], darts[1]);
    }
    // Anchor the traversal on the edge arriving at crossing 0's under entry,
    // so emit(parse(emit(d))) is a fixed point.
    d.start_dart = d.peer[static_cast<size_t>(Diagram::dart_id(0, 0))];
    orient(d);
    return d;
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1)
        fail(Err::TooSmall, "need at least one strand");
    Diagram d;
    d.crossings.reserve(word.size());

    std::vector<int> at(static_cast<size_t>(strands));        // strand at each position
    for (int p = 0; p < strands; ++p)
        at[static_cast<size_t>(p)] = p;
    std::vector<std::vector<std::pair<int, int>>> passages(static_cast<size_t>(strands));

    const double s2 = std::sqrt(0.5);
    for (int letter : word) {
        const int r = letter > 0 ? letter : -letter;
        if (r < 1 || r >= strands)
            fail(Err::IndexOutOfRange, "braid letter out of range");
        const int down = at[static_cast<size_t>(r) - 1]; // strand moving to the lower row
        const int up = at[static_cast<size_t>(r)];
        const bool down_over = letter > 0;

        Diagram::Crossing c;
        int down_in, down_out, up_in, up_out;
        if (down_over) {
            // under = up-mover: slots CCW from its entry: SW, SE, NE, NW
            const double dx[4] = {-s2, s2, s2, -s2};
            const double dy[4] = {-s2, -s2, s2, s2};
            std::copy(dx, dx + 4, c.dart_dx.begin());
            std::copy(dy, dy + 4, c.dart_dy.begin());
            up_in = 0;
            up_out = 2;
            down_in = 3;
            down_out = 1;
        } else {
            // under = down-mover: slots CCW from its entry: NW, SW, SE, NE
            const double dx[4] = {-s2, -s2, s2, s2};
            const double dy[4] = {s2, -s2, -s2, s2};
            std::copy(dx, dx + 4, c.dart_dx.begin());
            std::copy(dy, dy + 4, c.dart_dy.begin());
            down_in = 0;
            down_out = 2;
            up_in = 1;
            up_out = 3;
        }
        const int id = d.crossing_count();
        d.crossings.push_back(c);
        passages[static_cast<size_t>(down)].push_back(
            {Diagram::dart_id(id, down_in), Diagram::dart_id(id, down_out)});
        passages[static_cast<size_t>(up)].push_back(
            {Diagram::dart_id(id, up_in), Diagram::dart_id(id, up_out)});
        std::swap(at[static_cast<size_t>(r) - 1], at[static_cast<size_t>(r)]);
    }

    d.leg_count = 2 * strands;
    d.init_peers();
    std::vector<int> exit_leg_of_strand(static_cast<size_t>(strands));
    for (int p = 0; p < strands; ++p)
        exit_leg_of_strand[static_cast<size_t>(at[static_cast<size_t>(p)])] = strands + p;
    for (int s = 0; s < strands; ++s) {
        int prev_out = d.leg_dart(s);
        for (const auto& [in, out] : passages[static_cast<size_t>(s)]) {
            d.connect(prev_out, in);
            prev_out = out;
        }
        d.connect(prev_out, d.leg_dart(exit_leg_of_strand[static_cast<size_t>(s)]));
    }

    std::vector<std::pair<int, int>> closure;
    for (int p = 0; p < strands; ++p)
        closure.push_back({p, strands + p});
    return close_legs(d, closure);
}

Diagram add_curl(const Diagram& d, int out_dart, bool positive) {
    require_closed(d, "add_curl");
    Diagram out = d;
    const int c = out.crossing_count();
    out.crossings.push_back({});
    for (int s = 0; s < 4; ++s) {
        out.crossings.back().dart_dx[static_cast<size_t>(s)] = std::cos(s * 1.5707963267948966);
        out.crossings.back().dart_dy[static_cast<size_t>(s)] = std::sin(s * 1.5707963267948966);
    }
    out.crossings.back().is_twist = true;

    // Rebuild peers with 4 more darts; old ids are stable.
    std::vector<int> old_peer = out.peer;
    out.init_peers();
    for (int dart = 0; dart < 4 * c; ++dart)
        out.peer[static_cast<size_t>(dart)] = old_peer[static_cast<size_t>(dart)];

    const int old_target = old_peer[static_cast<size_t>(out_dart)];
    if (positive) {
        out.connect(out_dart, Diagram::dart_id(c, 0));
        out.connect(Diagram::dart_id(c, 2), Diagram::dart_id(c, 1));
        out.connect(Diagram::dart_id(c, 3), old_target);
    } else {
        out.connect(out_dart, Diagram::dart_id(c, 0));
        out.connect(Diagram::dart_id(c, 2), Diagram::dart_id(c, 3));
        out.connect(Diagram::dart_id(c, 1), old_target);
    }
    orient(out);
    return out;
}

FaceData trace_faces(const Diagram& d) {
    require_closed(d, "trace_faces");
    const int nd = 4 * d.crossing_count();
    FaceData f;
    f.face_of_dart.assign(static_cast<size_t>(nd), -1);
    f.corner_face.assign(static_cast<size_t>(nd), -1);

    for (int d0 = 0; d0 < nd; ++d0) {
        if (f.face_of_dart[static_cast<size_t>(d0)] >= 0)
            continue;
        const int id = f.face_count++;
        int cur = d0;
        do {
            f.face_of_dart[static_cast<size_t>(cur)] = id;
            const int in = d.peer[static_cast<size_t>(cur)];
            f.corner_face[static_cast<size_t>(in)] = id; // corner (slot, slot+1)
            cur = rotate_ccw(in);
        } while (cur != d0);
    }

    // Planarity bookkeeping: V - E + F == 1 + (graph components) for a plane graph.
    std::vector<int> comp(d.crossings.size(), -1);
    int graph_comps = 0;
    for (size_t c0 = 0; c0 < d.crossings.size(); ++c0) {
        if (comp[c0] >= 0)
            continue;
        ++graph_comps;
        std::vector<size_t> stack{c0};
        comp[c0] = static_cast<int>(c0);
        while (!stack.empty()) {
            const size_t c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                const size_t nb =
                    static_cast<size_t>(d.peer[static_cast<size_t>(Diagram::dart_id(
                                            static_cast<int>(c), s))]) /
                    4;
                if (comp[nb] < 0) {
                    comp[nb] = static_cast<int>(c0);
                    stack.push_back(nb);
                }
            }
        }
    }
    f.euler_ok = (f.face_count == d.crossing_count() + 1 + graph_comps);

    // Checkerboard coloring: faces across an edge take opposite colors.
    f.color.assign(static_cast<size_t>(f.face_count), -1);
    std::vector<int> queue;
    for (int seed = 0; seed < f.face_count; ++seed) {
        if (f.color[static_cast<size_t>(seed)] >= 0)
            continue;
        f.color[static_cast<size_t>(seed)] = 0;
        queue.push_back(seed);
        while (!queue.empty()) {
            const int face = queue.back();
            queue.pop_back();
            for (int dart = 0; dart < nd; ++dart) {
                if (f.face_of_dart[static_cast<size_t>(dart)] != face)
                    continue;
                const int nb = f.face_of_dart[static_cast<size_t>(d.peer[static_cast<size_t>(dart)])];
                if (f.color[static_cast<size_t>(nb)] < 0) {
                    f.color[static_cast<size_t>(nb)] = 1 - f.color[static_cast<size_t>(face)];
                    queue.push_back(nb);
                } else if (f.color[static_cast<size_t>(nb)] == f.color[static_cast<size_t>(face)]) {
                    f.euler_ok = false; // not checkerboard-colorable: not planar
                }
            }
        }
    }
    return f;
}

} // namespace petal
