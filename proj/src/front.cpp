#include "petal/front.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace petal {

namespace {

// tau(e): the half twist joins endpoint e to the opposite side, reversed.
int twist_across(int n, int e) { return 2 * n - 1 - e; }

} // namespace

bool ClosurePattern::is_rainbow() const {
    for (int i = 0; i < n; ++i)
        if (mate[static_cast<size_t>(i)] != n + i)
            return false;
    return true;
}

std::string ClosurePattern::text() const {
    auto name = [&](int e) {
        return (e < n ? "L" + std::to_string(e + 1) : "R" + std::to_string(e - n + 1));
    };
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e < 2 * n; ++e) {
        if (mate[static_cast<size_t>(e)] < e)
            continue;
        os << (first ? "" : ",") << name(e) << "-" << name(mate[static_cast<size_t>(e)]);
        first = false;
    }
    return os.str();
}

Diagram half_twist_tangle(int n, bool mirror_convention) {
    if (n < 1)
        fail(Err::TooSmall, "need at least one strand");

    Diagram d;
    std::vector<int> at(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
        at[static_cast<size_t>(p)] = p + 1; // strand labels 1..n
    std::vector<std::vector<std::pair<int, int>>> passages(static_cast<size_t>(n) + 1);
    std::set<std::pair<int, int>> seen_pairs;

    const double s2 = std::sqrt(0.5);
    for (int col = 1; col <= n; ++col) {
        for (int r = (col % 2 == 1) ? 1 : 2; r + 1 <= n; r += 2) {
            const int down = at[static_cast<size_t>(r) - 1];
            const int up = at[static_cast<size_t>(r)];
            if (!seen_pairs.insert({std::min(down, up), std::max(down, up)}).second)
                fail(Err::NotBijection, "half twist layering crossed a pair twice");

            // Front slope rule: the lower-indexed strand has the smaller slope
            // and passes in front (over).
            const bool down_over = mirror_convention ? (down > up) : (down < up);
            Diagram::Crossing c;
            int down_in, down_out, up_in, up_out;
            if (down_over) {
                const double dx[4] = {-s2, s2, s2, -s2};
                const double dy[4] = {-s2, -s2, s2, s2};
                std::copy(dx, dx + 4, c.dart_dx.begin());
                std::copy(dy, dy + 4, c.dart_dy.begin());
                up_in = 0;
                up_out = 2;
                down_in = 3;
                down_out = 1;
            } else {
                const double dx[4] = {-s2, -s2, s2, s2};
                const double dy[4] = {s2, -s2, -s2, s2};
                std::copy(dx, dx + 4, c.dart_dx.begin());
                std::copy(dy, dy + 4, c.dart_dy.begin());
                down_in = 0;
                down_out = 2;
                up_in = 1;
                up_out = 3;
            }
            c.strand_a = std::min(down, up);
            c.strand_b = std::max(down, up);
            const int id = d.crossing_count();
            d.crossings.push_back(c);
            passages[static_cast<size_t>(down)].push_back(
                {Diagram::dart_id(id, down_in), Diagram::dart_id(id, down_out)});
            passages[static_cast<size_t>(up)].push_back(
                {Diagram::dart_id(id, up_in), Diagram::dart_id(id, up_out)});
            std::swap(at[static_cast<size_t>(r) - 1], at[static_cast<size_t>(r)]);
        }
    }
    if (d.crossing_count() != n * (n - 1) / 2)
        fail(Err::NotBijection, "half twist layering is incomplete");
    for (int p = 0; p < n; ++p)
        if (at[static_cast<size_t>(p)] != n - p)
            fail(Err::NotBijection, "half twist does not reverse the strand order");

    d.leg_count = 2 * n;
    d.init_peers();
    for (int s = 1; s <= n; ++s) {
        int prev_out = d.leg_dart(s - 1); // L_s
        for (const auto& [in, out] : passages[static_cast<size_t>(s)]) {
            d.connect(prev_out, in);
            prev_out = out;
        }
        d.connect(prev_out, d.leg_dart(n + (n + 1 - s) - 1)); // R_{n+1-s}
    }
    return d;
}

ClosurePattern rainbow_closure(int n) {
    if (n < 1)
        fail(Err::TooSmall, "need at least one strand");
    ClosurePattern p;
    p.n = n;
    p.mate.resize(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p.mate[static_cast<size_t>(i)] = n + i;
        p.mate[static_cast<size_t>(n + i)] = i;
    }
    return p;
}

std::vector<ClosurePattern> enumerate_closures(int n) {
    if (n < 1)
        fail(Err::TooSmall, "need at least one strand");
    if (n > 8)
        fail(Err::TooLarge, "closure enumeration capped at n = 8");

    // Cyclic boundary order: L1..Ln then Rn..R1.
    std::vector<int> endpoint_at(static_cast<size_t>(2 * n));
    for (int q = 0; q < 2 * n; ++q)
        endpoint_at[static_cast<size_t>(q)] = q < n ? q : 3 * n - q - 1;

    std::vector<ClosurePattern> out;
    std::vector<int> cyc_mate(static_cast<size_t>(2 * n), -1);

    auto emit = [&]() {
        ClosurePattern p;
        p.n = n;
        p.mate.assign(static_cast<size_t>(2 * n), -1);
        for (int q = 0; q < 2 * n; ++q) {
            const int a = endpoint_at[static_cast<size_t>(q)];
            const int b = endpoint_at[static_cast<size_t>(cyc_mate[static_cast<size_t>(q)])];
            p.mate[static_cast<size_t>(a)] = b;
        }
        out.push_back(std::move(p));
    };

    // Non-crossing matchings of a contiguous range, first point matched at
    // odd distance; recursion order is the canonical output order.
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (lo > hi) {
            bool complete = true;
            for (int q = 0; q < 2 * n; ++q)
                if (cyc_mate[static_cast<size_t>(q)] < 0)
                    complete = false;
            if (complete)
                emit();
            return;
        }
        (void)hi;
        for (int m = lo + 1; m <= hi; m += 2) {
            cyc_mate[static_cast<size_t>(lo)] = m;
            cyc_mate[static_cast<size_t>(m)] = lo;
            // Recurse on the inside, then the outside continues from the same
            // stack frame chain.
            self(self, lo + 1, m - 1);
            cyc_mate[static_cast<size_t>(lo)] = -1;
            cyc_mate[static_cast<size_t>(m)] = -1;
        }
    };
    (void)rec;

    // The two-segment recursion above is awkward; enumerate iteratively over
    // the leftmost unmatched point instead.
    std::vector<int> mate(static_cast<size_t>(2 * n), -1);
    auto solve = [&](auto&& self) -> void {
        int lo = 0;
        while (lo < 2 * n && mate[static_cast<size_t>(lo)] >= 0)
            ++lo;
        if (lo == 2 * n) {
            for (int q = 0; q < 2 * n; ++q)
                cyc_mate[static_cast<size_t>(q)] = mate[static_cast<size_t>(q)];
            emit();
            return;
        }
        for (int m = lo + 1; m < 2 * n; m += 2) {
            if (mate[static_cast<size_t>(m)] >= 0)
                break; // a matched point splits the region; m beyond it would cross
            // Non-crossing requires the span (lo, m) to be fully unmatched.
            bool clear = true;
            for (int q = lo + 1; q < m; ++q)
                if (mate[static_cast<size_t>(q)] >= 0)
                    clear = false;
            if (!clear)
                continue;
            mate[static_cast<size_t>(lo)] = m;
            mate[static_cast<size_t>(m)] = lo;
            self(self);
            mate[static_cast<size_t>(lo)] = -1;
            mate[static_cast<size_t>(m)] = -1;
        }
    };
    solve(solve);
    return out;
}

int closure_components(const ClosurePattern& pattern) {
    const int n = pattern.n;
    std::vector<bool> visited(static_cast<size_t>(2 * n), false);
    int cycles = 0;
    for (int e0 = 0; e0 < 2 * n; ++e0) {
        if (visited[static_cast<size_t>(e0)])
            continue;
        ++cycles;
        int e = e0;
        while (!visited[static_cast<size_t>(e)]) {
            visited[static_cast<size_t>(e)] = true;
            const int m = pattern.mate[static_cast<size_t>(e)];
            visited[static_cast<size_t>(m)] = true;
            e = twist_across(n, m);
        }
    }
    return cycles;
}

ReductionTrace reduce_closure(const ClosurePattern& pattern) {
    ReductionTrace trace;
    int n = pattern.n;
    std::vector<int> mate = pattern.mate;

    while (n > 2) {
        // Adjacent same-side cap, left side first, lowest index first.
        int cap_l = -1, cap_r = -1;
        for (int i = 1; i < n && cap_l < 0; ++i)
            if (mate[static_cast<size_t>(i) - 1] == i)
                cap_l = i;
        if (cap_l < 0)
            for (int i = 1; i < n && cap_r < 0; ++i)
                if (mate[static_cast<size_t>(n + i) - 1] == n + i)
                    cap_r = i;
        if (cap_l < 0 && cap_r < 0)
            fail(Err::NoAdjacentPair,
                 "no adjacent same-side pair: rainbow closure, handled by the rainbow analysis");

        int a, b, far1, far2; // cap endpoints and the capped strands' far ends
        ReductionStep step;
        if (cap_l > 0) {
            step.side = 'L';
            step.index = cap_l;
            a = cap_l - 1;
            b = cap_l;
            far1 = n + (n + 1 - cap_l) - 1; // exit of the strand entering L_i
            far2 = n + (n - cap_l) - 1;
        } else {
            step.side = 'R';
            step.index = cap_r;
            a = n + cap_r - 1;
            b = n + cap_r;
            far1 = (n + 1 - cap_r) - 1; // entry of the strand exiting R_i
            far2 = (n - cap_r) - 1;
        }

        std::vector<int> removed{a, b, far1, far2};
        if (mate[static_cast<size_t>(far1)] == far2) {
            step.shed = true;
            trace.shed_unknots += 1;
        } else {
            const int p = mate[static_cast<size_t>(far1)];
            const int q = mate[static_cast<size_t>(far2)];
            mate[static_cast<size_t>(p)] = q;
            mate[static_cast<size_t>(q)] = p;
        }
        trace.steps.push_back(step);

        // Renumber the surviving endpoints into the (n-2)-strand layout.
        std::sort(removed.begin(), removed.end());
        auto renumber = [&](int e) {
            int lefts_removed = 0, rights_removed = 0;
            for (int r : removed) {
                if (r < n && r < e)
                    ++lefts_removed;
                if (r >= n && r < e)
                    ++rights_removed;
            }
            if (e < n)
                return e - lefts_removed;
            return (e - n - rights_removed) + (n - 2);
        };
        std::vector<int> next(static_cast<size_t>(2 * (n - 2)), -1);
        for (int e = 0; e < 2 * n; ++e) {
            if (std::binary_search(removed.begin(), removed.end(), e))
                continue;
            const int m = mate[static_cast<size_t>(e)];
            next[static_cast<size_t>(renumber(e))] = renumber(m);
        }
        mate = std::move(next);
        n -= 2;
    }

    trace.base_n = n;
    ClosurePattern base;
    base.n = n;
    base.mate = mate;
    trace.base_components = n == 0 ? 0 : closure_components(base);
    trace.total_components = trace.shed_unknots + trace.base_components;
    trace.unknot = trace.total_components == 1;
    return trace;
}

FrontResult front_verdict(const ClosurePattern& pattern) {
    FrontResult r;
    r.components = closure_components(pattern);
    r.unknot = r.components == 1;
    return r;
}

Diagram compose_closure(const ClosurePattern& pattern, bool mirror_convention) {
    const Diagram tangle = half_twist_tangle(pattern.n, mirror_convention);
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < 2 * pattern.n; ++e)
        if (pattern.mate[static_cast<size_t>(e)] > e)
            pairs.push_back({e, pattern.mate[static_cast<size_t>(e)]});
    return close_legs(tangle, pairs);
}

} // namespace petal
