#include "petal/smooth.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace petal {

namespace {

void require_closed(const Diagram& d, const char* op) {
    if (!d.is_closed())
        fail(Err::OpenTangle, std::string(op) + " requires a closed diagram");
}

// Fraction-free Gaussian elimination; exact determinant of an integer matrix.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

BigInt determinant(const Diagram& d) {
    require_closed(d, "determinant");
    const int c = d.crossing_count();
    if (c > kDeterminantCrossingCap)
        fail(Err::TooManyCrossings, "determinant capped at 64 crossings");
    if (c == 0)
        return 1;

    const FaceData faces = trace_faces(d);
    if (!faces.euler_ok)
        fail(Err::ComponentCountNotOne, "face structure is not planar");

    const int white = 0; // color class of face 0; either class gives |H1|
    std::vector<int> white_index(static_cast<size_t>(faces.face_count), -1);
    int white_count = 0;
    for (int f = 0; f < faces.face_count; ++f)
        if (faces.color[static_cast<size_t>(f)] == white)
            white_index[static_cast<size_t>(f)] = white_count++;

    std::vector<std::vector<BigInt>> g(static_cast<size_t>(white_count),
                                       std::vector<BigInt>(static_cast<size_t>(white_count), 0));
    for (int ci = 0; ci < c; ++ci) {
        // Corners (0,1) and (2,3) are the regions swept rotating the under
        // strand counterclockwise onto the over strand.
        const int fa = faces.corner_face[static_cast<size_t>(4 * ci + 0)];
        const int fb = faces.corner_face[static_cast<size_t>(4 * ci + 2)];
        const bool a_white = faces.color[static_cast<size_t>(fa)] == white;
        int u, v, eta;
        if (a_white) {
            u = white_index[static_cast<size_t>(fa)];
            v = white_index[static_cast<size_t>(fb)];
            eta = -1;
        } else {
            const int f1 = faces.corner_face[static_cast<size_t>(4 * ci + 1)];
            const int f2 = faces.corner_face[static_cast<size_t>(4 * ci + 3)];
            u = white_index[static_cast<size_t>(f1)];
            v = white_index[static_cast<size_t>(f2)];
            eta = 1;
        }
        if (u == v)
            continue;
        g[static_cast<size_t>(u)][static_cast<size_t>(v)] -= eta;
        g[static_cast<size_t>(v)][static_cast<size_t>(u)] -= eta;
        g[static_cast<size_t>(u)][static_cast<size_t>(u)] += eta;
        g[static_cast<size_t>(v)][static_cast<size_t>(v)] += eta;
    }

    if (white_count <= 1)
        return 1;
    g.pop_back();
    for (auto& row : g)
        row.pop_back();
    BigInt det = bareiss_det(std::move(g));
    return det < 0 ? BigInt(-det) : det;
}

LaurentPoly kauffman_bracket(const Diagram& d) {
    require_closed(d, "kauffman_bracket");
    const int c = d.crossing_count();
    if (c > kBracketCrossingCap)
        fail(Err::TooManyCrossings, "bracket state sum capped at 24 crossings");

    const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);

    if (c == 0) {
        if (d.free_loops == 0)
            fail(Err::Empty, "empty diagram");
        LaurentPoly out = LaurentPoly::one();
        for (int i = 1; i < d.free_loops; ++i)
            out = out * delta;
        return out;
    }

    const int nd = 4 * c;
    std::vector<int16_t> peer(static_cast<size_t>(nd));
    for (int i = 0; i < nd; ++i)
        peer[static_cast<size_t>(i)] = static_cast<int16_t>(d.peer[static_cast<size_t>(i)]);

    // counts[a][l]: states with a A-smoothings and l loops.
    std::vector<std::vector<long long>> counts(static_cast<size_t>(c) + 1,
                                               std::vector<long long>(static_cast<size_t>(c) + 2, 0));
    std::vector<uint8_t> visited(static_cast<size_t>(nd));
    const uint32_t nstates = 1u << c;
    for (uint32_t state = 0; state < nstates; ++state) {
        std::fill(visited.begin(), visited.end(), 0);
        int loops = 0;
        for (int d0 = 0; d0 < nd; ++d0) {
            if (visited[static_cast<size_t>(d0)])
                continue;
            ++loops;
            int cur = d0;
            while (!visited[static_cast<size_t>(cur)]) {
                visited[static_cast<size_t>(cur)] = 1;
                const int slot = cur & 3;
                const int base = cur & ~3;
                // A-smoothing joins slots (0,1) and (2,3); B joins (0,3),(1,2).
                // Pinned by <positive kink> = -A^3 together with the sign rule.
                const int partner =
                    base + (((state >> (cur >> 2)) & 1u) ? (3 - slot) : (slot ^ 1));
                visited[static_cast<size_t>(partner)] = 1;
                cur = peer[static_cast<size_t>(partner)];
            }
        }
        const int num_b = std::popcount(state);
        if (loops > c + 1)
            fail(Err::ComponentCountNotOne, "state loop count exceeds planar bound");
        counts[static_cast<size_t>(c - num_b)][static_cast<size_t>(loops)] += 1;
    }

    LaurentPoly bracket;
    std::vector<LaurentPoly> delta_pow(static_cast<size_t>(c) + 2 + static_cast<size_t>(d.free_loops));
    delta_pow[0] = LaurentPoly::one();
    for (size_t i = 1; i < delta_pow.size(); ++i)
        delta_pow[i] = delta_pow[i - 1] * delta;
    for (int a = 0; a <= c; ++a) {
        for (int l = 1; l <= c + 1; ++l) {
            const long long cnt = counts[static_cast<size_t>(a)][static_cast<size_t>(l)];
            if (cnt == 0)
                continue;
            bracket = bracket + delta_pow[static_cast<size_t>(l - 1 + d.free_loops)].shifted(2 * a - c) *
                                    LaurentPoly::monomial(cnt, 0);
        }
    }
    return bracket;
}

LaurentPoly jones(const Diagram& d) {
    const LaurentPoly bracket = kauffman_bracket(d);
    const long long w = d.crossings.empty() ? 0 : writhe(d);

    // The project's writhe orientation is the negative of the textbook one,
    // so the kink-cancelling normalization is (-A)^(+3w); then t^(1/2) = A^(-2).
    LaurentPoly normalized = bracket.shifted(static_cast<int>(3 * w));
    if (w % 2 != 0)
        normalized = normalized.negated();

    LaurentPoly out;
    for (const auto& [e, coeff] : normalized.terms()) {
        if (e % 2 != 0)
            fail(Err::ParseError, "bracket exponent parity violated");
        out.add_term(-e / 2, coeff);
    }
    return out;
}

UnknotVerdict certify_unknot(const Diagram& d, bool structural_proof) {
    require_closed(d, "certify_unknot");
    if (component_count(d) != 1)
        return UnknotVerdict::not_unknot;
    if (structural_proof || d.crossing_count() <= 1)
        return UnknotVerdict::certified_unknot;
    if (determinant(d) != 1)
        return UnknotVerdict::not_unknot;
    if (d.crossing_count() <= kBracketCrossingCap && !jones(d).is_one())
        return UnknotVerdict::not_unknot;
    return UnknotVerdict::indeterminate;
}

std::string verdict_name(UnknotVerdict v) {
    switch (v) {
    case UnknotVerdict::certified_unknot: return "certified_unknot";
    case UnknotVerdict::not_unknot: return "not_unknot";
    default: return "indeterminate";
    }
}

const std::vector<Fingerprint>& fingerprint_table() {
    static const std::vector<Fingerprint> table = {
        {"unknot", 1, "1"},
        {"trefoil (writhe +3)", 3, "-t^-4 + t^-3 + t^-1"},
        {"trefoil (writhe -3)", 3, "t + t^3 - t^4"},
        {"figure-eight", 5, "t^-2 - t^-1 + 1 - t + t^2"},
    };
    return table;
}

std::vector<std::string> identify_candidates(const BigInt& det,
                                             const std::optional<LaurentPoly>& jones_poly) {
    std::vector<std::string> names;
    const std::string jones_text = jones_poly ? jones_poly->to_string("t", 2) : std::string();
    for (const auto& fp : fingerprint_table()) {
        if (fp.det != det)
            continue;
        if (jones_poly && fp.jones_text != jones_text)
            continue;
        names.push_back(fp.name);
    }
    return names;
}

Diagram trefoil_diagram() {
    return parse_pd_code("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
}

Diagram figure_eight_diagram() {
    return braid_closure(3, {1, -2, 1, -2});
}

Diagram unknot_diagram() {
    Diagram d;
    d.free_loops = 1;
    d.init_peers();
    return d;
}

} // namespace petal
