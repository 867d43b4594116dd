#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petal/classical.hpp"
#include "petal/laurent.hpp"

namespace petal {

inline constexpr int kBracketCrossingCap = 24;
inline constexpr int kDeterminantCrossingCap = 64;

/// |H1| of the double branched cover, from the Goeritz matrix of a
/// checkerboard coloring; exact integer arithmetic throughout.
BigInt determinant(const Diagram& d);

/// Kauffman bracket by full state sum (variable A); capped at 24 crossings.
LaurentPoly kauffman_bracket(const Diagram& d);

/// Jones polynomial (-A)^(-3w) * bracket re-expressed in t = A^(-4);
/// exponents are tracked in units of t^(1/2).
LaurentPoly jones(const Diagram& d);

enum class UnknotVerdict { certified_unknot, not_unknot, indeterminate };

/// `structural_proof` marks diagrams whose unknottedness was established by a
/// terminating front-closure reduction trace. Without a proof, trivial Jones
/// and determinant alone stay indeterminate.
UnknotVerdict certify_unknot(const Diagram& d, bool structural_proof = false);

std::string verdict_name(UnknotVerdict v);

struct Fingerprint {
    std::string name;
    BigInt det;
    std::string jones_text; // half-exponent canonical form in t
};

/// Built-in table: unknot, both trefoils, figure-eight.
const std::vector<Fingerprint>& fingerprint_table();

/// Names whose fingerprints match the determinant and (when known) Jones.
std::vector<std::string> identify_candidates(const BigInt& det,
                                             const std::optional<LaurentPoly>& jones_poly);

/// Fixture diagrams for the invariant engines.
Diagram trefoil_diagram();        // the 3-crossing PD fixture, writhe +3
Diagram figure_eight_diagram();   // 4-crossing fixture, det 5
Diagram unknot_diagram();         // 0 crossings, one free loop

} // namespace petal
