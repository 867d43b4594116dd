#include "petal/laurent.hpp"

#include <sstream>

#include "petal/errors.hpp"

namespace petal {

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exp, const BigInt& coeff) {
    if (coeff == 0)
        return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e + dexp, c);
    return out;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

BigInt LaurentPoly::eval_at_minus_one(int exp_denominator) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        if (e % exp_denominator != 0)
            fail(Err::ParseError, "fractional exponent cannot be evaluated at -1");
        total += ((e / exp_denominator) % 2 == 0) ? c : -c;
    }
    return total;
}

std::string LaurentPoly::to_string(const std::string& var, int exp_denominator) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string power;
        if (e != 0) {
            if (e % exp_denominator == 0) {
                const int p = e / exp_denominator;
                power = (p == 1) ? var : var + "^" + std::to_string(p);
            } else {
                power = var + "^(" + std::to_string(e) + "/" + std::to_string(exp_denominator) + ")";
            }
        }
        if (power.empty())
            os << mag.str();
        else if (mag == 1)
            os << power;
        else
            os << mag.str() << "*" << power;
    }
    return os.str();
}

} // namespace petal
