#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace petal {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in one abstract variable. No zero coefficients are
/// stored. For Jones polynomials the exponent unit is t^(1/2), so integer
/// exponents cover links as well as knots.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(BigInt coeff, int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int min_exp() const;
    int max_exp() const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    void add_term(int exp, const BigInt& coeff);

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    bool operator==(const LaurentPoly& other) const = default;

    LaurentPoly shifted(int dexp) const;    // multiply by x^dexp
    LaurentPoly inverted_variable() const;  // x -> x^(-1)
    LaurentPoly negated() const;

    /// Evaluate at x = -1, with stored exponents read as multiples of
    /// 1/exp_denominator (2 for half-integer grading; all exponents must then
    /// be even).
    BigInt eval_at_minus_one(int exp_denominator = 1) const;

    /// Canonical ascending-exponent form, e.g. "-t^-4 + t^-3 + t^-1".
    /// exp_denominator divides printed exponents (2 for half-integer grading);
    /// fractional exponents print as t^(p/2).
    std::string to_string(const std::string& var, int exp_denominator = 1) const;

private:
    std::map<int, BigInt> terms_;
};

} // namespace petal
