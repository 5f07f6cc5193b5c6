#ifndef RINGLAD_POLY_HPP
#define RINGLAD_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/ints.hpp"

namespace ringlad {

// Dense univariate polynomial with exact rational coefficients.
// Coefficient index = exponent; trailing zeros are always trimmed, so the
// zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const BigRat& constant);
    explicit Poly(long constant);
    Poly(std::initializer_list<long> ascending_coeffs);
    static Poly from_coeffs(std::vector<BigRat> ascending);
    static Poly monomial(const BigRat& coeff, int exponent);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigRat& coeff(int exponent) const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Poly scaled(const BigRat& factor) const;
    Poly shifted(int exponents) const;  // multiply by z^exponents
    Poly substitute_square() const;     // z -> z^2

    BigRat eval(const BigRat& at) const;
    BigRat coefficient_sum() const { return eval(1); }

    bool all_integral() const;
    bool all_nonnegative() const;

    // Exact quotient, or nullopt when den does not divide num (or den == 0).
    static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

    // Renders in the style "28z^3+28z^2+7z+1" (no spaces, unit coefficients
    // omitted). Rational coefficients, which never escape to final outputs,
    // render as p/q.
    std::string str(std::string_view var = "z", bool descending = true) const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

// Ratio of polynomials; normalized to denominator 1 whenever the division
// is exact (it is for every family this project solves).
struct RationalFn {
    Poly num;
    Poly den = Poly(1);

    static RationalFn of(Poly num, Poly den);
    static RationalFn zero() { return {Poly(), Poly(1)}; }
    static RationalFn one() { return {Poly(1), Poly(1)}; }
    bool is_poly() const { return den == Poly(1); }
    bool operator==(const RationalFn& rhs) const;
    std::string str(std::string_view var = "z") const;
};

}  // namespace ringlad

#endif
