#include "core/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ringlad {

Poly::Poly(const BigRat& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) : Poly(BigRat(constant)) {}

Poly::Poly(std::initializer_list<long> ascending_coeffs) {
    coeffs_.reserve(ascending_coeffs.size());
    for (long c : ascending_coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::from_coeffs(std::vector<BigRat> ascending) {
    Poly p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

Poly Poly::monomial(const BigRat& coeff, int exponent) {
    Poly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, BigRat(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& Poly::coeff(int exponent) const {
    static const BigRat kZero(0);
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(exponent)];
}

Poly Poly::operator+(const Poly& rhs) const {
    std::vector<BigRat> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return from_coeffs(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
    std::vector<BigRat> out = coeffs_;
    for (auto& c : out) c = -c;
    return from_coeffs(std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly();
    std::vector<BigRat> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return from_coeffs(std::move(out));
}

Poly Poly::scaled(const BigRat& factor) const {
    std::vector<BigRat> out = coeffs_;
    for (auto& c : out) c *= factor;
    return from_coeffs(std::move(out));
}

Poly Poly::shifted(int exponents) const {
    if (is_zero()) return Poly();
    if (exponents < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    std::vector<BigRat> out(static_cast<size_t>(exponents), BigRat(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return from_coeffs(std::move(out));
}

Poly Poly::substitute_square() const {
    if (is_zero()) return Poly();
    std::vector<BigRat> out(coeffs_.size() * 2 - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
    return from_coeffs(std::move(out));
}

BigRat Poly::eval(const BigRat& at) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

bool Poly::all_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return is_integer(c); });
}

bool Poly::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c >= 0; });
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Poly();
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<BigRat> rem = num.coeffs_;
    std::vector<BigRat> quot(static_cast<size_t>(num.degree() - den.degree()) + 1, BigRat(0));
    const BigRat& lead = den.coeffs_.back();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        BigRat q = rem[static_cast<size_t>(k + den.degree())] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= den.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * den.coeffs_[static_cast<size_t>(j)];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigRat& c) { return c != 0; })) return std::nullopt;
    return from_coeffs(std::move(quot));
}

namespace {

std::string coeff_str(const BigRat& c) {
    if (is_integer(c)) return boost::multiprecision::numerator(c).str();
    return c.str();
}

}  // namespace

std::string Poly::str(std::string_view var, bool descending) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](int e) {
        const BigRat& c = coeffs_[static_cast<size_t>(e)];
        if (c == 0) return;
        BigRat mag = c < 0 ? BigRat(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (e == 0) {
            out << coeff_str(mag);
        } else {
            if (mag != 1) out << coeff_str(mag);
            out << var;
            if (e > 1) out << '^' << e;
        }
    };
    if (descending)
        for (int e = degree(); e >= 0; --e) emit(e);
    else
        for (int e = 0; e <= degree(); ++e) emit(e);
    return out.str();
}

RationalFn RationalFn::of(Poly num, Poly den) {
    if (den.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    if (auto q = Poly::divide_exact(num, den)) return {*q, Poly(1)};
    return {std::move(num), std::move(den)};
}

bool RationalFn::operator==(const RationalFn& rhs) const {
    return num * rhs.den == rhs.num * den;  // cross-multiplied; dens are nonzero
}

std::string RationalFn::str(std::string_view var) const {
    if (is_poly()) return num.str(var);
    return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

}  // namespace ringlad
