#ifndef RINGLAD_INTS_HPP
#define RINGLAD_INTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringlad {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a requested computation exceeds its configured feasibility
// bound (brute-force domain too large, tracing budget exceeded, ...).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an internal cross-check fails; callers treat this as a bug,
// never as bad user input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline BigInt pow2(long k) {
    if (k < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(k);
}

// Binomial coefficient with the combinatorial convention: zero whenever
// a < 0, b < 0 or b > a. The closed-form coefficient sums rely on this to
// cut themselves off at their natural support.
inline BigInt binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline bool is_integer(const BigRat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const BigRat& q) {
    if (!is_integer(q)) throw internal_error("expected integral value, got " + q.str());
    return boost::multiprecision::numerator(q);
}

}  // namespace ringlad

#endif
