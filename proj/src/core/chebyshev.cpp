#include "core/chebyshev.hpp"

#include <stdexcept>

namespace ringlad {

Poly chebyshev_u(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_u: k must be >= 0");
    Poly prev2(1);          // U_0
    Poly prev1 = Poly{0, 2};  // U_1 = 2x
    if (k == 0) return prev2;
    if (k == 1) return prev1;
    const Poly two_x{0, 2};
    for (int i = 2; i <= k; ++i) {
        Poly cur = two_x * prev1 - prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

Poly chebyshev_u_binomial(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_u_binomial: k must be >= 0");
    Poly sum;
    for (int j = 0; 2 * j <= k; ++j) {
        BigRat c(binomial(k - j, j) * (j % 2 ? -1 : 1));
        // (2x)^{k-2j} = 2^{k-2j} x^{k-2j}
        c *= BigRat(pow2(k - 2 * j));
        sum += Poly::monomial(c, k - 2 * j);
    }
    return sum;
}

bool chebyshev_u_identity_holds(int k) { return chebyshev_u(k) == chebyshev_u_binomial(k); }

Poly scaled_u_expansion(int k, const Poly& a1, const Poly& a2) {
    if (k < -1) throw std::invalid_argument("scaled_u_expansion: k must be >= -1");
    if (k == -1) return Poly();
    Poly sum;
    // powers of a1 built descending to avoid recomputation
    std::vector<Poly> a1_pow(static_cast<size_t>(k) + 1);
    a1_pow[0] = Poly(1);
    for (int p = 1; p <= k; ++p) a1_pow[static_cast<size_t>(p)] = a1_pow[static_cast<size_t>(p - 1)] * a1;
    Poly a2_pow(1);
    for (int j = 0; 2 * j <= k; ++j) {
        sum += (a1_pow[static_cast<size_t>(k - 2 * j)] * a2_pow).scaled(BigRat(binomial(k - j, j)));
        a2_pow *= a2;
    }
    return sum;
}

ClosedFormConstants solve_constants(const RecurrenceSpec& spec) {
    if (spec.a2.is_zero()) throw std::invalid_argument("solve_constants: a2 must not be identically zero");
    const int f = spec.first_index;
    auto homogeneous = [&](int idx, const Poly& value) {
        return spec.particular ? value - spec.particular(idx) : value;
    };
    const Poly h0 = homogeneous(f, spec.initials[0]);
    const Poly h1 = homogeneous(f + 1, spec.initials[1]);
    const Poly s_fm2 = scaled_u_expansion(f - 2, spec.a1, spec.a2);
    const Poly s_fm1 = scaled_u_expansion(f - 1, spec.a1, spec.a2);
    const Poly s_f = scaled_u_expansion(f, spec.a1, spec.a2);
    const Poly s_f1 = scaled_u_expansion(f + 1, spec.a1, spec.a2);

    // With lead fixed at 1:  second*S_{f-1} + third*S_{f-2} = h0 - S_f
    //                        second*S_f     + third*S_{f-1} = h1 - S_{f+1}
    const Poly r0 = h0 - s_f;
    const Poly r1 = h1 - s_f1;
    const Poly det = s_fm1 * s_fm1 - s_fm2 * s_f;
    if (det.is_zero()) throw internal_error("solve_constants: singular initial-condition system");
    ClosedFormConstants out;
    out.lead = RationalFn::one();
    out.second = RationalFn::of(r0 * s_fm1 - r1 * s_fm2, det);
    out.third = RationalFn::of(s_fm1 * r1 - s_f * r0, det);
    return out;
}

Poly closed_form_eval(const RecurrenceSpec& spec, const ClosedFormConstants& constants, int k) {
    if (k < spec.first_index) throw std::invalid_argument("closed_form_eval: k below the first initial index");
    const Poly s_k = scaled_u_expansion(k, spec.a1, spec.a2);
    const Poly s_k1 = scaled_u_expansion(k - 1, spec.a1, spec.a2);
    const Poly s_k2 = scaled_u_expansion(k - 2, spec.a1, spec.a2);
    const RationalFn& a = constants.lead;
    const RationalFn& b = constants.second;
    const RationalFn& c = constants.third;
    Poly num = a.num * s_k * b.den * c.den + b.num * s_k1 * a.den * c.den + c.num * s_k2 * a.den * b.den;
    Poly den = a.den * b.den * c.den;
    auto quotient = Poly::divide_exact(num, den);
    if (!quotient) throw internal_error("closed_form_eval: closed form did not reduce to a polynomial");
    Poly result = *quotient;
    if (spec.particular) result += spec.particular(k);
    return result;
}

}  // namespace ringlad
