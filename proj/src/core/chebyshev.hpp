#ifndef RINGLAD_CHEBYSHEV_HPP
#define RINGLAD_CHEBYSHEV_HPP

#include <functional>
#include <optional>

#include "core/poly.hpp"

namespace ringlad {

// Chebyshev polynomial of the second kind, U_k = 2x U_{k-1} - U_{k-2},
// U_0 = 1, U_1 = 2x.
Poly chebyshev_u(int k);

// The same polynomial via the binomial expansion
//   U_k(x) = sum_j C(k-j, j) (-1)^j (2x)^{k-2j}.
Poly chebyshev_u_binomial(int k);

bool chebyshev_u_identity_holds(int k);

// scaled_u(k, a1, a2) = (i*sqrt(a2))^k * U_k(a1 / (2*sqrt(a2)*i))
//                     = sum_j C(k-j, j) * a1^{k-2j} * a2^j,
// a plain polynomial: all complex and radical content cancels. It satisfies
// S_k = a1*S_{k-1} + a2*S_{k-2} with S_{-1} = 0, S_0 = 1, which is how the
// closed forms below stay exact. Accepts k >= -1.
Poly scaled_u_expansion(int k, const Poly& a1, const Poly& a2);

// P_k = a1*P_{k-1} + a2*P_{k-2} + forcing, with two consecutive initial
// polynomials and an optional particular solution covering the forcing term.
struct RecurrenceSpec {
    Poly a1;
    Poly a2;
    int first_index = 1;          // index of initials[0]
    std::array<Poly, 2> initials; // P_{first_index}, P_{first_index + 1}
    std::function<Poly(int)> particular;  // empty for homogeneous recurrences
};

// Multipliers of the scaled Chebyshev basis: the homogeneous part of the
// solution is lead*S_k + second*S_{k-1} + third*S_{k-2}. lead is normalized
// to 1, matching the closed-form statements this project re-derives.
struct ClosedFormConstants {
    RationalFn lead = RationalFn::one();
    RationalFn second = RationalFn::zero();
    RationalFn third = RationalFn::zero();
};

// Re-derives the constants from the initial conditions (after subtracting
// the particular solution). Throws internal_error when the 2x2 system is
// singular, which cannot happen for a2 != 0.
ClosedFormConstants solve_constants(const RecurrenceSpec& spec);

// Evaluates the closed form at index k, entirely through scaled_u_expansion
// plus the particular term; no recurrence step is taken.
Poly closed_form_eval(const RecurrenceSpec& spec, const ClosedFormConstants& constants, int k);

}  // namespace ringlad

#endif
