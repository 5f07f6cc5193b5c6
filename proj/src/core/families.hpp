#ifndef RINGLAD_FAMILIES_HPP
#define RINGLAD_FAMILIES_HPP

#include <string>

#include "core/chebyshev.hpp"
#include "core/poly.hpp"

namespace ringlad {

// The four matrix families whose rank distributions this project computes.
//   O_k, L_k : k x k tridiagonal (x on the diagonal, y off), X = 0 for O.
//   P_k, R_k : k x k bordered tridiagonal (first row/column x_0, z_1..z_{k-1}),
//              X = 0 for P. For the Ringel ladder R_{n-1} the matrices are
//              (n+1) x (n+1), i.e. subscript = graph parameter + 1.
enum class Family { O, L, P, R };

char family_char(Family f);
Family parse_family(const std::string& name);  // throws std::invalid_argument
int family_min_index(Family f);                // O, L: 1; P, R: 2
int family_matrix_dim(Family f, int subscript);  // = subscript
// log2 of the number of variable assignments behind the subscript-k family.
int family_domain_bits(Family f, int subscript);

// Printed initial conditions; the anchor every other route is solved from.
std::array<Poly, 2> family_initials(Family f);

// Rank-distribution polynomial by running the family's recurrence.
Poly recurrence_poly(Family f, int k);

// Per-coefficient closed forms (binomial sums; no polynomial arithmetic).
// The L formula carries the corrected sign on its third term; the R formula
// is implemented exactly as published (it verifies); P has no published
// per-coefficient formula and is extracted from the closed-form expansion.
BigInt coeff_O_closed(int n, int m);
BigInt coeff_L_closed(int n, int m);
BigInt coeff_P_closed(int n, int m);
BigInt coeff_R_closed(int n, int m);
// R coefficient before the integrality assertion; half-integer terms must
// cancel, and the errata/verify machinery checks that they do.
BigRat coeff_R_closed_rational(int n, int m);

BigInt closed_coefficient(Family f, int n, int m);
Poly closed_form_poly(Family f, int k);

// The Chebyshev-basis route: constants re-derived from the initials, then
// evaluated through scaled_u_expansion only.
RecurrenceSpec family_recurrence_spec(Family f);
Poly cheby_closed_form_poly(Family f, int k);

// Total embedding distribution I(x, y) split into its orientable genus part
// (variable x) and nonorientable crosscap part (variable y, no constant).
struct TotalPoly {
    Poly genus;
    Poly crosscap;

    bool operator==(const TotalPoly& rhs) const = default;
    BigInt embedding_count() const;
    // Printed style: "2+14x+14y+42y^2+56y^3" (both parts ascending).
    std::string str() const;
};

// Genus polynomial of R_{n-1}: twice the even-rank counts of P_{n+1}.
Poly orientable_part(int n);  // n >= 2

// crosscap = 2*R_{n+1}(y) - genus(y^2); validates integrality/nonnegativity.
TotalPoly assemble_total(const Poly& p_dist, const Poly& r_dist);
TotalPoly total_embedding_poly(int n);         // recurrence route, n >= 2
TotalPoly total_embedding_poly_closed(int n);  // closed-coefficient route

}  // namespace ringlad

#endif
