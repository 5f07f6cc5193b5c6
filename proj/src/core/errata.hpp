#ifndef RINGLAD_ERRATA_HPP
#define RINGLAD_ERRATA_HPP

#include <string>
#include <vector>

#include "core/families.hpp"

namespace ringlad {

// A discrepancy between a published formula and the form forced by the
// printed initial conditions / brute force. Each entry is data: both
// variants are evaluated and the first disagreement (against an
// independent reference route) is searched for, never hardcoded. When the
// published form is actually correct the entry reports that no witness
// exists up to the search limit.
struct Erratum {
    std::string id;
    std::string kind;       // "formula" or "notation"
    std::string published;  // the statement as printed
    std::string corrected;  // the form this project computes with
    std::string detail;
    bool witness_searched = false;
    bool witness_found = false;
    std::string witness;  // e.g. "n=2, m=2", "k=2", or "none up to 60"
    long witness_n = -1;
    long witness_m = -1;
    std::string published_value;
    std::string corrected_value;
    long search_limit = 0;
};

std::vector<Erratum> run_errata(int search_limit = 60);

// The published tridiagonal-family coefficient formula with its original
// third-term sign; kept callable so the verify suite can demonstrate that a
// corrupted closed form is caught. Disagrees with the true count first at
// n=2, m=2 (8 instead of 4).
BigInt coeff_L_published(int n, int m);

// Published right-hand side of the scaled Chebyshev expansion, which drops
// the a2^j factor.
Poly scaled_u_expansion_published(int k, const Poly& a1);

}  // namespace ringlad

#endif
