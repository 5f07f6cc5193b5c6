#include "core/errata.hpp"

#include "core/chebyshev.hpp"

namespace ringlad {

BigInt coeff_L_published(int n, int m) {
    if (m < 0 || m > n) return 0;
    BigInt total = 0;
    for (int j = 0; 2 * j <= m; ++j) total += binomial(n - j, j) * binomial(n - 2 * j, n - m) * pow2(m);
    for (int j = 0; 2 * j <= m - 1; ++j)
        total -= binomial(n - 1 - j, j) * binomial(n - 1 - 2 * j, n - m) * pow2(m - 1);
    for (int j = 0; 2 * j <= m - 2; ++j)
        total += binomial(n - 2 - j, j) * binomial(n - 2 - 2 * j, n - m) * pow2(m - 1);
    return total;
}

Poly scaled_u_expansion_published(int k, const Poly& a1) {
    if (k < -1) throw std::invalid_argument("scaled_u_expansion_published: k must be >= -1");
    if (k == -1) return Poly();
    Poly sum;
    std::vector<Poly> pows(static_cast<size_t>(k) + 1);
    pows[0] = Poly(1);
    for (int p = 1; p <= k; ++p) pows[static_cast<size_t>(p)] = pows[static_cast<size_t>(p - 1)] * a1;
    for (int j = 0; 2 * j <= k; ++j)
        sum += pows[static_cast<size_t>(k - 2 * j)].scaled(BigRat(binomial(k - j, j)));
    return sum;
}

namespace {

// L-family closed form with an explicit third multiplier (the published
// statement has +2z^2 in the scaled basis; the initials force -2z^2).
Poly l_closed_with_third(int k, const Poly& third) {
    const Poly a1{1, 2}, a2{0, 0, 4};
    Poly value = scaled_u_expansion(k, a1, a2);
    value -= Poly{0, 1} * scaled_u_expansion(k - 1, a1, a2);
    value += third * scaled_u_expansion(k - 2, a1, a2);
    return value;
}

// R-family expansion with an explicit sign on the (34z^2-z-1)/2 term.
Poly r_expansion_with_sign(int k, int sign) {
    const Poly a1{1, 4}, a2{0, 0, 16};
    Poly value = scaled_u_expansion(k, a1, a2);
    value -= (Poly{1, 7, 2} * scaled_u_expansion(k - 1, a1, a2)).scaled(BigRat(1, 2));
    value += (Poly{-1, -1, 34} * scaled_u_expansion(k - 2, a1, a2)).scaled(BigRat(sign, 2));
    value += (Poly{0, 0, 1} * recurrence_poly(Family::L, k - 1)).scaled(BigRat(pow2(k)));
    return value;
}

struct PolyWitness {
    bool found = false;
    int n = -1, m = -1;
    BigRat published, corrected;
};

// First (k, m), k ascending then m ascending, where `candidate` disagrees
// with the recurrence reference.
template <class CandidateFn>
PolyWitness first_poly_disagreement(Family f, int limit, CandidateFn candidate) {
    PolyWitness w;
    for (int k = family_min_index(f); k <= limit; ++k) {
        const Poly truth = recurrence_poly(f, k);
        const Poly cand = candidate(k);
        const int degree = std::max(truth.degree(), cand.degree());
        for (int m = 0; m <= degree; ++m) {
            if (cand.coeff(m) != truth.coeff(m)) {
                w.found = true;
                w.n = k;
                w.m = m;
                w.published = cand.coeff(m);
                w.corrected = truth.coeff(m);
                return w;
            }
        }
    }
    return w;
}

std::string rat_str(const BigRat& v) {
    return is_integer(v) ? boost::multiprecision::numerator(v).str() : v.str();
}

void fill_witness(Erratum& e, const PolyWitness& w, int limit, const char* index_name = "n") {
    e.witness_searched = true;
    e.search_limit = limit;
    e.witness_found = w.found;
    if (w.found) {
        e.witness_n = w.n;
        e.witness_m = w.m;
        e.witness = std::string(index_name) + "=" + std::to_string(w.n) + ", m=" + std::to_string(w.m);
        e.published_value = rat_str(w.published);
        e.corrected_value = rat_str(w.corrected);
    } else {
        e.witness = "none up to " + std::to_string(limit);
    }
}

}  // namespace

std::vector<Erratum> run_errata(int limit) {
    std::vector<Erratum> out;

    {
        Erratum e;
        e.id = "scaled-expansion-missing-factor";
        e.kind = "formula";
        e.published = "(i*sqrt(a2))^k * U_k(a1/(2*sqrt(a2)*i)) = sum_j C(k-j,j) * a1^{k-2j}";
        e.corrected = "(i*sqrt(a2))^k * U_k(a1/(2*sqrt(a2)*i)) = sum_j C(k-j,j) * a1^{k-2j} * a2^j";
        e.detail = "the a2^j factor is dropped on the published right-hand side; the later expansions, "
                   "e.g. (1+4z)^{n-2j}(4z)^{2j}, use it. Checked at a1=1+4z, a2=16z^2 against the "
                   "three-term recurrence S_k = a1*S_{k-1} + a2*S_{k-2}.";
        const Poly a1{1, 4}, a2{0, 0, 16};
        e.witness_searched = true;
        e.search_limit = limit;
        Poly s_prev2, s_prev1;  // S_{k-2}, S_{k-1} by recurrence
        for (int k = 0; k <= limit && !e.witness_found; ++k) {
            Poly reference = k == 0 ? Poly(1) : a1 * s_prev1 + a2 * s_prev2;
            Poly published = scaled_u_expansion_published(k, a1);
            if (published != reference) {
                e.witness_found = true;
                e.witness_n = k;
                e.witness = "k=" + std::to_string(k);
                e.published_value = published.str();
                e.corrected_value = reference.str();
            }
            s_prev2 = std::move(s_prev1);
            s_prev1 = std::move(reference);
        }
        if (!e.witness_found) e.witness = "none up to " + std::to_string(limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "ladder-closed-form-constant-sign";
        e.kind = "formula";
        e.published = "L_n = (2iz)^n [U_n + (i/2)U_{n-1} - (1/2)U_{n-2}] at (1+2z)/(4iz)";
        e.corrected = "L_n = (2iz)^n [U_n + (i/2)U_{n-1} + (1/2)U_{n-2}] at (1+2z)/(4iz)";
        e.detail = "solving the constants from the printed initials L_1 = 1+z, L_2 = 4z^2+3z+1 gives "
                   "+1/2 on the U_{n-2} term (scaled basis multiplier -2z^2, not +2z^2).";
        fill_witness(e, first_poly_disagreement(Family::L, limit,
                                                [](int k) { return l_closed_with_third(k, Poly{0, 0, 2}); }),
                     limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "ringel-expansion-third-term-sign";
        e.kind = "formula";
        e.published = "R_n = sum_j C(n-j,j)(1+4z)^{n-2j}(4z)^{2j} - (2z^2+7z+1)/2 * {...} "
                      "+ (34z^2-z-1)/2 * {...} + 2^n z^2 L_{n-1}";
        e.corrected = "same with the (34z^2-z-1)/2 term subtracted";
        e.detail = "the closed-form constant C = (34z^2-z-1)/(32z^2) enters the expansion through "
                   "(4zi)^2 = -16z^2, so the third sum must carry a minus sign; the published plus "
                   "fails against the initial conditions.";
        fill_witness(e, first_poly_disagreement(Family::R, limit, [](int k) { return r_expansion_with_sign(k, +1); }),
                     limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "ladder-coefficient-third-term-sign";
        e.kind = "formula";
        e.published = "D_n(m) = 2^m S1 - 2^{m-1} S2 + 2^{m-1} S3 (S3 = sum_j C(n-2-j,j) C(n-2-2j, n-m))";
        e.corrected = "D_n(m) = 2^m S1 - 2^{m-1} S2 - 2^{m-1} S3";
        e.detail = "coefficient extraction from the corrected closed form negates the third sum; "
                   "the published sign contradicts the brute-force count of rank-2 matrices at n=2.";
        PolyWitness w;
        for (int n = 1; n <= limit && !w.found; ++n) {
            const Poly truth = recurrence_poly(Family::L, n);
            for (int m = 0; m <= n; ++m) {
                BigInt published = coeff_L_published(n, m);
                if (BigRat(published) != truth.coeff(m)) {
                    w.found = true;
                    w.n = n;
                    w.m = m;
                    w.published = BigRat(published);
                    w.corrected = truth.coeff(m);
                    break;
                }
            }
        }
        fill_witness(e, w, limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "ringel-coefficient-formula-as-printed";
        e.kind = "formula";
        e.published = "the eight-term C_n(m) formula (terms in 4^m..4^{m-2}, halves on four of them, "
                      "plus 2^n D_{n-1}(m-2))";
        e.corrected = "identical; it already matches the corrected expansion sign";
        e.detail = "implemented exactly as published and compared against the recurrence; the "
                   "half-integer terms cancel for every (n, m).";
        PolyWitness w;
        for (int n = 2; n <= limit && !w.found; ++n) {
            const Poly truth = recurrence_poly(Family::R, n);
            for (int m = 0; m <= n; ++m) {
                BigRat published = coeff_R_closed_rational(n, m);
                if (published != truth.coeff(m)) {
                    w.found = true;
                    w.n = n;
                    w.m = m;
                    w.published = published;
                    w.corrected = truth.coeff(m);
                    break;
                }
            }
        }
        fill_witness(e, w, limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "bordered-x-vector-length";
        e.kind = "notation";
        e.published = "X = (x_0, x_1, ..., x_n) in (GF(2))^n";
        e.corrected = "X in (GF(2))^{n+1}; the displayed matrix has n+1 diagonal entries";
        e.detail = "with only n diagonal bits the R-family domain would halve; the rank counts sum "
                   "to 2^{3n}, not 2^{3n-1}.";
        e.witness_searched = true;
        e.search_limit = limit;
        for (int k = 2; k <= limit && !e.witness_found; ++k) {
            BigInt actual = to_integer(recurrence_poly(Family::R, k).coefficient_sum());
            BigInt published_domain = pow2(family_domain_bits(Family::R, k) - 1);
            if (actual != published_domain) {
                e.witness_found = true;
                e.witness_n = k;
                e.witness = "subscript k=" + std::to_string(k);
                e.published_value = published_domain.str();
                e.corrected_value = actual.str();
            }
        }
        if (!e.witness_found) e.witness = "none up to " + std::to_string(limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "bordered-z-vector-name-length";
        e.kind = "notation";
        e.published = "\"Y = (z_1, ..., z_n) in (GF(2))^{n-1}\" (name reused, length off by one)";
        e.corrected = "Z = (z_1, ..., z_n) in (GF(2))^n, per the displayed matrix border";
        e.detail = "same domain-size consequence as the X-length misprint; the display is authoritative.";
        e.witness_searched = true;
        e.search_limit = limit;
        for (int k = 2; k <= limit && !e.witness_found; ++k) {
            BigInt actual = to_integer(recurrence_poly(Family::R, k).coefficient_sum());
            BigInt published_domain = pow2(family_domain_bits(Family::R, k) - 1);
            if (actual != published_domain) {
                e.witness_found = true;
                e.witness_n = k;
                e.witness = "subscript k=" + std::to_string(k);
                e.published_value = published_domain.str();
                e.corrected_value = actual.str();
            }
        }
        if (!e.witness_found) e.witness = "none up to " + std::to_string(limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "even-rank-range-misprint";
        e.kind = "notation";
        e.published = "\"for all 1 >= m <= [n/2]\" on the O-family coefficient statement";
        e.corrected = "1 <= m <= floor(n/2); the formula also holds at m = 0";
        e.detail = "the printed range is not well-formed; the formula itself verifies for every "
                   "0 <= m <= floor(n/2).";
        PolyWitness w;
        for (int n = 1; n <= limit && !w.found; ++n) {
            const Poly truth = recurrence_poly(Family::O, n);
            for (int m = 0; m <= n; ++m) {
                if (BigRat(coeff_O_closed(n, m)) != truth.coeff(m)) {
                    w.found = true;
                    w.n = n;
                    w.m = m;
                    w.published = BigRat(coeff_O_closed(n, m));
                    w.corrected = truth.coeff(m);
                    break;
                }
            }
        }
        fill_witness(e, w, limit);
        out.push_back(std::move(e));
    }

    {
        Erratum e;
        e.id = "homogeneous-argument-scale";
        e.kind = "notation";
        e.published = "the P-family derivation displays U_k(1/(2*sqrt(2)*i*z))";
        e.corrected = "U_k(1/(4*sqrt(2)*i*z)); a2 = 8z^2 forces 2*sqrt(a2)*i = 4*sqrt(2)*i*z";
        e.detail = "the surrounding statement already uses the correct argument; re-deriving the "
                   "constants from P_2, P_3 reproduces its multipliers exactly.";
        e.witness_searched = true;
        e.search_limit = limit;
        RecurrenceSpec spec = family_recurrence_spec(Family::P);
        ClosedFormConstants constants = solve_constants(spec);
        // statement multipliers in the scaled basis: 1, -(z^2+1)/2, -(17z^2-1)/2
        bool statement_matches = constants.second == RationalFn::of(Poly{-1, 0, -1}, Poly(2)) &&
                                 constants.third == RationalFn::of(Poly{1, 0, -17}, Poly(2));
        e.witness_found = false;
        e.witness = statement_matches ? "statement constants re-derive exactly; only the derivation display is off"
                                      : "derived constants disagree with the statement";
        out.push_back(std::move(e));
    }

    return out;
}

}  // namespace ringlad
