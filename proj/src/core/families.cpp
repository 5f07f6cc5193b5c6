#include "core/families.hpp"

#include <stdexcept>

namespace ringlad {

char family_char(Family f) {
    switch (f) {
        case Family::O: return 'O';
        case Family::L: return 'L';
        case Family::P: return 'P';
        case Family::R: return 'R';
    }
    throw std::invalid_argument("family_char: bad family");
}

Family parse_family(const std::string& name) {
    if (name == "O" || name == "o") return Family::O;
    if (name == "L" || name == "l") return Family::L;
    if (name == "P" || name == "p") return Family::P;
    if (name == "R" || name == "r") return Family::R;
    throw std::invalid_argument("unknown family '" + name + "' (expected O, L, P or R)");
}

int family_min_index(Family f) { return (f == Family::O || f == Family::L) ? 1 : 2; }

int family_matrix_dim(Family, int subscript) { return subscript; }

int family_domain_bits(Family f, int k) {
    switch (f) {
        case Family::O: return k - 1;          // y_1..y_{k-1}
        case Family::L: return 2 * k - 1;      // x_1..x_k, y_1..y_{k-1}
        case Family::P: return 2 * k - 3;      // y_1..y_{k-2}, z_1..z_{k-1}
        case Family::R: return 3 * k - 3;      // x_0..x_{k-1}, y, z
    }
    throw std::invalid_argument("family_domain_bits: bad family");
}

std::array<Poly, 2> family_initials(Family f) {
    switch (f) {
        case Family::O: return {Poly{1}, Poly{1, 0, 1}};
        case Family::L: return {Poly{1, 1}, Poly{1, 3, 4}};
        case Family::P: return {Poly{1, 0, 1}, Poly{1, 0, 7}};
        case Family::R: return {Poly{1, 3, 4}, Poly{1, 7, 28, 28}};
    }
    throw std::invalid_argument("family_initials: bad family");
}

namespace {

void check_index(Family f, int k) {
    if (k < family_min_index(f))
        throw std::invalid_argument(std::string("family ") + family_char(f) + " is defined for subscripts >= " +
                                    std::to_string(family_min_index(f)) + ", got " + std::to_string(k));
}

const Poly kZSquared = Poly{0, 0, 1};

}  // namespace

Poly recurrence_poly(Family f, int k) {
    check_index(f, k);
    auto [p0, p1] = family_initials(f);
    const int first = family_min_index(f);
    if (k == first) return p0;
    if (k == first + 1) return p1;

    switch (f) {
        case Family::O: {
            const Poly step = Poly{0, 0, 2};  // 2z^2
            for (int i = first + 2; i <= k; ++i) {
                Poly cur = p1 + step * p0;
                p0 = std::move(p1);
                p1 = std::move(cur);
            }
            return p1;
        }
        case Family::L: {
            const Poly lin = Poly{1, 2};      // 1+2z
            const Poly step = Poly{0, 0, 4};  // 4z^2
            for (int i = first + 2; i <= k; ++i) {
                Poly cur = lin * p1 + step * p0;
                p0 = std::move(p1);
                p1 = std::move(cur);
            }
            return p1;
        }
        case Family::P: {
            // P_i = P_{i-1} + 8z^2 P_{i-2} + 2^{i-2} z^2 O_{i-2}
            const Poly step = Poly{0, 0, 8};
            auto [o0, o1] = family_initials(Family::O);  // O_1, O_2
            const Poly o_step = Poly{0, 0, 2};
            for (int i = 4; i <= k; ++i) {
                // o0 currently holds O_{i-3}, o1 holds O_{i-2}
                Poly cur = p1 + step * p0 + (kZSquared * o1).scaled(BigRat(pow2(i - 2)));
                p0 = std::move(p1);
                p1 = std::move(cur);
                Poly o_cur = o1 + o_step * o0;
                o0 = std::move(o1);
                o1 = std::move(o_cur);
            }
            return p1;
        }
        case Family::R: {
            // R_i = (1+4z) R_{i-1} + 16z^2 R_{i-2} + 2^{i-1} z^2 L_{i-2}
            const Poly lin = Poly{1, 4};
            const Poly step = Poly{0, 0, 16};
            auto [l0, l1] = family_initials(Family::L);  // L_1, L_2
            const Poly l_lin = Poly{1, 2};
            const Poly l_step = Poly{0, 0, 4};
            for (int i = 4; i <= k; ++i) {
                Poly cur = lin * p1 + step * p0 + (kZSquared * l1).scaled(BigRat(pow2(i - 1)));
                p0 = std::move(p1);
                p1 = std::move(cur);
                Poly l_cur = l_lin * l1 + l_step * l0;
                l0 = std::move(l1);
                l1 = std::move(l_cur);
            }
            return p1;
        }
    }
    throw std::invalid_argument("recurrence_poly: bad family");
}

BigInt coeff_O_closed(int n, int m) {
    if (m < 0 || m > n) return 0;
    if (m % 2) return 0;
    const int t = m / 2;
    BigInt first = binomial(n - t, t);
    if (first != 0) first *= pow2(t);
    BigInt second = binomial(n - t - 1, t - 1);
    if (second != 0) second *= pow2(t - 1);
    return first - second;
}

BigInt coeff_L_closed(int n, int m) {
    if (m < 0 || m > n) return 0;
    BigInt total = 0;
    for (int j = 0; 2 * j <= m; ++j) total += binomial(n - j, j) * binomial(n - 2 * j, n - m) * pow2(m);
    for (int j = 0; 2 * j <= m - 1; ++j)
        total -= binomial(n - 1 - j, j) * binomial(n - 1 - 2 * j, n - m) * pow2(m - 1);
    // third term negated relative to the published formula; the published
    // plus sign contradicts the n=2, m=2 count (see the errata report)
    for (int j = 0; 2 * j <= m - 2; ++j)
        total -= binomial(n - 2 - j, j) * binomial(n - 2 - 2 * j, n - m) * pow2(m - 1);
    return total;
}

namespace {

// [z^t] of sum_j C(k-j, j) (8 z^2)^j
BigInt even_power_series_coeff(int k, int t) {
    if (t < 0 || t % 2) return 0;
    const int j = t / 2;
    BigInt b = binomial(k - j, j);
    if (b == 0) return 0;
    return b * pow2(3 * j);  // 8^j
}

}  // namespace

BigInt coeff_P_closed(int n, int m) {
    if (n < 2) throw std::invalid_argument("coeff_P_closed: n must be >= 2");
    if (m < 0 || m > n) return 0;
    if (m % 2) return 0;
    BigRat total(even_power_series_coeff(n, m));
    total -= BigRat(even_power_series_coeff(n - 1, m - 2) + even_power_series_coeff(n - 1, m)) / 2;
    total -= BigRat(17 * even_power_series_coeff(n - 2, m - 2) - even_power_series_coeff(n - 2, m)) / 2;
    total += BigRat(pow2(n - 1) * coeff_O_closed(n - 1, m - 2));
    return to_integer(total);
}

BigRat coeff_R_closed_rational(int n, int m) {
    if (n < 2) throw std::invalid_argument("coeff_R_closed: n must be >= 2");
    if (m < 0 || m > n) return 0;
    auto pow4 = [](int e) { return BigRat(pow2(2 * e)); };
    BigRat total(0);
    for (int j = 0; 2 * j <= m; ++j)
        total += BigRat(binomial(n - j, j) * binomial(n - 2 * j, n - m)) * pow4(m);
    for (int j = 0; 2 * j <= m - 2; ++j)
        total -= BigRat(binomial(n - j - 1, j) * binomial(n - 1 - 2 * j, n - m + 1)) * pow4(m - 2);
    for (int j = 0; 2 * j <= m - 1; ++j)
        total -= BigRat(7, 2) * BigRat(binomial(n - j - 1, j) * binomial(n - 1 - 2 * j, n - m)) * pow4(m - 1);
    for (int j = 0; 2 * j <= m; ++j)
        total -= BigRat(1, 2) * BigRat(binomial(n - j - 1, j) * binomial(n - 1 - 2 * j, n - m - 1)) * pow4(m);
    for (int j = 0; 2 * j <= m - 2; ++j)
        total -= BigRat(17) * BigRat(binomial(n - j - 2, j) * binomial(n - 2 - 2 * j, n - m)) * pow4(m - 2);
    for (int j = 0; 2 * j <= m - 1; ++j)
        total += BigRat(1, 2) * BigRat(binomial(n - j - 2, j) * binomial(n - 2 - 2 * j, n - m - 1)) * pow4(m - 1);
    for (int j = 0; 2 * j <= m; ++j)
        total += BigRat(1, 2) * BigRat(binomial(n - j - 2, j) * binomial(n - 2 - 2 * j, n - m - 2)) * pow4(m);
    if (m >= 2) total += BigRat(pow2(n) * coeff_L_closed(n - 1, m - 2));
    return total;
}

BigInt coeff_R_closed(int n, int m) {
    BigRat value = coeff_R_closed_rational(n, m);
    if (!is_integer(value))
        throw internal_error("coeff_R_closed: non-integral value " + value.str() + " at n=" + std::to_string(n) +
                             ", m=" + std::to_string(m));
    return boost::multiprecision::numerator(value);
}

BigInt closed_coefficient(Family f, int n, int m) {
    switch (f) {
        case Family::O: return coeff_O_closed(n, m);
        case Family::L: return coeff_L_closed(n, m);
        case Family::P: return coeff_P_closed(n, m);
        case Family::R: return coeff_R_closed(n, m);
    }
    throw std::invalid_argument("closed_coefficient: bad family");
}

Poly closed_form_poly(Family f, int k) {
    check_index(f, k);
    std::vector<BigRat> coeffs(static_cast<size_t>(k) + 1);
    for (int m = 0; m <= k; ++m) coeffs[static_cast<size_t>(m)] = BigRat(closed_coefficient(f, k, m));
    return Poly::from_coeffs(std::move(coeffs));
}

RecurrenceSpec family_recurrence_spec(Family f) {
    RecurrenceSpec spec;
    spec.first_index = family_min_index(f);
    spec.initials = family_initials(f);
    switch (f) {
        case Family::O:
            spec.a1 = Poly{1};
            spec.a2 = Poly{0, 0, 2};
            break;
        case Family::L:
            spec.a1 = Poly{1, 2};
            spec.a2 = Poly{0, 0, 4};
            break;
        case Family::P:
            spec.a1 = Poly{1};
            spec.a2 = Poly{0, 0, 8};
            spec.particular = [](int k) {
                return (kZSquared * recurrence_poly(Family::O, k - 1)).scaled(BigRat(pow2(k - 1)));
            };
            break;
        case Family::R:
            spec.a1 = Poly{1, 4};
            spec.a2 = Poly{0, 0, 16};
            spec.particular = [](int k) {
                return (kZSquared * recurrence_poly(Family::L, k - 1)).scaled(BigRat(pow2(k)));
            };
            break;
    }
    return spec;
}

Poly cheby_closed_form_poly(Family f, int k) {
    check_index(f, k);
    RecurrenceSpec spec = family_recurrence_spec(f);
    return closed_form_eval(spec, solve_constants(spec), k);
}

BigInt TotalPoly::embedding_count() const {
    return to_integer(genus.coefficient_sum() + crosscap.coefficient_sum());
}

std::string TotalPoly::str() const {
    std::string out = genus.str("x", /*descending=*/false);
    if (!crosscap.is_zero()) out += "+" + crosscap.str("y", /*descending=*/false);
    return out;
}

Poly orientable_part(int n) {
    if (n < 2) throw std::invalid_argument("orientable_part: n must be >= 2");
    const Poly p = recurrence_poly(Family::P, n + 1);
    std::vector<BigRat> genus;
    for (int m = 0; 2 * m <= p.degree(); ++m) genus.push_back(p.coeff(2 * m) * 2);
    for (int m = 1; m <= p.degree(); m += 2)
        if (p.coeff(m) != 0) throw internal_error("orientable_part: odd-rank count must vanish");
    return Poly::from_coeffs(std::move(genus));
}

TotalPoly assemble_total(const Poly& p_dist, const Poly& r_dist) {
    if (!p_dist.all_integral() || !p_dist.all_nonnegative() || !r_dist.all_integral() ||
        !r_dist.all_nonnegative())
        throw internal_error("assemble_total: rank distributions must have nonnegative integer counts");
    std::vector<BigRat> genus;
    for (int m = 0; 2 * m <= p_dist.degree(); ++m) genus.push_back(p_dist.coeff(2 * m) * 2);
    for (int m = 1; m <= p_dist.degree(); m += 2)
        if (p_dist.coeff(m) != 0)
            throw internal_error("assemble_total: zero-diagonal family has an odd-rank count");
    TotalPoly total;
    total.genus = Poly::from_coeffs(std::move(genus));
    total.crosscap = r_dist.scaled(2) - total.genus.substitute_square();
    if (total.crosscap.coeff(0) != 0)
        throw internal_error("assemble_total: crosscap part must have no constant term");
    if (!total.crosscap.all_nonnegative() || !total.crosscap.all_integral())
        throw internal_error("assemble_total: crosscap part must have nonnegative integer coefficients");
    return total;
}

TotalPoly total_embedding_poly(int n) {
    if (n < 2) throw std::invalid_argument("total_embedding_poly: n must be >= 2");
    return assemble_total(recurrence_poly(Family::P, n + 1), recurrence_poly(Family::R, n + 1));
}

TotalPoly total_embedding_poly_closed(int n) {
    if (n < 2) throw std::invalid_argument("total_embedding_poly_closed: n must be >= 2");
    return assemble_total(closed_form_poly(Family::P, n + 1), closed_form_poly(Family::R, n + 1));
}

}  // namespace ringlad
