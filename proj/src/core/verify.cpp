#include "core/verify.hpp"

#include <algorithm>

#include "core/enumeration.hpp"
#include "core/errata.hpp"
#include "core/rotation.hpp"
#include "core/util.hpp"

namespace ringlad {

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

size_t VerifyReport::failures() const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const Check* VerifyReport::first_failure() const {
    for (const Check& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

std::string rat_str(const BigRat& v) {
    return is_integer(v) ? boost::multiprecision::numerator(v).str() : v.str();
}

Check compare_polys(std::string name, std::string family, int n, const Poly& truth, const Poly& candidate) {
    Check c;
    c.name = std::move(name);
    c.family = std::move(family);
    c.n = n;
    const int degree = std::max(truth.degree(), candidate.degree());
    for (int m = 0; m <= degree; ++m) {
        if (truth.coeff(m) != candidate.coeff(m)) {
            c.pass = false;
            c.m = m;
            c.expected = rat_str(truth.coeff(m));
            c.got = rat_str(candidate.coeff(m));
            return c;
        }
    }
    return c;
}

Poly closed_poly_for_check(Family f, int k, const VerifyOptions& opts) {
    if (f == Family::L && opts.use_published_L_coefficients) {
        std::vector<BigRat> coeffs(static_cast<size_t>(k) + 1);
        for (int m = 0; m <= k; ++m) coeffs[static_cast<size_t>(m)] = BigRat(coeff_L_published(k, m));
        return Poly::from_coeffs(std::move(coeffs));
    }
    return closed_form_poly(f, k);
}

constexpr Family kFamilies[] = {Family::O, Family::L, Family::P, Family::R};

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
    Stopwatch watch;
    VerifyReport report;
    auto add = [&](Check c) { report.checks.push_back(std::move(c)); };

    // closed-form coefficient formulas against the recurrences
    for (Family f : kFamilies) {
        for (int k = family_min_index(f); k <= opts.max_n_closed; ++k)
            add(compare_polys("recurrence-vs-closed", std::string(1, family_char(f)), k, recurrence_poly(f, k),
                              closed_poly_for_check(f, k, opts)));
    }

    // Chebyshev-basis closed form (constants re-derived from the initials)
    for (Family f : kFamilies) {
        for (int k = family_min_index(f); k <= opts.max_n_closed; ++k)
            add(compare_polys("recurrence-vs-chebyshev", std::string(1, family_char(f)), k, recurrence_poly(f, k),
                              cheby_closed_form_poly(f, k)));
    }

    // counting identities per family
    for (Family f : kFamilies) {
        for (int k = family_min_index(f); k <= opts.max_n_closed; ++k) {
            Check c;
            c.name = "family-sum";
            c.family = std::string(1, family_char(f));
            c.n = k;
            BigInt expected = pow2(family_domain_bits(f, k));
            BigRat got = recurrence_poly(f, k).coefficient_sum();
            if (BigRat(expected) != got) {
                c.pass = false;
                c.expected = expected.str();
                c.got = rat_str(got);
            }
            add(c);
        }
    }

    // zero-diagonal families have no odd-rank matrices
    for (Family f : {Family::O, Family::P}) {
        for (int k = family_min_index(f); k <= opts.max_n_closed; ++k) {
            Check c;
            c.name = "odd-rank-zero";
            c.family = std::string(1, family_char(f));
            c.n = k;
            const Poly poly = recurrence_poly(f, k);
            for (int m = 1; m <= poly.degree() && c.pass; m += 2) {
                if (poly.coeff(m) != 0) {
                    c.pass = false;
                    c.m = m;
                    c.expected = "0";
                    c.got = rat_str(poly.coeff(m));
                }
            }
            add(c);
        }
    }

    // the R coefficient formula's half-integer terms must cancel
    for (int k = 2; k <= opts.max_n_closed; ++k) {
        Check c;
        c.name = "ringel-coefficient-integrality";
        c.family = "R";
        c.n = k;
        for (int m = 0; m <= k && c.pass; ++m) {
            BigRat v = coeff_R_closed_rational(k, m);
            if (!is_integer(v)) {
                c.pass = false;
                c.m = m;
                c.expected = "an integer";
                c.got = v.str();
            }
        }
        add(c);
    }

    // total embedding polynomial identities
    for (int n = 2; n <= opts.max_n_closed; ++n) {
        TotalPoly total = total_embedding_poly(n);
        Check c;
        c.name = "total-identities";
        c.family = "total";
        c.n = n;
        BigInt genus_sum = to_integer(total.genus.coefficient_sum());
        BigInt crosscap_sum = to_integer(total.crosscap.coefficient_sum());
        BigInt expected_genus = pow2(2 * n);
        BigInt expected_crosscap = (pow2(n + 1) - 1) * pow2(2 * n);
        bool degrees_ok = total.crosscap.degree() <= n + 1 && total.genus.degree() <= (n + 1) / 2;
        if (genus_sum != expected_genus || crosscap_sum != expected_crosscap || !degrees_ok ||
            total.crosscap.coeff(0) != 0) {
            c.pass = false;
            c.expected = "genus sum " + expected_genus.str() + ", crosscap sum " + expected_crosscap.str() +
                         ", degree bounds";
            c.got = "genus sum " + genus_sum.str() + ", crosscap sum " + crosscap_sum.str() + ", genus degree " +
                    std::to_string(total.genus.degree()) + ", crosscap degree " +
                    std::to_string(total.crosscap.degree());
        }
        add(c);
    }

    // brute-force enumeration against the recurrences
    EnumOptions enum_opts;
    enum_opts.workers = opts.workers;
    for (Family f : kFamilies) {
        for (int n = 1; n <= opts.max_n_brute; ++n) {
            const int subscript = (f == Family::O || f == Family::L) ? n : n + 1;
            if (family_domain_bits(f, subscript) > enum_opts.max_domain_bits) break;
            add(compare_polys("recurrence-vs-brute", std::string(1, family_char(f)), n,
                              recurrence_poly(f, subscript), brute_rank_distribution(f, n, enum_opts).poly()));
        }
    }

    // partitioned enumeration is independent of the worker count
    {
        const int n = std::min(4, std::max(1, opts.max_n_brute));
        Check c;
        c.name = "brute-worker-determinism";
        c.family = "R";
        c.n = n;
        EnumOptions base;
        base.workers = 1;
        auto reference = brute_rank_distribution(Family::R, n, base);
        for (int w : {2, 7, 16}) {
            EnumOptions multi;
            multi.workers = w;
            auto got = brute_rank_distribution(Family::R, n, multi);
            if (got.counts != reference.counts) {
                c.pass = false;
                c.expected = reference.poly().str();
                c.got = got.poly().str() + " (workers=" + std::to_string(w) + ")";
                break;
            }
        }
        add(c);
    }

    // face-tracing ground truth
    TraceOptions trace_opts;
    trace_opts.workers = opts.workers;
    for (int n = 2; n <= opts.max_n_trace; ++n) {
        TotalPoly truth = total_embedding_poly(n);
        TotalPoly traced = total_poly_by_tracing(n, trace_opts);
        Check genus = compare_polys("total-vs-trace-genus", "total", n, truth.genus, traced.genus);
        Check crosscap = compare_polys("total-vs-trace-crosscap", "total", n, truth.crosscap, traced.crosscap);
        add(genus);
        add(crosscap);
    }
    for (Family f : {Family::P, Family::R}) {
        for (int n = 2; n <= opts.max_n_trace; ++n)
            add(compare_polys("recurrence-vs-trace", std::string(1, family_char(f)), n,
                              recurrence_poly(f, n + 1), trace_rank_distribution(f, n, trace_opts).poly()));
    }
    for (int n = 2; n <= opts.max_n_trace; ++n) {
        MoharReport mohar = mohar_exhaustive(n, trace_opts);
        Check c;
        c.name = "mohar-rank";
        c.family = "total";
        c.n = n;
        if (!mohar.pass()) {
            c.pass = false;
            c.expected = "rank equals 2*genus / crosscap for all " + std::to_string(mohar.systems) + " systems";
            c.got = std::to_string(mohar.violations) + " violations, first at system #" +
                    std::to_string(mohar.first ? mohar.first->packed_system : 0) + " (rank " +
                    std::to_string(mohar.first ? mohar.first->rank : -1) + ", " +
                    (mohar.first ? mohar.first->surface.str() : "") + ")";
        }
        add(c);
    }
    for (int n = 2; n <= opts.max_n_trace; ++n) {
        PreimageReport preimage = overlap_preimage_count(n, trace_opts);
        Check c;
        c.name = "matrix-preimage-2to1";
        c.family = "total";
        c.n = n;
        if (!preimage.pass()) {
            c.pass = false;
            c.expected = std::to_string(preimage.expected_values) + " matrix values, each hit exactly twice";
            c.got = std::to_string(preimage.matrix_values) + " values, multiplicities in [" +
                    std::to_string(preimage.min_multiplicity) + ", " + std::to_string(preimage.max_multiplicity) +
                    "]";
        }
        add(c);
    }
    if (opts.max_n_trace >= 2) {
        const int n = std::min(3, opts.max_n_trace);
        Check c;
        c.name = "trace-worker-determinism";
        c.family = "total";
        c.n = n;
        TraceOptions base;
        base.workers = 1;
        TotalPoly reference = total_poly_by_tracing(n, base);
        for (int w : {2, 8}) {
            TraceOptions multi;
            multi.workers = w;
            TotalPoly got = total_poly_by_tracing(n, multi);
            if (!(got == reference)) {
                c.pass = false;
                c.expected = reference.str();
                c.got = got.str() + " (workers=" + std::to_string(w) + ")";
                break;
            }
        }
        add(c);
    }

    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

}  // namespace ringlad
