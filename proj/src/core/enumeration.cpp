#include "core/enumeration.hpp"

#include <array>
#include <cstring>
#include <stdexcept>

#include "core/util.hpp"

namespace ringlad {

Gf2SymMatrix build_ladder_matrix(const LadderAssignment& a) {
    const int n = static_cast<int>(a.x.size());
    if (static_cast<int>(a.y.size()) != n - 1)
        throw std::invalid_argument("build_ladder_matrix: y must have length n-1");
    Gf2SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        if (a.x[static_cast<size_t>(i)]) m.set(i, i, true);
    for (int j = 0; j < n - 1; ++j)
        if (a.y[static_cast<size_t>(j)]) m.set(j, j + 1, true);
    return m;
}

Gf2SymMatrix build_ringel_matrix(const RingelAssignment& a) {
    const int n = static_cast<int>(a.x.size()) - 1;
    if (n < 1) throw std::invalid_argument("build_ringel_matrix: x must have length n+1 >= 2");
    if (static_cast<int>(a.y.size()) != n - 1)
        throw std::invalid_argument("build_ringel_matrix: y must have length n-1");
    if (static_cast<int>(a.z.size()) != n)
        throw std::invalid_argument("build_ringel_matrix: z must have length n");
    Gf2SymMatrix m(n + 1);
    for (int i = 0; i <= n; ++i)
        if (a.x[static_cast<size_t>(i)]) m.set(i, i, true);
    for (int j = 1; j <= n - 1; ++j)
        if (a.y[static_cast<size_t>(j - 1)]) m.set(j, j + 1, true);
    for (int k = 1; k <= n; ++k)
        if (a.z[static_cast<size_t>(k - 1)]) m.set(0, k, true);
    return m;
}

void ladder_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows) {
    std::memset(rows, 0, sizeof(std::uint64_t) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rows[i] |= ((bits >> i) & 1u) << i;
    for (int j = 0; j < n - 1; ++j) {
        std::uint64_t y = (bits >> (n + j)) & 1u;
        rows[j] |= y << (j + 1);
        rows[j + 1] |= y << j;
    }
}

void o_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows) {
    std::memset(rows, 0, sizeof(std::uint64_t) * static_cast<size_t>(n));
    for (int j = 0; j < n - 1; ++j) {
        std::uint64_t y = (bits >> j) & 1u;
        rows[j] |= y << (j + 1);
        rows[j + 1] |= y << j;
    }
}

void ringel_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows) {
    const int dim = n + 1;
    std::memset(rows, 0, sizeof(std::uint64_t) * static_cast<size_t>(dim));
    for (int i = 0; i <= n; ++i) rows[i] |= ((bits >> i) & 1u) << i;
    for (int j = 1; j <= n - 1; ++j) {
        std::uint64_t y = (bits >> (n + 1 + j - 1)) & 1u;
        rows[j] |= y << (j + 1);
        rows[j + 1] |= y << j;
    }
    for (int k = 1; k <= n; ++k) {
        std::uint64_t z = (bits >> (2 * n + k - 1)) & 1u;
        rows[0] |= z << k;
        rows[k] |= z << 0;
    }
}

void p_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows) {
    const int dim = n + 1;
    std::memset(rows, 0, sizeof(std::uint64_t) * static_cast<size_t>(dim));
    for (int j = 1; j <= n - 1; ++j) {
        std::uint64_t y = (bits >> (j - 1)) & 1u;
        rows[j] |= y << (j + 1);
        rows[j + 1] |= y << j;
    }
    for (int k = 1; k <= n; ++k) {
        std::uint64_t z = (bits >> (n - 1 + k - 1)) & 1u;
        rows[0] |= z << k;
        rows[k] |= z << 0;
    }
}

Poly RankDistribution::poly() const {
    std::vector<BigRat> coeffs;
    coeffs.reserve(counts.size());
    for (const BigInt& c : counts) coeffs.emplace_back(c);
    return Poly::from_coeffs(std::move(coeffs));
}

BigInt RankDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

namespace {

template <class FillRows>
std::vector<BigInt> enumerate_rank_counts(int dim, int bits, int workers, FillRows fill) {
    const std::uint64_t total = std::uint64_t(1) << bits;
    if (workers < 1) workers = 1;
    std::vector<std::array<std::uint64_t, Gf2SymMatrix::kMaxDim + 1>> partial(
        static_cast<size_t>(workers));
    for (auto& p : partial) p.fill(0);
    run_partitioned(total, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t rows[Gf2SymMatrix::kMaxDim];
        auto& counts = partial[static_cast<size_t>(w)];
        for (std::uint64_t a = begin; a < end; ++a) {
            fill(a, rows);
            counts[static_cast<size_t>(gf2_rank({rows, static_cast<size_t>(dim)}))] += 1;
        }
    });
    std::vector<BigInt> merged(static_cast<size_t>(dim) + 1, BigInt(0));
    for (const auto& p : partial)
        for (int r = 0; r <= dim; ++r) merged[static_cast<size_t>(r)] += p[static_cast<size_t>(r)];
    return merged;
}

}  // namespace

RankDistribution brute_rank_distribution(Family f, int n, const EnumOptions& opts) {
    if (n < 1) throw std::invalid_argument("brute_rank_distribution: n must be >= 1");
    const int subscript = (f == Family::O || f == Family::L) ? n : n + 1;
    const int dim = family_matrix_dim(f, subscript);
    const int bits = family_domain_bits(f, subscript);
    if (bits > opts.max_domain_bits)
        throw infeasible_error(std::string("brute force over family ") + family_char(f) + " at n=" +
                               std::to_string(n) + " needs 2^" + std::to_string(bits) +
                               " assignments, above the 2^" + std::to_string(opts.max_domain_bits) + " cap");

    RankDistribution dist;
    dist.family = f;
    dist.n = n;
    dist.subscript = subscript;
    dist.method = "bruteforce";
    switch (f) {
        case Family::O:
            dist.counts = enumerate_rank_counts(
                dim, bits, opts.workers, [dim](std::uint64_t a, std::uint64_t* rows) { o_rows_from_bits(a, dim, rows); });
            break;
        case Family::L:
            dist.counts = enumerate_rank_counts(
                dim, bits, opts.workers, [dim](std::uint64_t a, std::uint64_t* rows) { ladder_rows_from_bits(a, dim, rows); });
            break;
        case Family::P:
            dist.counts = enumerate_rank_counts(
                dim, bits, opts.workers, [n](std::uint64_t a, std::uint64_t* rows) { p_rows_from_bits(a, n, rows); });
            break;
        case Family::R:
            dist.counts = enumerate_rank_counts(
                dim, bits, opts.workers, [n](std::uint64_t a, std::uint64_t* rows) { ringel_rows_from_bits(a, n, rows); });
            break;
    }
    return dist;
}

Poly brute_family_poly(Family f, int subscript, const EnumOptions& opts) {
    if (subscript < family_min_index(f))
        throw std::invalid_argument("brute_family_poly: subscript below the family's range");
    const int n = (f == Family::O || f == Family::L) ? subscript : subscript - 1;
    return brute_rank_distribution(f, n, opts).poly();
}

TotalPoly total_embedding_poly_brute(int n, const EnumOptions& opts) {
    if (n < 2) throw std::invalid_argument("total_embedding_poly_brute: n must be >= 2");
    return assemble_total(brute_rank_distribution(Family::P, n, opts).poly(),
                          brute_rank_distribution(Family::R, n, opts).poly());
}

}  // namespace ringlad
