#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "core/gf2.hpp"
#include "support/naive_rank.hpp"

using namespace ringlad;

namespace {

Gf2SymMatrix random_symmetric(int dim, std::mt19937& rng) {
    Gf2SymMatrix m(dim);
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m.set(i, j, bit(rng));
    return m;
}

std::vector<std::vector<int>> dense_of(const Gf2SymMatrix& m) {
    std::vector<std::vector<int>> d(static_cast<size_t>(m.dim()),
                                    std::vector<int>(static_cast<size_t>(m.dim()), 0));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) d[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.bit(i, j);
    return d;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(Gf2SymMatrix(5).rank() == 0);  // zero matrix

    Gf2SymMatrix identity(4);
    for (int i = 0; i < 4; ++i) identity.set(i, i, true);
    CHECK(identity.rank() == 4);

    // all off-diagonal ones, zero diagonal
    Gf2SymMatrix crossed(3);
    crossed.set(0, 1, true);
    crossed.set(0, 2, true);
    crossed.set(1, 2, true);
    CHECK(crossed.rank() == 2);

    // bordered instance: x = 0, y = (1), z = (1, 0)
    Gf2SymMatrix bordered(3);
    bordered.set(0, 1, true);
    bordered.set(1, 2, true);
    CHECK(bordered.rank() == 2);
}

TEST_CASE("agreement with schoolbook elimination") {
    std::mt19937 rng(7);
    for (int dim = 1; dim <= 12; ++dim) {
        for (int trial = 0; trial < 10000; ++trial) {
            Gf2SymMatrix m = random_symmetric(dim, rng);
            CAPTURE(dim);
            REQUIRE(m.rank() == testsupport::naive_gf2_rank(dense_of(m)));
        }
    }
}

TEST_CASE("zero-diagonal symmetric matrices have even rank") {
    std::mt19937 rng(11);
    for (int dim = 1; dim <= 10; ++dim) {
        for (int trial = 0; trial < 2000; ++trial) {
            Gf2SymMatrix m = random_symmetric(dim, rng);
            for (int i = 0; i < dim; ++i) m.set(i, i, false);
            REQUIRE(m.rank() % 2 == 0);
        }
    }
}

TEST_CASE("rank is invariant under simultaneous permutation") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const int dim = 6;
        Gf2SymMatrix m = random_symmetric(dim, rng);
        std::vector<int> perm(dim);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Gf2SymMatrix permuted(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                permuted.set(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)], m.bit(i, j));
        REQUIRE(permuted.rank() == m.rank());
    }
}

TEST_CASE("grid rendering") {
    Gf2SymMatrix m(3);
    m.set(0, 1, true);
    m.set(0, 2, true);
    m.set(1, 2, true);
    CHECK(m.grid() == "0 1 1\n1 0 1\n1 1 0");
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Gf2SymMatrix(65), std::invalid_argument);
    CHECK_NOTHROW(Gf2SymMatrix(64));
    std::uint64_t asym[2] = {0b10, 0b00};
    CHECK_THROWS_AS(Gf2SymMatrix::from_rows({asym, 2}), std::invalid_argument);
    std::uint64_t wide[1] = {0b10};
    CHECK_THROWS_AS(Gf2SymMatrix::from_rows({wide, 1}), std::invalid_argument);
    std::uint64_t ok[2] = {0b10, 0b01};
    CHECK(Gf2SymMatrix::from_rows({ok, 2}).rank() == 2);
}
