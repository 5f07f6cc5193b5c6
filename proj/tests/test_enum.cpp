#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/enumeration.hpp"

using namespace ringlad;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
    std::vector<BigInt> out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("tridiagonal matrix construction") {
    Gf2SymMatrix m = build_ladder_matrix({{1, 0}, {1}});
    CHECK(m.grid() == "1 1\n1 0");

    CHECK(build_ladder_matrix({{0, 0, 0}, {1, 1}}).rank() == 2);
    CHECK(build_ladder_matrix({{1}, {}}).rank() == 1);
    CHECK_THROWS_AS(build_ladder_matrix({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("bordered matrix construction") {
    Gf2SymMatrix m = build_ringel_matrix({{0, 0, 0}, {1}, {0, 0}});
    CHECK(m.grid() == "0 0 0\n0 0 1\n0 1 0");
    CHECK(m.rank() == 2);

    Gf2SymMatrix identity = build_ringel_matrix({{1, 1, 1}, {0}, {0, 0}});
    CHECK(identity.rank() == 3);
    CHECK_THROWS_AS(build_ringel_matrix({{1}, {}, {}}), std::invalid_argument);
}

TEST_CASE("packed row builders agree with the struct builders") {
    // R family, graph parameter 2: 6 bits (x0 x1 x2 | y1 | z1 z2)
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
        RingelAssignment a;
        a.x = {static_cast<std::uint8_t>(bits & 1), static_cast<std::uint8_t>((bits >> 1) & 1),
               static_cast<std::uint8_t>((bits >> 2) & 1)};
        a.y = {static_cast<std::uint8_t>((bits >> 3) & 1)};
        a.z = {static_cast<std::uint8_t>((bits >> 4) & 1), static_cast<std::uint8_t>((bits >> 5) & 1)};
        std::uint64_t rows[3];
        ringel_rows_from_bits(bits, 2, rows);
        REQUIRE(Gf2SymMatrix::from_rows({rows, 3}) == build_ringel_matrix(a));
    }
    // L family, subscript 2: 3 bits (x1 x2 | y1)
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        LadderAssignment a;
        a.x = {static_cast<std::uint8_t>(bits & 1), static_cast<std::uint8_t>((bits >> 1) & 1)};
        a.y = {static_cast<std::uint8_t>((bits >> 2) & 1)};
        std::uint64_t rows[2];
        ladder_rows_from_bits(bits, 2, rows);
        REQUIRE(Gf2SymMatrix::from_rows({rows, 2}) == build_ladder_matrix(a));
    }
}

TEST_CASE("exhaustive rank counts at n=2 for the bordered family") {
    RankDistribution dist = brute_rank_distribution(Family::R, 2);
    CHECK(dist.counts == big({1, 7, 28, 28}));
    CHECK(dist.total() == 64);
    CHECK(dist.poly().str() == "28z^3+28z^2+7z+1");
}

TEST_CASE("brute force matches the printed distributions") {
    CHECK(brute_rank_distribution(Family::P, 2).counts == big({1, 0, 7, 0}));
    CHECK(brute_rank_distribution(Family::L, 2).counts == big({1, 3, 4}));
    CHECK(brute_rank_distribution(Family::O, 3).counts == big({1, 0, 3, 0}));
    CHECK(brute_rank_distribution(Family::R, 3).counts == big({1, 11, 80, 212, 208}));
}

TEST_CASE("brute force equals the recurrence across the feasible range") {
    for (Family f : {Family::O, Family::L, Family::P, Family::R}) {
        for (int n = 1; n <= 5; ++n) {
            const int subscript = (f == Family::O || f == Family::L) ? n : n + 1;
            CAPTURE(family_char(f));
            CAPTURE(n);
            REQUIRE(brute_rank_distribution(f, n).poly() == recurrence_poly(f, subscript));
        }
    }
}

TEST_CASE("domain sizes") {
    CHECK(brute_rank_distribution(Family::O, 4).total() == 8);     // 2^{n-1}
    CHECK(brute_rank_distribution(Family::L, 4).total() == 128);   // 2^{2n-1}
    CHECK(brute_rank_distribution(Family::P, 4).total() == 128);   // 2^{2n-1}
    CHECK(brute_rank_distribution(Family::R, 4).total() == 4096);  // 2^{3n}
}

TEST_CASE("worker partitioning changes nothing") {
    EnumOptions one;
    auto reference = brute_rank_distribution(Family::R, 4, one);
    for (int workers : {1, 2, 7, 16}) {
        EnumOptions opts;
        opts.workers = workers;
        CAPTURE(workers);
        REQUIRE(brute_rank_distribution(Family::R, 4, opts).counts == reference.counts);
        REQUIRE(brute_rank_distribution(Family::L, 5, opts).counts == brute_rank_distribution(Family::L, 5).counts);
    }
}

TEST_CASE("feasibility bound is enforced and names the cap") {
    EnumOptions opts;
    opts.max_domain_bits = 12;
    CHECK_NOTHROW(brute_rank_distribution(Family::R, 4, opts));
    try {
        brute_rank_distribution(Family::R, 5, opts);
        FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("2^15") != std::string::npos);
        CHECK(msg.find("2^12") != std::string::npos);
    }
    CHECK_THROWS_AS(brute_rank_distribution(Family::R, 0), std::invalid_argument);
}

TEST_CASE("subscript-level wrapper") {
    CHECK(brute_family_poly(Family::P, 3).str() == "7z^2+1");
    CHECK(brute_family_poly(Family::O, 1).str() == "1");
    CHECK_THROWS_AS(brute_family_poly(Family::R, 1), std::invalid_argument);
}

TEST_CASE("total embedding polynomial from brute-force distributions") {
    TotalPoly brute = total_embedding_poly_brute(3);
    CHECK(brute == total_embedding_poly(3));
    CHECK(brute.str() == "2+38x+24x^2+22y+122y^2+424y^3+392y^4");
}
