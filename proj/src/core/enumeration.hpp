#ifndef RINGLAD_ENUMERATION_HPP
#define RINGLAD_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "core/families.hpp"
#include "core/gf2.hpp"

namespace ringlad {

// Variable assignment for the tridiagonal matrix M_n^{X,Y}:
// diagonal x_1..x_n, superdiagonal y_1..y_{n-1}.
struct LadderAssignment {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> y;
};

// Assignment for the bordered matrix M_{n+1}^{X,Y,Z}: first row/column
// (x_0, z_1..z_n), interior tridiagonal block with diagonal x_1..x_n and
// superdiagonal y_1..y_{n-1}.
struct RingelAssignment {
    std::vector<std::uint8_t> x;  // x_0..x_n
    std::vector<std::uint8_t> y;  // y_1..y_{n-1}
    std::vector<std::uint8_t> z;  // z_1..z_n
};

Gf2SymMatrix build_ladder_matrix(const LadderAssignment& a);
Gf2SymMatrix build_ringel_matrix(const RingelAssignment& a);

// Packed-bit row builders used by the enumeration hot loop. Bit layout is
// (x || y || z), least significant first, matching the documented
// assignment-integer encoding:
//   L_n: bits 0..n-1 = x_1..x_n, bits n..2n-2 = y_1..y_{n-1}
//   O_n: bits 0..n-2 = y_1..y_{n-1} (diagonal fixed to zero)
//   R over graph parameter n: bits 0..n = x_0..x_n, then y (n-1), then z (n)
//   P over graph parameter n: bits 0..n-2 = y, bits n-1..2n-2 = z
void ladder_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows);
void o_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows);
void ringel_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows);
void p_rows_from_bits(std::uint64_t bits, int n, std::uint64_t* rows);

// Exact rank counts for one family instance, per rank 0..dim.
struct RankDistribution {
    Family family = Family::O;
    int n = 0;          // graph parameter: subscript for O/L, subscript-1 for P/R
    int subscript = 0;  // matrix dimension
    std::vector<BigInt> counts;
    std::string method;

    Poly poly() const;
    BigInt total() const;
};

struct EnumOptions {
    int workers = 1;
    int max_domain_bits = 32;
};

// Full enumeration of the family's assignment domain. Deterministic for any
// worker count: the integer range is split into contiguous chunks and the
// per-chunk histograms are added.
RankDistribution brute_rank_distribution(Family f, int n, const EnumOptions& opts = {});

// Same computation addressed by family subscript instead of graph parameter.
Poly brute_family_poly(Family f, int subscript, const EnumOptions& opts = {});

TotalPoly total_embedding_poly_brute(int n, const EnumOptions& opts = {});

}  // namespace ringlad

#endif
