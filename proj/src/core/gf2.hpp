#ifndef RINGLAD_GF2_HPP
#define RINGLAD_GF2_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace ringlad {

// GF(2) rank by plain Gaussian elimination on a private copy of the rows.
// One machine word per row; a few dozen XORs at the dimensions used here.
int gf2_rank(std::span<const std::uint64_t> rows);

// Symmetric matrix over GF(2), bit-packed one row per 64-bit word.
// Dimension is capped at 64; every consumer in this project stays far below.
class Gf2SymMatrix {
public:
    static constexpr int kMaxDim = 64;

    explicit Gf2SymMatrix(int dim);
    static Gf2SymMatrix from_rows(std::span<const std::uint64_t> rows);  // validates symmetry

    int dim() const { return dim_; }
    bool bit(int i, int j) const;
    void set(int i, int j, bool value);  // keeps (j, i) in sync
    std::uint64_t row(int i) const;
    std::span<const std::uint64_t> rows() const { return {rows_.data(), static_cast<size_t>(dim_)}; }

    int rank() const { return gf2_rank(rows()); }
    bool zero_diagonal() const;

    // Row-major 0/1 grid, space-separated, one line per row.
    std::string grid() const;

    bool operator==(const Gf2SymMatrix& rhs) const;

private:
    void check_index(int i, int j) const;
    int dim_ = 0;
    std::array<std::uint64_t, kMaxDim> rows_{};
};

}  // namespace ringlad

#endif
