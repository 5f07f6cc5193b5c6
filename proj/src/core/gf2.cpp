#include "core/gf2.hpp"

#include <sstream>
#include <stdexcept>

#include "core/ints.hpp"

namespace ringlad {

int gf2_rank(std::span<const std::uint64_t> rows) {
    const int dim = static_cast<int>(rows.size());
    std::array<std::uint64_t, Gf2SymMatrix::kMaxDim> work{};
    for (int i = 0; i < dim; ++i) work[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)];
    int rank = 0;
    for (int col = 0; col < dim && rank < dim; ++col) {
        int pivot = -1;
        for (int i = rank; i < dim; ++i) {
            if ((work[static_cast<size_t>(i)] >> col) & 1u) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(work[static_cast<size_t>(pivot)], work[static_cast<size_t>(rank)]);
        for (int i = rank + 1; i < dim; ++i)
            if ((work[static_cast<size_t>(i)] >> col) & 1u) work[static_cast<size_t>(i)] ^= work[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

Gf2SymMatrix::Gf2SymMatrix(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim)
        throw std::invalid_argument("Gf2SymMatrix: dimension must be in 0..64, got " + std::to_string(dim));
}

Gf2SymMatrix Gf2SymMatrix::from_rows(std::span<const std::uint64_t> rows) {
    Gf2SymMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim_; ++i) {
        std::uint64_t r = rows[static_cast<size_t>(i)];
        if (m.dim_ < 64 && (r >> m.dim_) != 0)
            throw std::invalid_argument("Gf2SymMatrix: row has bits beyond the dimension");
        m.rows_[static_cast<size_t>(i)] = r;
    }
    for (int i = 0; i < m.dim_; ++i)
        for (int j = i + 1; j < m.dim_; ++j)
            if (m.bit(i, j) != m.bit(j, i)) throw std::invalid_argument("Gf2SymMatrix: rows are not symmetric");
    return m;
}

void Gf2SymMatrix::check_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::out_of_range("Gf2SymMatrix: index out of range");
}

bool Gf2SymMatrix::bit(int i, int j) const {
    check_index(i, j);
    return (rows_[static_cast<size_t>(i)] >> j) & 1u;
}

void Gf2SymMatrix::set(int i, int j, bool value) {
    check_index(i, j);
    auto apply = [&](int r, int c) {
        std::uint64_t mask = std::uint64_t(1) << c;
        if (value)
            rows_[static_cast<size_t>(r)] |= mask;
        else
            rows_[static_cast<size_t>(r)] &= ~mask;
    };
    apply(i, j);
    apply(j, i);
}

std::uint64_t Gf2SymMatrix::row(int i) const {
    check_index(i, i);
    return rows_[static_cast<size_t>(i)];
}

bool Gf2SymMatrix::zero_diagonal() const {
    for (int i = 0; i < dim_; ++i)
        if (bit(i, i)) return false;
    return true;
}

std::string Gf2SymMatrix::grid() const {
    std::ostringstream out;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (j) out << ' ';
            out << (bit(i, j) ? '1' : '0');
        }
        if (i + 1 < dim_) out << '\n';
    }
    return out.str();
}

bool Gf2SymMatrix::operator==(const Gf2SymMatrix& rhs) const {
    if (dim_ != rhs.dim_) return false;
    for (int i = 0; i < dim_; ++i)
        if (rows_[static_cast<size_t>(i)] != rhs.rows_[static_cast<size_t>(i)]) return false;
    return true;
}

}  // namespace ringlad
