#include "core/published.hpp"

#include <array>

#include "core/util.hpp"

namespace ringlad {

namespace {

const std::array<PublishedTotal, 5> kTotals = {{
    {1, {2, 14}, {0, 14, 42, 56}},
    {2, {2, 38, 24}, {0, 22, 122, 424, 392}},
    {3, {2, 70, 184}, {0, 30, 242, 1448, 3272, 2944}},
    {4, {2, 118, 648, 256}, {0, 38, 410, 3496, 12952, 26880, 20736}},
    {5, {2, 198, 1656, 2240}, {0, 46, 642, 7240, 36808, 120832, 207168, 147456}},
}};

Poly poly_of(const std::vector<long long>& coeffs) {
    std::vector<BigRat> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

std::span<const PublishedTotal> published_totals() { return kTotals; }

std::vector<PaperCheckLine> paper_check() {
    std::vector<PaperCheckLine> lines;
    for (const PublishedTotal& ref : kTotals) {
        Stopwatch watch;
        PaperCheckLine line;
        line.graph_index = ref.graph_index;
        line.n = ref.graph_index + 1;
        TotalPoly expected{poly_of(ref.genus), poly_of(ref.crosscap)};
        TotalPoly computed = total_embedding_poly(line.n);
        line.expected = expected.str();
        line.computed = computed.str();
        line.pass = computed == expected;
        line.elapsed_ms = watch.elapsed_ms();
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace ringlad
