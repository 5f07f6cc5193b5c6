#ifndef RINGLAD_PUBLISHED_HPP
#define RINGLAD_PUBLISHED_HPP

#include <span>
#include <string>
#include <vector>

#include "core/families.hpp"

namespace ringlad {

// Published reference values of the total embedding distributions
// I(R_1)..I(R_5). graph_index k corresponds to parameter n = k + 1.
struct PublishedTotal {
    int graph_index;
    std::vector<long long> genus;     // ascending exponents
    std::vector<long long> crosscap;  // ascending, index 0 always 0
};

std::span<const PublishedTotal> published_totals();

struct PaperCheckLine {
    int graph_index = 0;
    int n = 0;
    std::string expected;
    std::string computed;
    long elapsed_ms = 0;
    bool pass = false;
};

// Recomputes each reference line by recurrence + assembly and compares
// integer-exactly.
std::vector<PaperCheckLine> paper_check();

}  // namespace ringlad

#endif
