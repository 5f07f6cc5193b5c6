#ifndef RINGLAD_VERIFY_HPP
#define RINGLAD_VERIFY_HPP

#include <string>
#include <vector>

#include "core/families.hpp"

namespace ringlad {

struct VerifyOptions {
    int max_n_brute = 8;    // graph-parameter cap for full enumeration
    int max_n_trace = 5;    // graph-parameter cap for face tracing
    int max_n_closed = 40;  // subscript cap for recurrence/closed-form checks
    int workers = 1;
    // Test fixture: swap in the published (wrong-sign) L coefficient formula
    // to demonstrate that the cross-checks catch a corrupted closed form.
    bool use_published_L_coefficients = false;
};

struct Check {
    std::string name;
    std::string family;  // "O"/"L"/"P"/"R"/"total" or "" when not applicable
    int n = -1;
    int m = -1;  // first mismatching coefficient index, when applicable
    bool pass = true;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::vector<Check> checks;
    long elapsed_ms = 0;

    bool ok() const;
    size_t failures() const;
    const Check* first_failure() const;
};

// Runs the full cross-method invariant suite: recurrence vs closed forms vs
// brute force vs tracing, counting identities, Mohar rank agreement, the
// 2-to-1 matrix correspondence, and worker-count determinism.
VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace ringlad

#endif
