#ifndef RINGLAD_ROTATION_HPP
#define RINGLAD_ROTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/enumeration.hpp"
#include "core/families.hpp"
#include "core/gf2.hpp"
#include "core/ladder_graph.hpp"

namespace ringlad {

// A T-rotation system of a cubic Ringel ladder: one color bit per vertex
// (0 = the reference clockwise order of the drawing, "black"; 1 = reversed,
// "white") and one twist bit per cotree edge, in cotree order e, a_1..a_n.
// Tree edges are untwisted by construction.
struct RotationSystem {
    std::vector<std::uint8_t> color;  // per vertex
    std::vector<std::uint8_t> twist;  // per cotree edge

    bool operator==(const RotationSystem& rhs) const = default;
};

struct SurfaceClass {
    bool orientable = true;
    int genus_or_crosscap = 0;  // genus if orientable (sphere = 0), else crosscap >= 1

    bool operator==(const SurfaceClass& rhs) const = default;
    std::string str() const;
};

struct FaceTrace {
    int face_count = 0;
    int euler_characteristic = 0;
    SurfaceClass surface;
};

struct TraceOptions {
    int workers = 1;
    int max_system_bits = 25;  // 2^{3n+1} systems; 25 allows n <= 8
};

// Exhaustive face-tracing oracle over all 2^{3n+1} T-rotation systems of
// R_{n-1}. Systems are indexed by a packed integer: bits 0..n are the twist
// bits (cotree order), bits n+1..3n the vertex color bits (vertex id order),
// so the enumeration domain is one contiguous range.
//
// The face walk runs on states (dart, side); crossing a twisted edge flips
// the side, and a white head vertex swaps rotation successor/predecessor.
// Each face is traced once per side, so faces = orbits / 2.
class RingelTracer {
public:
    explicit RingelTracer(const LadderGraph& graph);  // throws unless a cubic Ringel ladder

    const LadderGraph& graph() const { return *graph_; }
    int system_bits() const { return 3 * n_ + 1; }
    std::uint64_t system_count() const { return std::uint64_t(1) << system_bits(); }

    RotationSystem system_at(std::uint64_t packed) const;
    std::uint64_t pack(const RotationSystem& system) const;

    FaceTrace trace(const RotationSystem& system) const;
    FaceTrace trace_packed(std::uint64_t packed) const;

    // Overlap matrix of the system: diagonal from the twist bits, y_j from
    // the rung b_j being unmatched, z_k from c_k being unmatched
    // (unmatched = endpoint colors differ).
    Gf2SymMatrix overlap_matrix(const RotationSystem& system) const;
    // Same matrix as a packed (x || y || z) assignment integer of 3n bits.
    std::uint64_t overlap_bits_packed(std::uint64_t packed) const;

private:
    FaceTrace trace_impl(const std::uint8_t* twist_by_edge, const std::uint8_t* color) const;

    const LadderGraph* graph_;
    int n_ = 0;
    std::vector<int> head_;   // per dart
    std::vector<int> next0_;  // rotation successor of the reversed dart
    std::vector<int> next1_;  // rotation predecessor of the reversed dart
    std::vector<int> twist_slot_;  // per edge: cotree position, -1 for tree edges
};

// Histogram of embedding surfaces over every T-rotation system, as the
// total embedding polynomial. Ground truth for the matrix-based routes.
TotalPoly total_poly_by_tracing(int n, const TraceOptions& opts = {});

// Rank distributions recovered from traced surfaces alone (rank = 2*genus
// or crosscap), using the 2-to-1 system/matrix correspondence. Family P
// restricts to the all-untwisted systems. Only P and R are graph-backed.
RankDistribution trace_rank_distribution(Family f, int n, const TraceOptions& opts = {});

struct MoharViolation {
    std::uint64_t packed_system = 0;
    int rank = 0;
    SurfaceClass surface;
};

struct MoharReport {
    std::uint64_t systems = 0;
    std::uint64_t violations = 0;
    std::optional<MoharViolation> first;
    bool pass() const { return violations == 0; }
};

// Checks rank(overlap matrix) == 2*genus (orientable) / crosscap
// (nonorientable) for every system of R_{n-1}.
MoharReport mohar_exhaustive(int n, const TraceOptions& opts = {});

struct PreimageReport {
    std::uint64_t matrix_values = 0;    // distinct assignment integers seen
    std::uint64_t expected_values = 0;  // 2^{3n}
    std::uint64_t min_multiplicity = 0;
    std::uint64_t max_multiplicity = 0;
    bool pass() const { return matrix_values == expected_values && min_multiplicity == 2 && max_multiplicity == 2; }
};

// Verifies the 2-to-1 correspondence: every (X, Y, Z) assignment is hit by
// exactly two T-rotation systems.
PreimageReport overlap_preimage_count(int n, const TraceOptions& opts = {});

}  // namespace ringlad

#endif
