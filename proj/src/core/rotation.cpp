#include "core/rotation.hpp"

#include <array>
#include <stdexcept>

#include "core/util.hpp"

namespace ringlad {

std::string SurfaceClass::str() const {
    if (orientable) return genus_or_crosscap == 0 ? "sphere" : "orientable genus " + std::to_string(genus_or_crosscap);
    return "nonorientable crosscap " + std::to_string(genus_or_crosscap);
}

RingelTracer::RingelTracer(const LadderGraph& graph) : graph_(&graph), n_(graph.n) {
    if (graph.kind != LadderKind::ringel)
        throw std::invalid_argument("RingelTracer: rotation reference is only defined for Ringel ladders");
    if (!graph.is_cubic()) throw std::invalid_argument("RingelTracer: graph must be cubic");
    if (3 * n_ + 1 >= 64)
        throw std::invalid_argument("RingelTracer: systems of R_" + std::to_string(n_ - 1) +
                                    " do not fit the 64-bit packing");
    const int darts = graph.dart_count();
    head_.resize(static_cast<size_t>(darts));
    next0_.resize(static_cast<size_t>(darts));
    next1_.resize(static_cast<size_t>(darts));
    for (int d = 0; d < darts; ++d) head_[static_cast<size_t>(d)] = graph.dart_head(d);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& rot = graph.ref_rotation[static_cast<size_t>(v)];
        for (int p = 0; p < 3; ++p) {
            // the dart arriving along rot[p] reversed continues to the
            // rotation successor (black) or predecessor (white)
            int arriving = LadderGraph::dart_reverse(rot[static_cast<size_t>(p)]);
            next0_[static_cast<size_t>(arriving)] = rot[static_cast<size_t>((p + 1) % 3)];
            next1_[static_cast<size_t>(arriving)] = rot[static_cast<size_t>((p + 2) % 3)];
        }
    }
    twist_slot_.assign(static_cast<size_t>(graph.edge_count()), -1);
    for (size_t slot = 0; slot < graph.cotree.size(); ++slot)
        twist_slot_[static_cast<size_t>(graph.cotree[slot])] = static_cast<int>(slot);
}

RotationSystem RingelTracer::system_at(std::uint64_t packed) const {
    if (packed >= system_count()) throw std::out_of_range("system_at: index out of range");
    RotationSystem s;
    s.twist.resize(static_cast<size_t>(n_) + 1);
    s.color.resize(static_cast<size_t>(graph_->vertex_count()));
    for (int t = 0; t <= n_; ++t) s.twist[static_cast<size_t>(t)] = (packed >> t) & 1u;
    for (int v = 0; v < graph_->vertex_count(); ++v)
        s.color[static_cast<size_t>(v)] = (packed >> (n_ + 1 + v)) & 1u;
    return s;
}

std::uint64_t RingelTracer::pack(const RotationSystem& system) const {
    if (static_cast<int>(system.twist.size()) != n_ + 1 ||
        static_cast<int>(system.color.size()) != graph_->vertex_count())
        throw std::invalid_argument("pack: system does not match the graph");
    std::uint64_t packed = 0;
    for (int t = 0; t <= n_; ++t) packed |= std::uint64_t(system.twist[static_cast<size_t>(t)] & 1u) << t;
    for (int v = 0; v < graph_->vertex_count(); ++v)
        packed |= std::uint64_t(system.color[static_cast<size_t>(v)] & 1u) << (n_ + 1 + v);
    return packed;
}

FaceTrace RingelTracer::trace_impl(const std::uint8_t* twist_by_edge, const std::uint8_t* color) const {
    const int darts = graph_->dart_count();
    const int states = 2 * darts;
    std::array<std::uint64_t, 8> visited{};
    if (states > 512) throw internal_error("trace: state space exceeds the visited bitmap");
    auto test_and_set = [&](int s) {
        std::uint64_t& word = visited[static_cast<size_t>(s >> 6)];
        std::uint64_t mask = std::uint64_t(1) << (s & 63);
        bool was = word & mask;
        word |= mask;
        return was;
    };
    int orbits = 0;
    bool any_twist = false;
    for (size_t e = 0; e < static_cast<size_t>(graph_->edge_count()); ++e) any_twist |= twist_by_edge[e] != 0;
    for (int s0 = 0; s0 < states; ++s0) {
        if ((visited[static_cast<size_t>(s0 >> 6)] >> (s0 & 63)) & 1u) continue;
        ++orbits;
        int s = s0;
        do {
            test_and_set(s);
            const int d = s >> 1;
            const int side = (s & 1) ^ twist_by_edge[static_cast<size_t>(d >> 1)];
            const int nd = (side ^ color[static_cast<size_t>(head_[static_cast<size_t>(d)])])
                               ? next1_[static_cast<size_t>(d)]
                               : next0_[static_cast<size_t>(d)];
            s = (nd << 1) | side;
        } while (s != s0);
    }
    if (orbits % 2) throw internal_error("trace: odd orbit count, face pairing violated");
    FaceTrace out;
    out.face_count = orbits / 2;
    out.euler_characteristic = graph_->vertex_count() - graph_->edge_count() + out.face_count;
    out.surface.orientable = !any_twist;
    if (out.surface.orientable) {
        if ((2 - out.euler_characteristic) % 2) throw internal_error("trace: orientable surface with odd Euler defect");
        out.surface.genus_or_crosscap = (2 - out.euler_characteristic) / 2;
    } else {
        out.surface.genus_or_crosscap = 2 - out.euler_characteristic;
        if (out.surface.genus_or_crosscap < 1)
            throw internal_error("trace: twisted system classified with crosscap < 1");
    }
    return out;
}

FaceTrace RingelTracer::trace(const RotationSystem& system) const {
    std::vector<std::uint8_t> twist_by_edge(static_cast<size_t>(graph_->edge_count()), 0);
    for (size_t slot = 0; slot < graph_->cotree.size(); ++slot)
        twist_by_edge[static_cast<size_t>(graph_->cotree[slot])] = system.twist[slot] & 1u;
    return trace_impl(twist_by_edge.data(), system.color.data());
}

FaceTrace RingelTracer::trace_packed(std::uint64_t packed) const {
    std::array<std::uint8_t, 3 * 64> twist_by_edge{};
    std::array<std::uint8_t, 2 * 64> color{};
    for (size_t e = 0; e < static_cast<size_t>(graph_->edge_count()); ++e) {
        int slot = twist_slot_[e];
        twist_by_edge[e] = slot < 0 ? 0 : static_cast<std::uint8_t>((packed >> slot) & 1u);
    }
    for (int v = 0; v < graph_->vertex_count(); ++v)
        color[static_cast<size_t>(v)] = (packed >> (n_ + 1 + v)) & 1u;
    return trace_impl(twist_by_edge.data(), color.data());
}

std::uint64_t RingelTracer::overlap_bits_packed(std::uint64_t packed) const {
    const int n = n_;
    std::uint64_t bits = packed & ((std::uint64_t(1) << (n + 1)) - 1);  // x_0..x_n = twist bits
    auto color = [&](int v) { return (packed >> (n + 1 + v)) & 1u; };
    // vertex ids: v_i = i-1 (i = 1..n+1), u_j = n+j-1 (j = 2..n)
    for (int j = 1; j <= n - 1; ++j) {
        std::uint64_t y = color(j) ^ color(n + j);  // v_{j+1} vs u_{j+1}
        bits |= y << (n + 1 + j - 1);
    }
    for (int k = 1; k <= n; ++k) {
        std::uint64_t z = color(k - 1) ^ color(k);  // v_k vs v_{k+1}
        bits |= z << (2 * n + k - 1);
    }
    return bits;
}

Gf2SymMatrix RingelTracer::overlap_matrix(const RotationSystem& system) const {
    std::uint64_t rows[Gf2SymMatrix::kMaxDim];
    ringel_rows_from_bits(overlap_bits_packed(pack(system)), n_, rows);
    return Gf2SymMatrix::from_rows({rows, static_cast<size_t>(n_ + 1)});
}

namespace {

RingelTracer make_tracer_checked(int n, LadderGraph& local, const TraceOptions& opts) {
    if (n < 2) throw std::invalid_argument("tracing needs n >= 2");
    if (3 * n + 1 > opts.max_system_bits)
        throw infeasible_error("tracing R_" + std::to_string(n - 1) + " needs 2^" + std::to_string(3 * n + 1) +
                               " rotation systems, above the 2^" + std::to_string(opts.max_system_bits) + " cap");
    local = build_ringel(n);
    return RingelTracer(local);
}

}  // namespace

TotalPoly total_poly_by_tracing(int n, const TraceOptions& opts) {
    LadderGraph g;
    RingelTracer tracer = make_tracer_checked(n, g, opts);

    struct Histogram {
        std::array<std::uint64_t, 64> genus{};
        std::array<std::uint64_t, 128> crosscap{};
    };
    int workers = opts.workers < 1 ? 1 : opts.workers;
    std::vector<Histogram> partial(static_cast<size_t>(workers));
    run_partitioned(tracer.system_count(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
        Histogram& h = partial[static_cast<size_t>(w)];
        for (std::uint64_t s = begin; s < end; ++s) {
            FaceTrace t = tracer.trace_packed(s);
            if (t.surface.orientable)
                h.genus[static_cast<size_t>(t.surface.genus_or_crosscap)] += 1;
            else
                h.crosscap[static_cast<size_t>(t.surface.genus_or_crosscap)] += 1;
        }
    });
    std::vector<BigRat> genus(64, BigRat(0)), crosscap(128, BigRat(0));
    for (const Histogram& h : partial) {
        for (size_t i = 0; i < h.genus.size(); ++i) genus[i] += BigRat(h.genus[i]);
        for (size_t i = 0; i < h.crosscap.size(); ++i) crosscap[i] += BigRat(h.crosscap[i]);
    }
    TotalPoly total;
    total.genus = Poly::from_coeffs(std::move(genus));
    total.crosscap = Poly::from_coeffs(std::move(crosscap));
    if (total.crosscap.coeff(0) != 0) throw internal_error("tracing produced a crosscap-0 surface");
    return total;
}

RankDistribution trace_rank_distribution(Family f, int n, const TraceOptions& opts) {
    if (f != Family::P && f != Family::R)
        throw std::invalid_argument("trace_rank_distribution: only families P and R are graph-backed");
    LadderGraph g;
    RingelTracer tracer = make_tracer_checked(n, g, opts);

    int workers = opts.workers < 1 ? 1 : opts.workers;
    std::vector<std::array<std::uint64_t, Gf2SymMatrix::kMaxDim + 1>> partial(static_cast<size_t>(workers));
    for (auto& p : partial) p.fill(0);
    if (f == Family::R) {
        run_partitioned(tracer.system_count(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
            auto& counts = partial[static_cast<size_t>(w)];
            for (std::uint64_t s = begin; s < end; ++s) {
                FaceTrace t = tracer.trace_packed(s);
                int rank = t.surface.orientable ? 2 * t.surface.genus_or_crosscap : t.surface.genus_or_crosscap;
                counts[static_cast<size_t>(rank)] += 1;
            }
        });
    } else {
        // untwisted systems only: color bits alone, twists = 0
        const std::uint64_t colorings = std::uint64_t(1) << (2 * n);
        run_partitioned(colorings, workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
            auto& counts = partial[static_cast<size_t>(w)];
            for (std::uint64_t c = begin; c < end; ++c) {
                FaceTrace t = tracer.trace_packed(c << (n + 1));
                counts[static_cast<size_t>(2 * t.surface.genus_or_crosscap)] += 1;
            }
        });
    }
    RankDistribution dist;
    dist.family = f;
    dist.n = n;
    dist.subscript = n + 1;
    dist.method = "trace";
    dist.counts.assign(static_cast<size_t>(n) + 2, BigInt(0));
    for (const auto& p : partial)
        for (int r = 0; r <= n + 1; ++r) dist.counts[static_cast<size_t>(r)] += p[static_cast<size_t>(r)];
    for (BigInt& c : dist.counts) {
        if (c % 2 != 0) throw internal_error("trace_rank_distribution: system count per rank must be even");
        c /= 2;  // two systems per matrix value
    }
    return dist;
}

MoharReport mohar_exhaustive(int n, const TraceOptions& opts) {
    LadderGraph g;
    RingelTracer tracer = make_tracer_checked(n, g, opts);

    int workers = opts.workers < 1 ? 1 : opts.workers;
    struct Partial {
        std::uint64_t violations = 0;
        std::optional<MoharViolation> first;
    };
    std::vector<Partial> partial(static_cast<size_t>(workers));
    run_partitioned(tracer.system_count(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
        Partial& p = partial[static_cast<size_t>(w)];
        std::uint64_t rows[Gf2SymMatrix::kMaxDim];
        for (std::uint64_t s = begin; s < end; ++s) {
            FaceTrace t = tracer.trace_packed(s);
            ringel_rows_from_bits(tracer.overlap_bits_packed(s), n, rows);
            int rank = gf2_rank({rows, static_cast<size_t>(n + 1)});
            int expected = t.surface.orientable ? 2 * t.surface.genus_or_crosscap : t.surface.genus_or_crosscap;
            if (rank != expected) {
                ++p.violations;
                if (!p.first) p.first = MoharViolation{s, rank, t.surface};
            }
        }
    });
    MoharReport report;
    report.systems = tracer.system_count();
    for (const Partial& p : partial) {
        report.violations += p.violations;
        if (!report.first && p.first) report.first = p.first;
    }
    return report;
}

PreimageReport overlap_preimage_count(int n, const TraceOptions& opts) {
    LadderGraph g;
    RingelTracer tracer = make_tracer_checked(n, g, opts);

    const std::uint64_t values = std::uint64_t(1) << (3 * n);
    int workers = opts.workers < 1 ? 1 : opts.workers;
    std::vector<std::vector<std::uint8_t>> partial(static_cast<size_t>(workers));
    for (auto& p : partial) p.assign(values, 0);
    run_partitioned(tracer.system_count(), workers, [&](int w, std::uint64_t begin, std::uint64_t end) {
        auto& counts = partial[static_cast<size_t>(w)];
        for (std::uint64_t s = begin; s < end; ++s) counts[tracer.overlap_bits_packed(s)] += 1;
    });
    PreimageReport report;
    report.expected_values = values;
    std::uint64_t min_mult = UINT64_MAX, max_mult = 0, seen = 0;
    for (std::uint64_t v = 0; v < values; ++v) {
        std::uint64_t c = 0;
        for (const auto& p : partial) c += p[v];
        if (c > 0) ++seen;
        min_mult = std::min(min_mult, c);
        max_mult = std::max(max_mult, c);
    }
    report.matrix_values = seen;
    report.min_multiplicity = values ? min_mult : 0;
    report.max_multiplicity = max_mult;
    return report;
}

}  // namespace ringlad
