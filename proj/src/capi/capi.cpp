#include "ringlad.h"

#include <exception>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "core/enumeration.hpp"
#include "core/errata.hpp"
#include "core/families.hpp"
#include "core/ladder_graph.hpp"
#include "core/published.hpp"
#include "core/rotation.hpp"
#include "core/util.hpp"
#include "core/verify.hpp"

using namespace ringlad;

struct rgl_result {
    std::map<std::string, std::string> info;
    std::vector<std::map<std::string, std::string>> records;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <class Fn>
int guarded(rgl_result** out, Fn&& fn) {
    if (!out) return fail(RGL_ERR_NULL, "output pointer is NULL");
    try {
        auto result = std::make_unique<rgl_result>(fn());
        *out = result.release();
        g_last_error.clear();
        return RGL_OK;
    } catch (const infeasible_error& e) {
        return fail(RGL_ERR_INFEASIBLE, e.what());
    } catch (const internal_error& e) {
        return fail(RGL_ERR_INTERNAL, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(RGL_ERR_USAGE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(RGL_ERR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(RGL_ERR_INTERNAL, e.what());
    }
}

std::string fam_poly_name(Family f, long n) {
    return std::string(1, family_char(f)) + "_" + std::to_string(n);
}

void append_part(rgl_result& r, const char* part, const Poly& poly) {
    for (int e = 0; e <= poly.degree(); ++e) {
        std::map<std::string, std::string> record;
        record["part"] = part;
        record["exponent"] = std::to_string(e);
        record["count"] = is_integer(poly.coeff(e)) ? boost::multiprecision::numerator(poly.coeff(e)).str()
                                                    : poly.coeff(e).str();
        r.records.push_back(std::move(record));
    }
}

rgl_result dist_result(const std::string& family, long n, const std::string& method, int workers) {
    Stopwatch watch;
    rgl_result r;
    r.info["family"] = family;
    r.info["n"] = std::to_string(n);
    r.info["method"] = method;

    const bool total = (family == "total");
    if (!total && family.size() != 1) throw std::invalid_argument("unknown family '" + family + "'");
    if (n < 0 || n > 1000000) throw std::invalid_argument("n out of range");

    if (total) {
        TotalPoly poly;
        if (method == "recurrence")
            poly = total_embedding_poly(static_cast<int>(n));
        else if (method == "closed")
            poly = total_embedding_poly_closed(static_cast<int>(n));
        else if (method == "bruteforce") {
            EnumOptions opts;
            opts.workers = workers;
            poly = total_embedding_poly_brute(static_cast<int>(n), opts);
        } else if (method == "trace") {
            TraceOptions opts;
            opts.workers = workers;
            poly = total_poly_by_tracing(static_cast<int>(n), opts);
        } else
            throw std::invalid_argument("unknown method '" + method + "'");
        append_part(r, "genus", poly.genus);
        append_part(r, "crosscap", poly.crosscap);
        r.info["text"] = poly.str();
    } else {
        Family f = parse_family(family);
        Poly poly;
        if (method == "recurrence")
            poly = recurrence_poly(f, static_cast<int>(n));
        else if (method == "closed")
            poly = closed_form_poly(f, static_cast<int>(n));
        else if (method == "bruteforce") {
            EnumOptions opts;
            opts.workers = workers;
            poly = brute_family_poly(f, static_cast<int>(n), opts);
        } else if (method == "trace") {
            if (f != Family::P && f != Family::R)
                throw std::invalid_argument("method 'trace' applies to families P and R only");
            TraceOptions opts;
            opts.workers = workers;
            poly = trace_rank_distribution(f, static_cast<int>(n) - 1, opts).poly();
        } else
            throw std::invalid_argument("unknown method '" + method + "'");
        append_part(r, "coeffs", poly);
        r.info["text"] = poly.str();
    }
    r.info["elapsed_ms"] = std::to_string(watch.elapsed_ms());
    return r;
}

}  // namespace

extern "C" {

int rgl_dist(const char* family, long n, const char* method, int workers, rgl_result** out) {
    if (!family || !method) return fail(RGL_ERR_NULL, "family/method must not be NULL");
    std::string fam = family, meth = method;
    return guarded(out, [&] { return dist_result(fam, n, meth, workers); });
}

int rgl_verify(long max_n_brute, long max_n_trace, long max_n_closed, int workers, rgl_result** out) {
    return guarded(out, [&] {
        VerifyOptions opts;
        opts.max_n_brute = static_cast<int>(max_n_brute);
        opts.max_n_trace = static_cast<int>(max_n_trace);
        opts.max_n_closed = static_cast<int>(max_n_closed);
        opts.workers = workers;
        if (opts.max_n_brute < 0 || opts.max_n_trace < 0 || opts.max_n_closed < 1)
            throw std::invalid_argument("verify caps out of range");
        if (3 * opts.max_n_trace + 1 > TraceOptions{}.max_system_bits)
            throw infeasible_error("max_n_trace exceeds the tracing budget (2^" +
                                   std::to_string(TraceOptions{}.max_system_bits) + " systems)");
        VerifyReport report = run_verify(opts);
        rgl_result r;
        r.info["ok"] = report.ok() ? "true" : "false";
        r.info["checks"] = std::to_string(report.checks.size());
        r.info["failures"] = std::to_string(report.failures());
        r.info["elapsed_ms"] = std::to_string(report.elapsed_ms);
        if (const Check* first = report.first_failure()) {
            r.info["first_failure"] = first->name + " (family=" + first->family + ", n=" + std::to_string(first->n) +
                                      (first->m >= 0 ? ", m=" + std::to_string(first->m) : "") + "): expected " +
                                      first->expected + ", got " + first->got;
        }
        for (const Check& c : report.checks) {
            std::map<std::string, std::string> record;
            record["check"] = c.name;
            record["family"] = c.family;
            record["n"] = std::to_string(c.n);
            if (c.m >= 0) record["m"] = std::to_string(c.m);
            record["pass"] = c.pass ? "true" : "false";
            if (!c.pass) {
                record["expected"] = c.expected;
                record["got"] = c.got;
            }
            r.records.push_back(std::move(record));
        }
        return r;
    });
}

int rgl_paper_check(rgl_result** out) {
    return guarded(out, [&] {
        Stopwatch watch;
        rgl_result r;
        bool ok = true;
        for (const PaperCheckLine& line : paper_check()) {
            ok = ok && line.pass;
            std::map<std::string, std::string> record;
            record["graph"] = "R" + std::to_string(line.graph_index);
            record["n"] = std::to_string(line.n);
            record["expected"] = line.expected;
            record["computed"] = line.computed;
            record["pass"] = line.pass ? "true" : "false";
            r.records.push_back(std::move(record));
        }
        r.info["ok"] = ok ? "true" : "false";
        r.info["elapsed_ms"] = std::to_string(watch.elapsed_ms());
        return r;
    });
}

int rgl_errata(long search_limit, rgl_result** out) {
    return guarded(out, [&] {
        if (search_limit < 2 || search_limit > 2000) throw std::invalid_argument("search limit out of range");
        rgl_result r;
        auto entries = run_errata(static_cast<int>(search_limit));
        r.info["entries"] = std::to_string(entries.size());
        for (const Erratum& e : entries) {
            std::map<std::string, std::string> record;
            record["id"] = e.id;
            record["kind"] = e.kind;
            record["published"] = e.published;
            record["corrected"] = e.corrected;
            record["detail"] = e.detail;
            record["witness_searched"] = e.witness_searched ? "true" : "false";
            record["witness_found"] = e.witness_found ? "true" : "false";
            record["witness"] = e.witness;
            if (e.witness_n >= 0) record["witness_n"] = std::to_string(e.witness_n);
            if (e.witness_m >= 0) record["witness_m"] = std::to_string(e.witness_m);
            if (!e.published_value.empty()) record["published_value"] = e.published_value;
            if (!e.corrected_value.empty()) record["corrected_value"] = e.corrected_value;
            record["search_limit"] = std::to_string(e.search_limit);
            r.records.push_back(std::move(record));
        }
        return r;
    });
}

int rgl_graph_dot(const char* kind, long n, rgl_result** out) {
    if (!kind) return fail(RGL_ERR_NULL, "kind must not be NULL");
    std::string k = kind;
    return guarded(out, [&] {
        LadderGraph g;
        if (k == "ringel")
            g = build_ringel(static_cast<int>(n));
        else if (k == "closed-end" || k == "closed_end")
            g = build_closed_end(static_cast<int>(n));
        else
            throw std::invalid_argument("unknown graph kind '" + k + "' (expected ringel or closed-end)");
        rgl_result r;
        r.info["kind"] = k;
        r.info["n"] = std::to_string(n);
        r.info["dot"] = g.dot();
        return r;
    });
}

void rgl_result_free(rgl_result* result) { delete result; }

const char* rgl_result_info(const rgl_result* result, const char* key) {
    if (!result || !key) return nullptr;
    auto it = result->info.find(key);
    return it == result->info.end() ? nullptr : it->second.c_str();
}

long rgl_result_count(const rgl_result* result) {
    return result ? static_cast<long>(result->records.size()) : 0;
}

const char* rgl_result_field(const rgl_result* result, long index, const char* key) {
    if (!result || !key || index < 0 || index >= static_cast<long>(result->records.size())) return nullptr;
    const auto& record = result->records[static_cast<size_t>(index)];
    auto it = record.find(key);
    return it == record.end() ? nullptr : it->second.c_str();
}

const char* rgl_last_error(void) { return g_last_error.c_str(); }

const char* rgl_version(void) { return "1.0.0"; }

}  // extern "C"
