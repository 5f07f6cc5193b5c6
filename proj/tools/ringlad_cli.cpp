// Command-line front end. Talks to the computation core exclusively through
// the C API in ringlad.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "output_format.hpp"
#include "ringlad.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariantFailure = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;

struct ResultDeleter {
    void operator()(rgl_result* r) const { rgl_result_free(r); }
};
using ResultPtr = std::unique_ptr<rgl_result, ResultDeleter>;

int map_status(int status) {
    switch (status) {
        case RGL_OK: return kExitOk;
        case RGL_ERR_INFEASIBLE: return kExitInfeasible;
        case RGL_ERR_USAGE:
        case RGL_ERR_NULL: return kExitUsage;
        default: return kExitInvariantFailure;
    }
}

int report_error(int status) {
    std::cerr << "error: " << rgl_last_error() << "\n";
    return map_status(status);
}

int run_dist(const std::string& family, long n, const std::string& method, const std::string& format,
             int workers) {
    rgl_result* raw = nullptr;
    int status = rgl_dist(family.c_str(), n, method.c_str(), workers, &raw);
    if (status != RGL_OK) return report_error(status);
    ResultPtr result(raw);
    if (format == "json")
        std::cout << rglfmt::dist_json(result.get()).dump() << "\n";
    else if (format == "csv")
        std::cout << rglfmt::dist_csv(result.get());
    else
        std::cout << rglfmt::info_or(result.get(), "text") << "\n";
    return kExitOk;
}

int run_verify(long max_n_brute, long max_n_trace, long max_n_closed, int workers, const std::string& format) {
    rgl_result* raw = nullptr;
    int status = rgl_verify(max_n_brute, max_n_trace, max_n_closed, workers, &raw);
    if (status != RGL_OK) return report_error(status);
    ResultPtr result(raw);
    const bool ok = rglfmt::info_or(result.get(), "ok") == "true";
    if (format == "json") {
        std::cout << rglfmt::verify_json(result.get()).dump(2) << "\n";
    } else {
        long count = rgl_result_count(result.get());
        for (long i = 0; i < count; ++i) {
            if (rglfmt::field_or(result.get(), i, "pass") == "true") continue;
            std::cout << "FAIL " << rglfmt::field_or(result.get(), i, "check") << " family="
                      << rglfmt::field_or(result.get(), i, "family") << " n="
                      << rglfmt::field_or(result.get(), i, "n");
            if (rgl_result_field(result.get(), i, "m"))
                std::cout << " m=" << rglfmt::field_or(result.get(), i, "m");
            std::cout << ": expected " << rglfmt::field_or(result.get(), i, "expected") << ", got "
                      << rglfmt::field_or(result.get(), i, "got") << "\n";
        }
        std::cout << (ok ? "OK" : "FAILED") << ": " << rglfmt::info_or(result.get(), "checks") << " checks, "
                  << rglfmt::info_or(result.get(), "failures") << " failures ("
                  << rglfmt::info_or(result.get(), "elapsed_ms") << " ms)\n";
        if (!ok) std::cout << "first counterexample: " << rglfmt::info_or(result.get(), "first_failure") << "\n";
    }
    return ok ? kExitOk : kExitInvariantFailure;
}

int run_paper_check() {
    rgl_result* raw = nullptr;
    int status = rgl_paper_check(&raw);
    if (status != RGL_OK) return report_error(status);
    ResultPtr result(raw);
    for (long i = 0; i < rgl_result_count(result.get()); ++i) {
        const bool pass = rglfmt::field_or(result.get(), i, "pass") == "true";
        std::cout << (pass ? "PASS" : "FAIL") << " I(" << rglfmt::field_or(result.get(), i, "graph")
                  << ") = " << rglfmt::field_or(result.get(), i, "computed");
        if (!pass) std::cout << "  [reference: " << rglfmt::field_or(result.get(), i, "expected") << "]";
        std::cout << "\n";
    }
    const bool ok = rglfmt::info_or(result.get(), "ok") == "true";
    return ok ? kExitOk : kExitInvariantFailure;
}

int run_errata(long limit, const std::string& format) {
    rgl_result* raw = nullptr;
    int status = rgl_errata(limit, &raw);
    if (status != RGL_OK) return report_error(status);
    ResultPtr result(raw);
    if (format == "json") {
        std::cout << rglfmt::errata_json(result.get()).dump(2) << "\n";
        return kExitOk;
    }
    for (long i = 0; i < rgl_result_count(result.get()); ++i) {
        auto f = [&](const char* key) { return rglfmt::field_or(result.get(), i, key); };
        std::cout << "* " << f("id") << " [" << f("kind") << "]\n"
                  << "  published: " << f("published") << "\n"
                  << "  corrected: " << f("corrected") << "\n"
                  << "  note:      " << f("detail") << "\n";
        if (f("witness_found") == "true") {
            std::cout << "  witness:   " << f("witness") << " -- published " << f("published_value") << ", correct "
                      << f("corrected_value") << "\n";
        } else {
            std::cout << "  witness:   " << f("witness") << "\n";
        }
    }
    return kExitOk;
}

int run_dot(const std::string& kind, long n) {
    rgl_result* raw = nullptr;
    int status = rgl_graph_dot(kind.c_str(), n, &raw);
    if (status != RGL_OK) return report_error(status);
    ResultPtr result(raw);
    std::cout << rglfmt::info_or(result.get(), "dot");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact total embedding distributions of Ringel ladders.\n"
        "Computes the rank-distribution polynomials of the O/L/P/R overlap-matrix\n"
        "families and the total embedding polynomial I(x,y) of R_{n-1} by four\n"
        "independent methods, and cross-validates them."};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(rgl_version()); });

    std::string family = "total", method = "recurrence", format = "text";
    long n = 2;
    int workers = 1;
    long max_n_brute = 8, max_n_trace = 5, max_n_closed = 40, errata_limit = 60;
    std::string dot_kind = "ringel";

    auto* dist = app.add_subcommand(
        "dist",
        "Print one distribution. For families O/L/P/R, --n is the family subscript\n"
        "(the matrix dimension); for --family total, --n is the graph parameter of\n"
        "the Ringel ladder R_{n-1} (overlap matrices are (n+1)x(n+1)).");
    dist->add_option("--family", family, "O, L, P, R or total")->default_val("total");
    dist->add_option("--n", n, "family subscript (O/L/P/R) or graph parameter (total)")->required();
    dist->add_option("--method", method, "recurrence, closed, bruteforce or trace")->default_val("recurrence");
    dist->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
    dist->add_option("--workers", workers, "worker threads for bruteforce/trace")->default_val(1);

    auto* verify = app.add_subcommand("verify", "Run the full cross-method invariant suite.");
    verify->add_option("--max-n-brute", max_n_brute, "graph-parameter cap for brute-force checks")->default_val(8);
    verify->add_option("--max-n-trace", max_n_trace, "graph-parameter cap for face-tracing checks")->default_val(5);
    verify->add_option("--max-n-closed", max_n_closed, "subscript cap for recurrence/closed-form checks")
        ->default_val(40);
    verify->add_option("--workers", workers, "worker threads")->default_val(1);
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    app.add_subcommand("paper-check",
                       "Recompute the published reference polynomials I(R_1)..I(R_5) and print\n"
                       "PASS/FAIL per line.");

    auto* errata = app.add_subcommand("errata",
                                      "Report each published formula this project had to correct, with the\n"
                                      "corrected form and the smallest witness where they differ.");
    errata->add_option("--limit", errata_limit, "witness search limit")->default_val(60);
    errata->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    auto* dot = app.add_subcommand("dot", "Emit the labeled ladder graph in DOT format (tree edges bold).");
    dot->add_option("--kind", dot_kind, "ringel or closed-end")->default_val("ringel");
    dot->add_option("--n", n, "graph parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (dist->parsed()) return run_dist(family, n, method, format, workers);
    if (verify->parsed()) return run_verify(max_n_brute, max_n_trace, max_n_closed, workers, format);
    if (app.get_subcommand("paper-check")->parsed()) return run_paper_check();
    if (errata->parsed()) return run_errata(errata_limit, format);
    if (dot->parsed()) return run_dot(dot_kind, n);
    return kExitUsage;
}
