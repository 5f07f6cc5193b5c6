#ifndef RINGLAD_UTIL_HPP
#define RINGLAD_UTIL_HPP

#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

namespace ringlad {

// Splits [0, total) into `workers` contiguous chunks and runs
// fn(worker_index, begin, end) on each, one thread per chunk. Results must
// be merged by the caller; chunk boundaries depend only on (total, workers),
// so any per-chunk accumulation merges deterministically.
template <class Fn>
void run_partitioned(std::uint64_t total, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || total == 0) {
        fn(0, std::uint64_t(0), total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(w) +
                              std::min<std::uint64_t>(static_cast<std::uint64_t>(w), total % static_cast<std::uint64_t>(workers));
        std::uint64_t end = total / static_cast<std::uint64_t>(workers) * (static_cast<std::uint64_t>(w) + 1) +
                            std::min<std::uint64_t>(static_cast<std::uint64_t>(w) + 1, total % static_cast<std::uint64_t>(workers));
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long elapsed_ms() const {
        return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start_)
                                     .count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ringlad

#endif
