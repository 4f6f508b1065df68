#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nilcov {

// Run-wide knobs. Identical config + inputs => identical outputs.
struct RunConfig {
    unsigned threads = 0;               // 0 = hardware concurrency
    std::size_t closure_cap = 1u << 22; // max elements in a subgroup closure
    std::int64_t mis_timeout_ms = -1;   // -1 = no limit
    std::uint64_t seed = 0x9e3779b97f4a7c15ull;
    std::string output_format = "json"; // json | csv | text

    unsigned effective_threads() const;
    static RunConfig from_env(); // NILCOV_THREADS etc. override defaults
};

RunConfig& global_config();

// Signals that a closure hit the configured element cap; a resource issue,
// not a mathematical one.
struct closure_cap_exceeded : std::runtime_error {
    explicit closure_cap_exceeded(std::size_t cap)
        : std::runtime_error("subgroup closure exceeded element cap " + std::to_string(cap)) {}
};

class stopwatch {
  public:
    stopwatch() : start_(clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_).count();
    }
    double elapsed_s() const { return double(elapsed_ms()) / 1000.0; }

  private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

// Static block partition of [0, n); fn(begin, end) per worker. Deterministic
// given identical inputs: workers write to disjoint output regions.
void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace nilcov
