#include "nilcov/runtime.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilcov {

unsigned RunConfig::effective_threads() const {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

RunConfig RunConfig::from_env() {
    RunConfig cfg;
    if (const char* t = std::getenv("NILCOV_THREADS")) cfg.threads = unsigned(std::atoi(t));
    if (const char* c = std::getenv("NILCOV_CLOSURE_CAP")) cfg.closure_cap = std::size_t(std::atoll(c));
    if (const char* m = std::getenv("NILCOV_MIS_TIMEOUT_MS")) cfg.mis_timeout_ms = std::atoll(m);
    return cfg;
}

RunConfig& global_config() {
    static RunConfig cfg = RunConfig::from_env();
    return cfg;
}

void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    unsigned nt = std::min<std::size_t>(global_config().effective_threads(), std::max<std::size_t>(n, 1));
    if (nt <= 1 || n < 128) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t b = std::min(n, t * chunk), e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

} // namespace nilcov
