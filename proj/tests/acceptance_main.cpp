#include "nilcov/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    nilcov::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--extended")) opts.extended = true;
        if (!std::strcmp(argv[i], "--extended-only")) opts.extended_only = true;
    }
    opts.on_result = [](const nilcov::CriterionResult& r) {
        std::cout << "CRITERION " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " ("
                  << r.elapsed_ms << " ms) " << r.detail << std::endl;
    };
    auto results = nilcov::run_acceptance(opts);
    bool ok = nilcov::all_passed(results);
    std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << std::endl;
    return ok ? 0 : 1;
}
