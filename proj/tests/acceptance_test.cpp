// Acceptance gate: runs every named verification checker with a fixed
// seed and prints one pass/fail line per checker. Nonzero exit if any
// checker fails. The line format is stable for log scraping:
//   [PASS] <id>    /    [FAIL] <id>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "z2z4/verify.hpp"

int main(int argc, char** argv) {
    z2z4::VerifyOptions opt;
    opt.seed = 20260825;
    opt.workers = 1;
    if (const char* env = std::getenv("ACCEPTANCE_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";

    int failures = 0;
    for (const auto& id : z2z4::check_ids()) {
        const auto start = std::chrono::steady_clock::now();
        z2z4::CheckResult res;
        try {
            res = z2z4::run_check(id, opt);
        } catch (const std::exception& e) {
            res.id = id;
            res.pass = false;
            res.note(std::string("exception: ") + e.what());
        }
        const auto secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << id << "  ("
                  << static_cast<int>(secs * 1000) << " ms)\n";
        if (!res.pass || verbose)
            for (const auto& line : res.details) std::cout << "    " << line << "\n";
        if (!res.pass) ++failures;
    }
    if (failures) std::cout << failures << " checker(s) failed\n";
    return failures ? 1 : 0;
}
