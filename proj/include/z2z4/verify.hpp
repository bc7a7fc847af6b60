#ifndef Z2Z4_VERIFY_HPP
#define Z2Z4_VERIFY_HPP

#include <string>
#include <vector>

#include "z2z4/construct.hpp"
#include "z2z4/search.hpp"

namespace z2z4 {

/// Outcome of one named theorem/example checker. `details` carries the
/// observed values (one line each) for logging and golden files.
struct CheckResult {
    std::string id;
    bool pass = false;
    std::vector<std::string> details;

    void note(std::string line) { details.push_back(std::move(line)); }
    void require(bool ok, std::string line) {
        if (!ok) pass = false;
        details.push_back((ok ? "ok: " : "FAIL: ") + std::move(line));
    }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t workers = 1;
    std::size_t guard_log2 = 26;  // the largest certified codes hold 2^26 words
    std::uint64_t budget = 0;     // 0 = per-checker default
};

/// All checker names accepted by run_check, in reporting order; the
/// first fourteen are the acceptance set.
std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id, const VerifyOptions& opt);

/// One atlas row of the beta=16 intersection-type survey: which dual
/// deltas the two perfect codes have, the achieved intersection dual
/// type, and a replayable witness.
struct AtlasEntry {
    std::size_t dbar1 = 0;
    std::size_t dbar2 = 0;
    CodeType cell;
    Witness witness;
    std::string base1;  // construction of the fixed code
    std::string base2;  // construction of the code the monomial acts on
};
std::vector<AtlasEntry> gapsquaternary_t5_atlas(const VerifyOptions& opt = {});

/// Byte-stable reproduction targets (golden-file material).
std::string reproduce_exbeta4();
std::string reproduce_gapsquaternary_t5(const VerifyOptions& opt = {});

}  // namespace z2z4

#endif
