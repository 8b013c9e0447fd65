#ifndef BIHARMONIC_CLI_HPP
#define BIHARMONIC_CLI_HPP

#include "biharmonic/catalog.hpp"

#include <cstdint>
#include <string>

namespace biharmonic {

/// Exit codes shared by every verb:
///   0 computed, 2 parameter error, 3 endpoint-root policy / certification
///   failure, 4 verifier found a display mismatch (reportable, not fatal),
///   5 inequality violation.
struct RunConfig {
    enum class Verb { classify, sweep, catalog_dump, verify_example, ym_check };
    Verb verb = Verb::classify;
    std::string family;
    FamilyParams params;
    unsigned digits = 6;
    bool round_decimals = false; // default display truncates
    std::string theorem = "4.1"; // sweep selector: 4.1 | 6.2 | 7.3
    int n_min = 2;
    int n_max = 8;
    bool json = false;
    unsigned m = 3; // verify-example / ym-check dimensions
    unsigned r = 3;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
};

struct RunOutcome {
    int exit_code = 0;
    std::string output;
};

/// Executes one parsed configuration; never throws. Output is deterministic
/// for a fixed configuration (fixed seed included).
RunOutcome run(const RunConfig& config);

} // namespace biharmonic

#endif
