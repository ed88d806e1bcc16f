#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace overpath {

// One grid cell of a verification run: a parameter point together with the
// value each independent evaluator produced there.  The cell passes iff all
// evaluators agree exactly.
struct VerifyCell {
    std::vector<std::pair<std::string, long long>> params;  // e.g. {k,a,n}
    std::vector<std::pair<std::string, long long>> values;  // evaluator -> value
    bool pass = true;
};

struct VerifyBounds {
    int k = 0;     // fixed k; 0 means sweep k = 2..kmax
    int kmax = 3;  // upper end of the k sweep
    int nmax = 15; // weight / truncation bound
};

struct VerificationReport {
    std::string theorem;               // e.g. "1.3"
    std::string description;           // human-readable statement of the check
    std::vector<VerifyCell> cells;     // fixed grid order
    int passed = 0;
    int failed = 0;

    bool all_pass() const { return failed == 0; }
    // Index of the first failing cell, or -1 if every cell passes.
    int first_failure() const;
    nlohmann::json to_json() const;
};

// Known theorem labels, in canonical order.
const std::vector<std::string>& known_theorems();

// Cross-checks one theorem over a parameter grid.  Throws
// std::invalid_argument for an unknown label.
VerificationReport verify_theorem(const std::string& theorem,
                                  const VerifyBounds& bounds = {});

}  // namespace overpath
