#pragma once

// Constructive bijection between build data (peak counts per relative height,
// move partitions, dilation partition) and four-step lattice paths, together
// with the inverse decomposition.

#include "overpath/lattice_path.hpp"

#include <optional>
#include <string>
#include <vector>

namespace overpath {

enum class PeakKind { NSE, NESE };

PeakKind peak_kind_from_string(const std::string& s);
std::string to_string(PeakKind k);

struct BuildSpec {
    int k = 2;
    int a = 1;
    std::vector<int> n;                // n[r-1] = number of peaks of relative height r, r = 1..k-1
    std::vector<std::vector<int>> mu;  // mu[r-1]: weakly decreasing, exactly n[r-1] parts
    std::vector<int> beta;             // strictly decreasing, parts in [1, N_1 - 1]
    PeakKind leftmost = PeakKind::NSE;
    PathFamily family = PathFamily::E;

    int N(int r) const;  // N_r = n_r + ... + n_{k-1}

    // Throws std::invalid_argument describing the first violated invariant.
    void check() const;

    bool operator==(const BuildSpec&) const = default;
};

struct TraceEntry {
    std::string label;
    LatticePath path;
};

// Elementary operations. All throw std::invalid_argument when preconditions
// fail; diagnostics name the offending step or peak index.
LatticePath insert_nse_peaks(const LatticePath& p, int count, int start_height);
LatticePath insert_se_step(const LatticePath& p);
// Moves the peak at 0-based index `target` right by `amount` unit moves
// (equal-height collisions hand the movement to the next peak).
LatticePath move_peak_right(const LatticePath& p, int target, int amount);
LatticePath volcanic_uplift(const LatticePath& p);
LatticePath dilation_A(const LatticePath& p);
LatticePath dilation_B(const LatticePath& p);
LatticePath reduction_A(const LatticePath& p);
LatticePath reduction_B(const LatticePath& p);

LatticePath build_path(const BuildSpec& spec, std::vector<TraceEntry>* trace = nullptr);

BuildSpec decompose_path(const LatticePath& p);

}  // namespace overpath
