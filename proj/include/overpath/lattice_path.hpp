#pragma once

// Four-step lattice paths: validity grammar, peaks, relative heights, the
// statistic W, major index, parity statistics, exhaustive enumeration and the
// path-side counting families.

#include "overpath/overpartition.hpp"  // Parity

#include <string>
#include <vector>

namespace overpath {

enum class StepKind { NE, SE, N, E };

char step_letter(StepKind s);                 // u, d, n, e
StepKind step_from_letter(char c);

struct Peak {
    int x = 0;
    int y = 0;
    bool nese = false;  // false: NSE (preceded by N); true: NESE (preceded by NE)
    int rel_height = 0;
};

struct LatticePath {
    int k = 2;
    int a = 2;
    std::vector<StepKind> steps;

    int start_height() const { return k - a; }

    // Vertex list (x,y) from (0, k-a), one entry per step plus the start.
    std::vector<std::pair<int, int>> vertices() const;

    std::string to_text() const;  // "k=K,a=A:<letters>"
    static LatticePath from_text(const std::string& s);

    bool operator==(const LatticePath&) const = default;
};

// Grammar/geometry validation; on failure 'why' explains the first violation.
bool validate(const LatticePath& p, std::string* why = nullptr);

// Peaks without relative heights (rel_height left 0), in path order.
std::vector<Peak> peaks(const LatticePath& p);

// Relative heights, one per peak, in path order. Only vertices of the path
// itself act as comparison vertices for the bracketing pair.
std::vector<int> relative_heights(const LatticePath& p);

// Peaks with rel_height filled in.
std::vector<Peak> annotated_peaks(const LatticePath& p);

// Number of NSE peaks with weight <= x.
int W(const LatticePath& p, int x);

int major_index(const LatticePath& p);

// Parity of a peak: opposite to the parity of x - rel_height - W(x).
Parity peak_parity(const LatticePath& p, const Peak& peak);

struct PathParityIndexBreakdown {
    std::vector<int> per_r;  // index 0 -> r = 1
    int full = 0;
};
// Lower even r-peak parity indices: the number of parity changes along the
// rel-r peaks read left to right, measured against a virtual initial parity
// (even iff the leftmost peak of the path is NSE), and their sum.
PathParityIndexBreakdown parity_indices(const LatticePath& p);

// All valid paths with the special (k,a)-conditions and major index exactly n.
std::vector<LatticePath> enumerate_paths(int k, int a, int n);

enum class PathFamily { E, F, H, J, S };
PathFamily path_family_from_string(const std::string& s);

bool in_path_family(const LatticePath& p, PathFamily f);

long long count_paths(PathFamily f, int k, int a, int n);

// #{paths in E_{k,k}(n) : sum of relative heights = m, full parity index = l}.
long long count_G(int k, int l, int m, int n);

}  // namespace overpath
