#pragma once

#include <string>
#include <vector>

#include "algnum/numsys.hpp"

namespace algnum {

// D(N): the digits that may extend a word ending at node N, all lying in one
// residue class modulo a2.
struct BranchClass {
    long residue;             // class representative in [0, a2)
    std::vector<int> digits;  // sorted ascending
};

BranchClass branch_digits(const NumberSystem& ns, const LatticePoint& n);

struct LevelEntry {
    std::vector<int> word;  // may start with 0
    LatticePoint node;
};

// All length-k downward paths from the root, depth-first, digits ascending.
std::vector<LevelEntry> enumerate_level(const NumberSystem& ns, int k,
                                        size_t cap = 4000000);

// Number of length-k paths without materializing them.
size_t count_level(const NumberSystem& ns, int k, size_t cap = 100000000);

struct LengthBracket {
    long lower;  // smallest conceivable word length (digit count)
    long upper;  // largest conceivable word length
};

// Two-sided bracket on the length of the integer expansion of n, from the
// exact geometric inequalities relating |N| to |alpha|^k. When the lower
// inequality is vacuous (digit contribution dominates |alpha|^k), the upper
// end falls back to an orbit-containment bound: steps to enter the invariant
// ball of radius digit_max/(|alpha|-1) plus the number of nonzero lattice
// points inside it.
LengthBracket length_bounds(const NumberSystem& ns, const LatticePoint& n);

// GraphViz rendering of the first `depth` levels, nodes labeled by lattice
// value and child residue class.
std::string tree_dot(const NumberSystem& ns, int depth);

}  // namespace algnum
