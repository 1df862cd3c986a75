#pragma once

#include <random>
#include <string>
#include <vector>

#include "algnum/complexexp.hpp"
#include "algnum/digitarith.hpp"
#include "algnum/finiteness.hpp"
#include "algnum/gauss.hpp"
#include "algnum/language.hpp"
#include "algnum/numsys.hpp"
#include "algnum/padic.hpp"

namespace testutil {

using namespace algnum;

inline GaussRat complex_rat(long re_num, long re_den, long im_num, long im_den) {
    return {make_rat(Int(re_num), Int(re_den)), make_rat(Int(im_num), Int(im_den))};
}

// (-1+3i)/2, the recurring worked example
inline NumberSystem base_main() { return NumberSystem::make(complex_rat(-1, 2, 3, 2)); }
// (-1+5i)/3, root of 9X^2 + 6X + 26
inline NumberSystem base_26() { return NumberSystem::make(complex_rat(-1, 3, 5, 3)); }
// (3+2i)/3, which lacks the finiteness property
inline NumberSystem base_nonfinite() { return NumberSystem::make(complex_rat(3, 3, 2, 3)); }
// 3/2, the rational starting point
inline NumberSystem base_rational() { return NumberSystem::make(complex_rat(3, 2, 0, 1)); }

inline Expansion word(const std::string& s, bool wide = false) {
    return Expansion::parse(s, wide);
}

inline GaussInt gi(long re, long im) { return {Int(re), Int(im)}; }

inline LatticePoint lp(long lam, long mu) { return {Int(lam), Int(mu)}; }

// lattice point from a complex value, asserting membership
inline LatticePoint lat(const NumberSystem& ns, long re, long im, long den = 1) {
    auto p = ns.to_lattice(complex_rat(re, den, im, den));
    if (!p) throw std::logic_error("value is not on the lattice");
    return *p;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eedULL);
    return gen;
}

inline GaussInt random_gauss_int(long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    return gi(dist(rng()), dist(rng()));
}

// Table 1: the 24 integer expansions for (-1+3i)/2 over the coordinate box
// lam, mu in {-2..2}
struct TableEntry {
    long re, im;
    const char* word;
};

inline const std::vector<TableEntry>& table1() {
    static const std::vector<TableEntry> t = {
        {-2, -6, "2431"}, {-3, -3, "201"},    {-4, 0, "221"},   {-5, 3, "241"},
        {-6, 6, "223011"}, {0, -6, "2433"},   {-1, -3, "203"},  {-2, 0, "223"},
        {-3, 3, "243"},   {-4, 6, "223013"},  {2, -6, "2210"},  {1, -3, "2230"},
        {-1, 3, "20"},    {-2, 6, "40"},      {4, -6, "2212"},  {3, -3, "2232"},
        {2, 0, "2"},      {1, 3, "22"},       {0, 6, "42"},     {6, -6, "2214"},
        {5, -3, "2234"},  {4, 0, "4"},        {3, 3, "24"},     {2, 6, "44"},
    };
    return t;
}

}  // namespace testutil
