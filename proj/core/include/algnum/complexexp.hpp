#pragma once

#include "algnum/numsys.hpp"

namespace algnum {

// A complex number handed in as exact rational coordinates, together with a
// componentwise error bound 2^-precision_bits against the intended value.
// All downstream arithmetic is exact; the only inexactness is the input's.
struct ComplexInput {
    Rat re, im;
    bool is_exact = true;
    long precision_bits = 0;

    static ComplexInput exact(Rat re, Rat im = Rat(0)) {
        return {std::move(re), std::move(im), true, 0};
    }
    static ComplexInput approx(Rat re, Rat im, long precision_bits) {
        return {std::move(re), std::move(im), false, precision_bits};
    }
    // floor(sqrt(2) * 2^bits) / 2^bits, off by at most 2^-bits
    static ComplexInput sqrt2(long bits);

    GaussRat value() const { return {re, im}; }
    // componentwise error bound as an exact rational (0 when exact)
    Rat error_bound() const;
};

enum class Rounding { Floor, Ceil };

// Lattice rounding x -> f(floor(f^-1(x))) with f: 1 -> a2, i -> a2 alpha + a1.
// When the input carries an error bound and a coordinate of f^-1(x) is too
// close to an integer to decide the floor, a PrecisionError names the bits
// needed. The rounding modes exist to confirm that the limit word does not
// depend on them.
LatticePoint lambda_map(const NumberSystem& ns, const ComplexInput& x,
                        Rounding re_mode = Rounding::Floor,
                        Rounding im_mode = Rounding::Floor);

// One step of the approximation scheme: the integer expansion of
// lambda(alpha^n x) with the radix point shifted n digits in from the right.
Expansion approximate_expansion(const NumberSystem& ns, const ComplexInput& x, long n,
                                Rounding re_mode = Rounding::Floor,
                                Rounding im_mode = Rounding::Floor);

// The approximation run at increasing n until the first frac_digits
// fractional digits stop changing; returns that stable truncation.
Expansion stable_expansion(const NumberSystem& ns, const ComplexInput& x, long frac_digits);

struct NumericValue {
    double re = 0, im = 0;
    // bound on |returned - exact word value| plus, for truncated words, the
    // geometric bound on every possible continuation
    double error_bound = 0;
};

NumericValue numeric_evaluate(const NumberSystem& ns, const Expansion& e,
                              long precision_bits = 128);

}  // namespace algnum
