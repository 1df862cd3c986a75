#pragma once

#include <optional>
#include <vector>

#include "algnum/complexexp.hpp"
#include "algnum/gauss.hpp"
#include "algnum/numsys.hpp"

namespace algnum {

// Primes of den(alpha) with multiplicities; the completions in which a valid
// expansion must converge to zero.
struct DenPrime {
    GaussInt prime;
    long multiplicity;  // exponent r_p of p in den(alpha)
};

std::vector<DenPrime> denominator_primes(const NumberSystem& ns);

struct PrimeTrace {
    GaussInt prime;
    long multiplicity;
    // nu_p(S_l) for l from the word's top exponent downward, paired with l;
    // a valid word keeps nu_p(S_l) >= r_p (1 - l)
    std::vector<std::pair<long, Valuation>> partial_sum_valuations;
};

struct ConvergenceReport {
    bool valid = false;
    // outermost l at which the lattice criterion fails, with the denominator
    // prime whose valuation bound is (or eventually becomes) violated
    std::optional<std::pair<long, GaussInt>> invalid_at;
    std::vector<PrimeTrace> primes;
    // verdict of the valuation-growth route alone: some nu_p(S_l) dips below
    // r_p (1 - l) within the window. Implied by !valid on full windows; the
    // detection position may lag the lattice route by a bounded amount.
    bool valuation_violation = false;
};

// Check a word position by position: partial sums rescaled to each exponent
// must be lattice points (the defining criterion), and the denominator-prime
// valuations of the partial sums are traced alongside.
ConvergenceReport check_convergence(const NumberSystem& ns, const Expansion& e,
                                    long depth = -1);

// Expansion of -1: converges to -1 archimedeanly and to 0 in every K_p.
Expansion expansion_of_minus_one(const NumberSystem& ns, long frac_digits);

// Pair (x, y): the digit series should converge to x in C and to y,
// diagonally embedded, in each denominator completion. y is restricted to
// the lattice.
struct Ambinumber {
    ComplexInput complex_part;
    LatticePoint lattice_part;
};

Expansion ambi_expansion(const NumberSystem& ns, const Ambinumber& a, long frac_digits);

// Evidence that an arbitrary digit string is the expansion of some pair:
// archimedean limit of the truncation plus the per-prime Cauchy exponents
// nu_p(S_l - S_{l+1}) = nu_p(d_l) - l r_p.
struct AmbiTrend {
    NumericValue complex_limit;
    struct PrimeSteps {
        GaussInt prime;
        long multiplicity;
        std::vector<std::pair<long, Valuation>> step_valuations;
    };
    std::vector<PrimeSteps> primes;
};

AmbiTrend any_word_ambinumber(const NumberSystem& ns, const Expansion& e, long depth = -1);

}  // namespace algnum
