#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "algnum/numsys.hpp"

namespace algnum {

using SrsPoint = std::pair<long, long>;

// Contracting parameter r = (a2/a0, a1/a0) of the shift radix system
// conjugate to backward division.
struct SrsParam {
    Rat r0, r1;

    static SrsParam from(const NumberSystem& ns);
    // both roots of X^2 + r1 X + r0 inside the unit disk
    bool contracting() const;
};

// (z0, z1) -> (z1, -floor(r0 z0 + r1 z1)), floor taken on exact rationals
SrsPoint srs_step(const SrsParam& p, const SrsPoint& z);

// Closure of {+-e1, +-e2} under z -> tau(z) and z -> -tau(-z).
std::set<SrsPoint> build_witness_set(const SrsParam& p, int cap = 64);

// sgn(a0) * (z0 * a2 + z1 * (a2 alpha + a1)) in lattice coordinates
LatticePoint iota(const NumberSystem& ns, const SrsPoint& z);

struct WitnessOrbit {
    SrsPoint witness;
    bool reaches_zero;
    std::vector<SrsPoint> cycle;  // nonempty iff !reaches_zero
};

struct FinitenessDecision {
    bool finite = false;
    std::vector<SrsPoint> witnesses;
    std::vector<WitnessOrbit> orbits;
    // every failing witness, with its cycle mapped to the lattice along with
    // the digit backward division emits at each cycle point
    struct Failure {
        SrsPoint witness;
        std::vector<LatticePoint> cycle;
        std::vector<int> cycle_digits;
    };
    std::vector<Failure> failures;
};

// Decide the finiteness property of (alpha, D). For real rational bases the
// verdict refers to the canonical domain of the modified division algorithm
// (non-negative lattice points when alpha > 0, all lattice points when
// alpha < 0), where termination is a theorem.
FinitenessDecision decide_finiteness(const NumberSystem& ns);

}  // namespace algnum
