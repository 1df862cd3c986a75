#include "algnum/finiteness.hpp"

#include <map>

#include "algnum/errors.hpp"

namespace algnum {

SrsParam SrsParam::from(const NumberSystem& ns) {
    SrsParam p{make_rat(ns.a2(), ns.a0()), make_rat(ns.a1(), ns.a0())};
    if (!p.contracting()) throw DomainError("SRS parameter is not contracting");
    return p;
}

bool SrsParam::contracting() const {
    // Schur-Cohn for X^2 + r1 X + r0: |r0| < 1 and |r1| < 1 + r0
    Rat abs_r0 = sgn(r0) < 0 ? Rat(-r0) : r0;
    Rat abs_r1 = sgn(r1) < 0 ? Rat(-r1) : r1;
    return abs_r0 < 1 && abs_r1 < 1 + r0;
}

SrsPoint srs_step(const SrsParam& p, const SrsPoint& z) {
    Rat t = p.r0 * Rat(z.first) + p.r1 * Rat(z.second);
    return {z.second, -to_long(floor_rat(t))};
}

std::set<SrsPoint> build_witness_set(const SrsParam& p, int cap) {
    std::set<SrsPoint> v = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int i = 0; i < cap; ++i) {
        std::set<SrsPoint> next = v;
        for (const SrsPoint& z : v) {
            next.insert(srs_step(p, z));
            SrsPoint m = srs_step(p, {-z.first, -z.second});
            next.insert({-m.first, -m.second});
        }
        if (next == v) return v;
        v.swap(next);
        if (v.size() > 1000000) throw ResourceError("witness set exceeded 10^6 points");
    }
    throw ResourceError("witness closure did not stabilize within the iteration cap");
}

LatticePoint iota(const NumberSystem& ns, const SrsPoint& z) {
    int s = sgn(ns.a0()) < 0 ? -1 : 1;
    return LatticePoint(Int(s * z.first), Int(s * z.second));
}

namespace {

WitnessOrbit orbit_of(const SrsParam& p, const SrsPoint& start) {
    WitnessOrbit o;
    o.witness = start;
    std::map<SrsPoint, size_t> seen;
    std::vector<SrsPoint> path;
    SrsPoint cur = start;
    while (cur != SrsPoint{0, 0}) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            o.reaches_zero = false;
            o.cycle.assign(path.begin() + static_cast<long>(it->second), path.end());
            return o;
        }
        seen.emplace(cur, path.size());
        path.push_back(cur);
        cur = srs_step(p, cur);
        if (path.size() > 1000000) throw ResourceError("SRS orbit exceeded 10^6 states");
    }
    o.reaches_zero = true;
    return o;
}

}  // namespace

FinitenessDecision decide_finiteness(const NumberSystem& ns) {
    FinitenessDecision dec;
    if (ns.degree() == 1) {
        // Termination of the modified division algorithm on the canonical
        // domain holds for every admissible rational base: positive bases
        // strictly decrease non-negative points, negative bases decrease
        // |N_j| after at most two steps. Witness coordinates here are plain
        // lambda values on the one-dimensional lattice.
        dec.finite = true;
        bool negative_base = sgn(ns.a0()) > 0;  // a0 = -numerator
        dec.witnesses = negative_base ? std::vector<SrsPoint>{{1, 0}, {-1, 0}}
                                      : std::vector<SrsPoint>{{1, 0}};
        for (const SrsPoint& z : dec.witnesses) {
            auto r = integer_expansion(ns, LatticePoint(Int(z.first), Int(0)));
            dec.orbits.push_back({z, std::holds_alternative<Expansion>(r), {}});
        }
        return dec;
    }

    SrsParam p = SrsParam::from(ns);
    std::set<SrsPoint> witnesses = build_witness_set(p);
    dec.witnesses.assign(witnesses.begin(), witnesses.end());
    dec.finite = true;
    for (const SrsPoint& z : dec.witnesses) {
        WitnessOrbit o = orbit_of(p, z);
        if (!o.reaches_zero) {
            dec.finite = false;
            FinitenessDecision::Failure f;
            f.witness = z;
            for (const SrsPoint& c : o.cycle) {
                LatticePoint lp = iota(ns, c);
                f.cycle.push_back(lp);
                f.cycle_digits.push_back(ns.backward_divide(lp).first);
            }
            dec.failures.push_back(std::move(f));
        }
        dec.orbits.push_back(std::move(o));
    }
    return dec;
}

}  // namespace algnum
