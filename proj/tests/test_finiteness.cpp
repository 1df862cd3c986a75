#include <set>

#include "algnum/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace algnum;
using namespace testutil;

TEST_CASE("srs parameter and steps") {
    NumberSystem ns = base_main();
    SrsParam p = SrsParam::from(ns);
    CHECK(p.r0 == make_rat(Int(2), Int(5)));
    CHECK(p.r1 == make_rat(Int(2), Int(5)));
    CHECK(p.contracting());

    CHECK(srs_step(p, {0, 1}) == SrsPoint{1, 0});
    CHECK(srs_step(p, {0, 0}) == SrsPoint{0, 0});
    CHECK(srs_step(p, {0, -1}) == SrsPoint{-1, 1});
}

TEST_CASE("witness set of the worked example") {
    NumberSystem ns = base_main();
    SrsParam p = SrsParam::from(ns);
    std::set<SrsPoint> v = build_witness_set(p);
    std::set<SrsPoint> expected = {{0, 1}, {-1, 1}, {0, 0}, {-1, 0}, {0, -1}, {1, 0}, {1, -1}};
    CHECK(v == expected);

    // seed vectors always present
    for (const NumberSystem& base : {base_main(), base_26(), base_nonfinite()}) {
        std::set<SrsPoint> w = build_witness_set(SrsParam::from(base));
        for (SrsPoint s : {SrsPoint{1, 0}, SrsPoint{-1, 0}, SrsPoint{0, 1}, SrsPoint{0, -1}}) {
            CHECK(w.count(s) == 1);
        }
        // closure under tau and -tau(-z)
        SrsParam bp = SrsParam::from(base);
        for (const SrsPoint& z : w) {
            CHECK(w.count(srs_step(bp, z)) == 1);
            SrsPoint m = srs_step(bp, {-z.first, -z.second});
            CHECK(w.count({-m.first, -m.second}) == 1);
        }
    }
}

TEST_CASE("iota maps witnesses onto the lattice") {
    NumberSystem ns = base_main();
    CHECK(ns.lattice_value(iota(ns, {0, 1})) == complex_rat(1, 1, 3, 1));
    CHECK(ns.lattice_value(iota(ns, {0, 0})).is_zero());
    CHECK(ns.lattice_value(iota(ns, {-1, 1})) == complex_rat(-1, 1, 3, 1));

    // the mapped witness set of the worked example
    SrsParam p = SrsParam::from(ns);
    std::set<std::pair<long, long>> values;
    for (const SrsPoint& z : build_witness_set(p)) {
        GaussRat v = ns.lattice_value(iota(ns, z));
        values.insert({static_cast<long>(v.re.get_d()), static_cast<long>(v.im.get_d())});
    }
    std::set<std::pair<long, long>> expected = {{1, 3},  {-1, 3}, {0, 0}, {-2, 0},
                                                {-1, -3}, {2, 0},  {1, -3}};
    CHECK(values == expected);
}

TEST_CASE("conjugacy of backward division and the SRS step") {
    for (const NumberSystem& ns : {base_main(), base_26(), base_nonfinite()}) {
        SrsParam p = SrsParam::from(ns);
        for (long z0 = -50; z0 <= 50; ++z0) {
            for (long z1 = -50; z1 <= 50; ++z1) {
                LatticePoint mapped = iota(ns, {z0, z1});
                auto [d, next] = ns.backward_divide(mapped);
                CHECK(next == iota(ns, srs_step(p, {z0, z1})));
            }
        }
    }
}

TEST_CASE("finiteness verdicts") {
    FinitenessDecision main_dec = decide_finiteness(base_main());
    CHECK(main_dec.finite);
    CHECK(main_dec.failures.empty());

    FinitenessDecision f26 = decide_finiteness(base_26());
    CHECK(f26.finite);

    FinitenessDecision nf = decide_finiteness(base_nonfinite());
    CHECK(!nf.finite);
    REQUIRE(!nf.failures.empty());
    NumberSystem ns = base_nonfinite();
    bool cycle_has_6i = false;
    for (const auto& f : nf.failures) {
        for (size_t i = 0; i < f.cycle.size(); ++i) {
            if (ns.lattice_value(f.cycle[i]) == complex_rat(0, 1, 6, 1)) {
                cycle_has_6i = true;
                CHECK(f.cycle_digits[i] == 4);
            }
        }
    }
    CHECK(cycle_has_6i);

    FinitenessDecision rat = decide_finiteness(base_rational());
    CHECK(rat.finite);
}

TEST_CASE("witness soundness at desk scale") {
    for (const NumberSystem& ns : {base_main(), base_26()}) {
        REQUIRE(decide_finiteness(ns).finite);
        for (long l = -30; l <= 30; ++l) {
            for (long m = -30; m <= 30; ++m) {
                auto r = integer_expansion(ns, lp(l, m));
                CHECK(std::holds_alternative<Expansion>(r));
            }
        }
    }
}
