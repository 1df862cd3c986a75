#include <cmath>

#include "algnum/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace algnum;
using namespace testutil;

namespace {

struct Sqrt2Row {
    long re, im;          // lambda(alpha^n sqrt2)
    const char* word;     // its integer expansion
    const char* approx;   // the word with the radix point shifted n in
};

// the fifteen approximation rows for sqrt(2) in base (-1+3i)/2
const std::vector<Sqrt2Row>& sqrt2_rows() {
    static const std::vector<Sqrt2Row> rows = {
        {-2, 0, "223", "22.3"},
        {-5, -3, "424", "4.24"},
        {2, -6, "2210", "2.210"},
        {0, 6, "42", "0.0042"},
        {-15, -3, "201114", "2.01114"},
        {7, -21, "2234110", "2.234110"},
        {25, 21, "22341322", "2.2341322"},
        {-49, 27, "223413440", "2.23413440"},
        {-23, -87, "2234112343", "2.234112343"},
        {137, 9, "22341121400", "2.2341121400"},
        {-85, 201, "223411214222", "2.23411214222"},
        {-260, -228, "2234112142444", "2.234112142444"},
        {470, -276, "22341121422413", "2.2341121422413"},
        {177, 843, "223411214222103", "2.23411214222103"},
        {-1358, -156, "2234112142444000", "2.234112142444000"},
    };
    return rows;
}

const char* kSqrt2At50 =
    "2.23411214244400202412000344114424444410323402111430";

}  // namespace

TEST_CASE("sqrt2 helper approximates to declared precision") {
    ComplexInput x = ComplexInput::sqrt2(128);
    Rat err = x.re * x.re - 2;
    Rat abs_err = sgn(err) < 0 ? Rat(-err) : err;
    // |r^2 - 2| = |r - sqrt2| (r + sqrt2) <= 2^-128 * 3
    CHECK(abs_err <= pow_rat(Rat(2), -128) * 3);
    CHECK(sgn(x.im) == 0);
}

TEST_CASE("lattice rounding of the worked example") {
    NumberSystem ns = base_main();
    // lambda(x+yi) = 2 floor(x/2 - y/6) + floor(y/3) (1+3i)
    ComplexInput sqrt2 = ComplexInput::sqrt2(80);
    GaussRat asqrt2 = ns.alpha() * sqrt2.value();
    LatticePoint l1 = lambda_map(ns, ComplexInput::approx(asqrt2.re, asqrt2.im, 70));
    CHECK(ns.lattice_value(l1) == complex_rat(-2, 1, 0, 1));

    CHECK(lambda_map(ns, ComplexInput::exact(Rat(0))) == lp(0, 0));

    // exact lattice points are fixed
    for (long l = -4; l <= 4; ++l) {
        for (long m = -4; m <= 4; ++m) {
            GaussRat v = ns.lattice_value(lp(l, m));
            CHECK(lambda_map(ns, ComplexInput::exact(v.re, v.im)) == lp(l, m));
        }
    }
}

TEST_CASE("table of sqrt2 approximations") {
    NumberSystem ns = base_main();
    for (size_t i = 0; i < sqrt2_rows().size(); ++i) {
        long n = static_cast<long>(i) + 1;
        ComplexInput x = ComplexInput::sqrt2(64 + 4 * n);
        GaussRat scaled = pow(ns.alpha(), n) * x.value();

        const Sqrt2Row& row = sqrt2_rows()[i];
        CAPTURE(n);
        Expansion w = approximate_expansion(ns, x, n);
        CHECK(w.str() == row.approx);

        // the lambda point and its integer word
        Expansion integer_part = Expansion::integer_word(
            std::vector<int>(w.digits.begin(), w.digits.end()));
        CHECK(integer_part.str() == row.word);
        CHECK(evaluate(ns, integer_part) == complex_rat(row.re, 1, row.im, 1));
    }
}

TEST_CASE("the fifty-digit approximation and its numeric value") {
    NumberSystem ns = base_main();
    ComplexInput x = ComplexInput::sqrt2(64 + 4 * 50);
    Expansion w = approximate_expansion(ns, x, 50);
    CHECK(w.str() == kSqrt2At50);

    NumericValue v = numeric_evaluate(ns, w);
    CHECK(std::fabs(v.re - 1.414213562226875) <= 1.5e-12);
    CHECK(std::fabs(v.im - 4.779186057674623e-11) <= 1e-16);
    // the tail bound covers the distance to sqrt(2)
    CHECK(std::fabs(v.re - std::sqrt(2.0)) <= v.error_bound);
}

TEST_CASE("prefix validity of the approximations") {
    NumberSystem ns = base_main();
    for (long n = 1; n <= 15; ++n) {
        ComplexInput x = ComplexInput::sqrt2(64 + 4 * n);
        Expansion w = approximate_expansion(ns, x, n);
        CHECK(validate_expansion(ns, w));
    }
}

TEST_CASE("consecutive approximations stabilize") {
    NumberSystem ns = base_main();
    std::vector<Expansion> words;
    for (long n = 1; n <= 15; ++n) {
        words.push_back(approximate_expansion(ns, ComplexInput::sqrt2(64 + 4 * n), n));
    }
    auto common_prefix = [](const Expansion& a, const Expansion& b) {
        long hi = std::max(a.empty() ? 0L : a.msb_exponent, b.empty() ? 0L : b.msb_exponent);
        long lo = std::min(a.empty() ? 0L : a.lsb_exponent(), b.empty() ? 0L : b.lsb_exponent());
        long count = 0;
        for (long e = hi; e >= lo; --e) {
            if (a.digit_at(e) != b.digit_at(e)) break;
            ++count;
        }
        return count;
    };
    // the observed prefix lag on this data is 4
    for (size_t i = 4; i + 1 < words.size(); ++i) {
        long n = static_cast<long>(i) + 1;
        CHECK(common_prefix(words[i], words[i + 1]) >= n - 4);
    }
}

TEST_CASE("rounding mode does not change the limit word") {
    NumberSystem ns = base_main();
    ComplexInput x = ComplexInput::sqrt2(64 + 4 * 26);
    // first 12 fractional digits, stable across all four rounding choices
    std::string reference;
    for (Rounding re_mode : {Rounding::Floor, Rounding::Ceil}) {
        for (Rounding im_mode : {Rounding::Floor, Rounding::Ceil}) {
            Expansion w = approximate_expansion(ns, x, 26, re_mode, im_mode);
            std::string head;
            for (long e = w.msb_exponent; e >= -12; --e) head += char('0' + w.digit_at(e));
            if (reference.empty()) {
                reference = head;
            } else {
                CHECK(head == reference);
            }
        }
    }
    CHECK(reference.substr(0, 13) == "2234112142444");
}

TEST_CASE("floor ambiguity raises a precision error") {
    NumberSystem ns = base_main();
    // 1/2 sits exactly on a cell boundary of f^-1; with any declared error it
    // cannot be floored
    CHECK_THROWS_AS(
        lambda_map(ns, ComplexInput::approx(make_rat(Int(1), Int(1)), Rat(0), 40)),
        PrecisionError);
    // the same value declared exact is fine
    CHECK(lambda_map(ns, ComplexInput::exact(Rat(1))) == lp(0, 0));
    // far from a boundary, modest precision suffices
    CHECK(lambda_map(ns, ComplexInput::approx(make_rat(Int(17), Int(16)),
                                              make_rat(Int(3), Int(2)), 40)) == lp(0, 0));
}

TEST_CASE("perturbed inputs floor identically or fail loudly") {
    NumberSystem ns = base_main();
    std::uniform_int_distribution<long> dist(-4000, 4000);
    int decided = 0;
    for (int i = 0; i < 300; ++i) {
        Rat re = make_rat(Int(dist(rng())), Int(512));
        Rat im = make_rat(Int(dist(rng())), Int(512));
        long bits = 20;
        Rat eps = pow_rat(Rat(2), -(bits + 2));
        try {
            LatticePoint base = lambda_map(ns, ComplexInput::approx(re, im, bits));
            ++decided;
            for (long sr : {-1L, 1L}) {
                for (long si : {-1L, 1L}) {
                    LatticePoint moved = lambda_map(
                        ns, ComplexInput::approx(re + Rat(sr) * eps, im + Rat(si) * eps, bits));
                    CHECK(moved == base);
                }
            }
        } catch (const PrecisionError&) {
            // ambiguity reported rather than silently mis-floored
        }
    }
    CHECK(decided > 0);
}

TEST_CASE("numeric evaluation of plain words") {
    NumberSystem ns = base_main();
    NumericValue v = numeric_evaluate(ns, word("22"));
    CHECK(v.re == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.im == doctest::Approx(3.0).epsilon(1e-12));
    NumericValue z = numeric_evaluate(ns, word(""));
    CHECK(z.re == 0.0);
    CHECK(z.im == 0.0);
}

TEST_CASE("stable expansion truncates the limit word") {
    NumberSystem ns = base_main();
    Expansion w = stable_expansion(ns, ComplexInput::sqrt2(400), 20);
    std::string s = w.str();
    CHECK(s.substr(0, 22) == std::string(kSqrt2At50).substr(0, 22));
    CHECK(w.lsb_exponent() == -20);
}

TEST_CASE("a lattice point at depth zero yields its integer word") {
    NumberSystem ns = base_main();
    Expansion w = approximate_expansion(ns, ComplexInput::exact(Rat(1), Rat(3)), 0);
    CHECK(w.kind == WordKind::Integer);
    CHECK(w.str() == "22");
}

TEST_CASE("approximation needs the finiteness property") {
    NumberSystem ns = base_nonfinite();
    // 6i is a lattice point whose expansion never terminates
    GaussRat v = complex_rat(0, 1, 6, 1);
    CHECK_THROWS_AS(approximate_expansion(ns, ComplexInput::exact(v.re, v.im), 0), DomainError);
}
