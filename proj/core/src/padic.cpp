#include "algnum/padic.hpp"

#include "algnum/digitarith.hpp"
#include "algnum/errors.hpp"

namespace algnum {

std::vector<DenPrime> denominator_primes(const NumberSystem& ns) {
    std::vector<DenPrime> out;
    if (ns.den().is_unit()) return out;
    for (const auto& [p, e] : factor(ns.den()).factors) {
        out.push_back({p, e});
    }
    return out;
}

ConvergenceReport check_convergence(const NumberSystem& ns, const Expansion& e, long depth) {
    ConvergenceReport rep;
    rep.valid = true;
    std::vector<DenPrime> primes = denominator_primes(ns);
    for (const auto& dp : primes) {
        rep.primes.push_back({dp.prime, dp.multiplicity, {}});
    }
    if (e.empty()) return rep;

    long low = e.lsb_exponent();
    if (depth >= 0) low = std::max(low, e.msb_exponent - depth);

    // Horner accumulator: acc at step l equals N_l = alpha^{-l} S_l, and
    // nu_p(S_l) = nu_p(N_l) - l r_p since nu_p(alpha) = -r_p.
    GaussRat acc(0);
    for (long l = e.msb_exponent; l >= low; --l) {
        acc = acc * ns.alpha() + GaussRat(e.digit_at(l));
        bool on_lattice = ns.to_lattice(acc).has_value();
        std::optional<GaussInt> violated;
        for (size_t i = 0; i < primes.size(); ++i) {
            long r_p = primes[i].multiplicity;
            Valuation v_acc = valuation(acc, primes[i].prime);
            Valuation v_s = v_acc.infinite ? v_acc : Valuation::of(v_acc.v - l * r_p);
            rep.primes[i].partial_sum_valuations.emplace_back(l, v_s);
            if (!(v_s >= r_p * (1 - l))) {
                rep.valuation_violation = true;
                if (!violated) violated = primes[i].prime;
            }
        }
        if (!on_lattice && rep.valid) {
            rep.valid = false;
            GaussInt named = violated ? *violated
                                      : (primes.empty() ? GaussInt(0) : primes.front().prime);
            rep.invalid_at = {l, named};
        }
    }
    return rep;
}

Expansion expansion_of_minus_one(const NumberSystem& ns, long frac_digits) {
    return approximate_expansion(ns, ComplexInput::exact(Rat(-1)), frac_digits);
}

namespace {

// digit word "1" at exponent zero
Expansion one_digit_word() {
    Expansion e;
    e.digits = {1};
    e.msb_exponent = 0;
    e.kind = WordKind::Integer;
    return e;
}

Expansion truncate_to(const Expansion& e, long frac_digits) {
    std::vector<int> digits;
    long msb = std::max(e.empty() ? 0L : e.msb_exponent, 0L);
    for (long exp = msb; exp >= -frac_digits; --exp) digits.push_back(e.digit_at(exp));
    return Expansion::make(std::move(digits), msb, WordKind::TruncatedFractional);
}

}  // namespace

Expansion ambi_expansion(const NumberSystem& ns, const Ambinumber& a, long frac_digits) {
    DigitArith arith(ns);
    // working precision: margin for carries crossing the truncation edge
    const long margin = 12;
    const long wide = frac_digits + margin;

    // expansion of (x, 0)
    Expansion wx = a.complex_part.value().is_zero()
                       ? Expansion{{}, 0, WordKind::TruncatedFractional}
                       : stable_expansion(ns, a.complex_part, wide);

    Expansion result;
    if (a.lattice_part.is_zero()) {
        result = wx;
    } else {
        // (0, 1) = expansion of -1 with one added left of the radix point
        Expansion minus_one = stable_expansion(ns, ComplexInput::exact(Rat(-1)), wide + 8);
        Expansion zero_one = arith.add(minus_one, one_digit_word());

        auto yw = integer_expansion(ns, a.lattice_part);
        auto* y_word = std::get_if<Expansion>(&yw);
        if (!y_word) throw DomainError("lattice part has no terminating integer expansion");

        // (0, y) = y * (0, 1)
        Expansion zero_y = arith.multiply(zero_one, *y_word);
        result = wx.empty() ? zero_y : arith.add(wx, zero_y);
    }

    // cross-check at a deeper truncation: the requested digits must agree
    {
        const long wider = wide + 8;
        Expansion wx2 = a.complex_part.value().is_zero()
                            ? Expansion{{}, 0, WordKind::TruncatedFractional}
                            : stable_expansion(ns, a.complex_part, wider);
        Expansion result2;
        if (a.lattice_part.is_zero()) {
            result2 = wx2;
        } else {
            Expansion minus_one2 = stable_expansion(ns, ComplexInput::exact(Rat(-1)), wider + 8);
            Expansion zero_one2 = arith.add(minus_one2, one_digit_word());
            auto yw2 = integer_expansion(ns, a.lattice_part);
            Expansion zero_y2 = arith.multiply(zero_one2, std::get<Expansion>(yw2));
            result2 = wx2.empty() ? zero_y2 : arith.add(wx2, zero_y2);
        }
        for (long exp = std::max({result.empty() ? 0L : result.msb_exponent,
                                  result2.empty() ? 0L : result2.msb_exponent, 0L});
             exp >= -frac_digits; --exp) {
            if (result.digit_at(exp) != result2.digit_at(exp)) {
                throw PrecisionError(
                    "carries reached the requested digits; rerun with more fractional digits",
                    2 * margin);
            }
        }
    }
    return truncate_to(result, frac_digits);
}

AmbiTrend any_word_ambinumber(const NumberSystem& ns, const Expansion& e, long depth) {
    AmbiTrend trend;
    trend.complex_limit = numeric_evaluate(ns, e);
    for (const auto& dp : denominator_primes(ns)) {
        AmbiTrend::PrimeSteps steps{dp.prime, dp.multiplicity, {}};
        if (!e.empty()) {
            long low = e.lsb_exponent();
            if (depth >= 0) low = std::max(low, e.msb_exponent - depth);
            for (long l = e.msb_exponent; l >= low; --l) {
                // nu_p(S_l - S_{l+1}) = nu_p(d_l alpha^l)
                GaussRat term = GaussRat(e.digit_at(l)) * pow(ns.alpha(), l);
                steps.step_valuations.emplace_back(l, valuation(term, dp.prime));
            }
        }
        trend.primes.push_back(std::move(steps));
    }
    return trend;
}

}  // namespace algnum
