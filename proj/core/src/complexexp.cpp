#include "algnum/complexexp.hpp"

#include <cmath>

#include "algnum/errors.hpp"

namespace algnum {

ComplexInput ComplexInput::sqrt2(long bits) {
    Int scale = Int(1) << static_cast<unsigned long>(bits);
    Int p = isqrt_floor(Int(2) * scale * scale);
    return approx(make_rat(p, scale), Rat(0), bits);
}

Rat ComplexInput::error_bound() const {
    if (is_exact) return Rat(0);
    return pow_rat(Rat(2), -precision_bits);
}

namespace {

Int checked_round(const Rat& value, const Rat& err, Rounding mode, const char* coord) {
    Int fl = floor_rat(value);
    if (sgn(err) > 0) {
        Rat frac = value - Rat(fl);
        if (frac < err || Rat(1) - frac < err) {
            // distance to the decision boundary, in bits
            Rat gap = frac < err ? frac : Rat(1) - frac;
            long deficit = 4;
            Rat e = err;
            while (e > gap && deficit < 4096) {
                e /= 2;
                deficit += 1;
            }
            throw PrecisionError(std::string("floor of the ") + coord +
                                     " coordinate is ambiguous at the declared precision",
                                 deficit);
        }
    }
    if (mode == Rounding::Ceil) {
        if (value != Rat(fl)) fl += 1;
    }
    return fl;
}

}  // namespace

LatticePoint lambda_map(const NumberSystem& ns, const ComplexInput& x, Rounding re_mode,
                        Rounding im_mode) {
    Rat err = x.error_bound();
    if (ns.degree() == 1) {
        if (sgn(x.im) != 0) {
            throw DomainError("real rational bases expand real inputs only");
        }
        Rat s = x.re / Rat(ns.a2());
        Rat es = err / Rat(ns.a2());
        return LatticePoint(checked_round(s, es, re_mode, "real"), Int(0));
    }
    const Rat& br = ns.basis2().re;
    const Rat& bi = ns.basis2().im;
    Rat abs_bi = sgn(bi) < 0 ? Rat(-bi) : bi;
    Rat abs_br = sgn(br) < 0 ? Rat(-br) : br;
    Rat t = x.im / bi;
    Rat et = err / abs_bi;
    Rat s = (x.re - t * br) / Rat(ns.a2());
    Rat es = (err + et * abs_br) / Rat(ns.a2());
    Int mu = checked_round(t, et, im_mode, "imaginary");
    Int lam = checked_round(s, es, re_mode, "real");
    return LatticePoint(std::move(lam), std::move(mu));
}

Expansion approximate_expansion(const NumberSystem& ns, const ComplexInput& x, long n,
                                Rounding re_mode, Rounding im_mode) {
    if (n < 0) throw DomainError("approximation depth must be >= 0");
    GaussRat an = pow(ns.alpha(), n);
    GaussRat y = an * x.value();
    ComplexInput scaled{y.re, y.im, x.is_exact, 0};
    if (!x.is_exact) {
        // |alpha^n dx| <= |alpha|^n * sqrt(2) * 2^-bits, componentwise
        Rat amp = sqrt_upper_bound(pow_rat(ns.modulus_squared(), n) * Rat(2));
        Rat e = amp * x.error_bound();
        // express as a bit count again (round the bound up to a power of two)
        long bits = 0;
        Rat probe(1);
        while (probe > e && bits < 1000000) {
            probe /= 2;
            ++bits;
        }
        scaled.is_exact = false;
        scaled.precision_bits = bits > 0 ? bits - 1 : 0;
    }
    LatticePoint N = lambda_map(ns, scaled, re_mode, im_mode);
    auto r = integer_expansion(ns, N);
    auto* e = std::get_if<Expansion>(&r);
    if (!e) {
        throw DomainError("base lacks the finiteness property: approximation cannot expand " +
                          ns.lattice_value(N).str());
    }
    Expansion out = *e;
    out.kind = n == 0 ? WordKind::Integer : WordKind::TruncatedFractional;
    out.msb_exponent = out.empty() ? -1 : static_cast<long>(out.digits.size()) - 1 - n;
    return out;
}

namespace {

bool agree_down_to(const Expansion& a, const Expansion& b, long low) {
    long hi = std::max(a.empty() ? low : a.msb_exponent, b.empty() ? low : b.msb_exponent);
    for (long e = hi; e >= low; --e) {
        if (a.digit_at(e) != b.digit_at(e)) return false;
    }
    return true;
}

}  // namespace

Expansion stable_expansion(const NumberSystem& ns, const ComplexInput& x, long frac_digits) {
    const long step = 4;
    for (long n = frac_digits + step; n <= frac_digits + 15 * step; n += step) {
        Expansion a = approximate_expansion(ns, x, n);
        Expansion b = approximate_expansion(ns, x, n + step);
        if (agree_down_to(a, b, -frac_digits)) {
            std::vector<int> digits;
            long msb = std::max(b.empty() ? 0 : b.msb_exponent, 0L);
            for (long e = msb; e >= -frac_digits; --e) digits.push_back(b.digit_at(e));
            return Expansion::make(std::move(digits), msb, WordKind::TruncatedFractional);
        }
    }
    throw ResourceError("approximation did not stabilize at the requested depth");
}

NumericValue numeric_evaluate(const NumberSystem& ns, const Expansion& e,
                              long precision_bits) {
    GaussRat v = evaluate(ns, e);
    long prec = std::max(precision_bits, 64L);
    mpf_class re(0, static_cast<unsigned long>(prec)), im(0, static_cast<unsigned long>(prec));
    mpf_set_q(re.get_mpf_t(), v.re.get_mpq_t());
    mpf_set_q(im.get_mpf_t(), v.im.get_mpq_t());
    NumericValue out;
    out.re = re.get_d();
    out.im = im.get_d();
    double rounding = (std::fabs(out.re) + std::fabs(out.im) + 1.0) * 1e-15;
    double tail = 0;
    if (e.kind == WordKind::TruncatedFractional) {
        double r = std::sqrt(ns.modulus_squared().get_d());
        long low = e.empty() ? 0 : e.lsb_exponent();
        tail = static_cast<double>(ns.digit_max()) * std::pow(r, static_cast<double>(low)) /
               (r - 1.0) * 1.0000001;
    }
    out.error_bound = rounding + tail;
    return out;
}

}  // namespace algnum
