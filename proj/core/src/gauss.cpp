#include "algnum/gauss.hpp"

#include <algorithm>

#include "algnum/errors.hpp"

namespace algnum {

namespace {

std::string format_complex(const std::string& re, const std::string& im, bool re_zero,
                           bool im_zero) {
    if (im_zero) return re;
    std::string i_part = (im == "1") ? "i" : (im == "-1") ? "-i" : im + "i";
    if (re_zero) return i_part;
    if (!i_part.empty() && i_part[0] != '-') return re + "+" + i_part;
    return re + i_part;
}

}  // namespace

std::string GaussInt::str() const {
    return format_complex(re.get_str(), im.get_str(), sgn(re) == 0, sgn(im) == 0);
}

std::string GaussRat::str() const {
    return format_complex(re.get_str(), im.get_str(), sgn(re) == 0, sgn(im) == 0);
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    Rat n = o.norm();
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

GaussRat pow(const GaussRat& base, long e) {
    GaussRat acc(1), b = base;
    long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    if (e < 0) return GaussRat(1) / acc;
    return acc;
}

bool divides(const GaussInt& d, const GaussInt& x) {
    if (d.is_zero()) return x.is_zero();
    Int n = d.norm();
    GaussInt t = x * d.conj();
    return t.re % n == 0 && t.im % n == 0;
}

GaussInt div_exact(const GaussInt& x, const GaussInt& d) {
    if (d.is_zero()) throw DomainError("division by zero in Z[i]");
    Int n = d.norm();
    GaussInt t = x * d.conj();
    if (t.re % n != 0 || t.im % n != 0) throw DomainError("inexact division in Z[i]");
    return {t.re / n, t.im / n};
}

GaussInt canonical_associate(const GaussInt& x, GaussInt* unit) {
    GaussInt g = x;
    GaussInt u(1);
    // rotate by i until re > 0, im >= 0
    for (int k = 0; k < 4 && !g.is_zero(); ++k) {
        if (sgn(g.re) > 0 && sgn(g.im) >= 0) break;
        g = GaussInt(-g.im, g.re);      // g *= i
        u = GaussInt(u.im, -u.re);      // u *= -i, keeps x = u * g
    }
    if (unit) *unit = u;
    return g;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    // Euclidean algorithm with rounded division; the remainder norm at most
    // halves each step.
    while (!b.is_zero()) {
        Int n = b.norm();
        GaussInt t = a * b.conj();
        Int qr = floor_div(2 * t.re + n, 2 * n);
        Int qi = floor_div(2 * t.im + n, 2 * n);
        GaussInt q(qr, qi);
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

namespace {

// multiplicity of p in z
long divide_out(GaussInt& z, const GaussInt& p) {
    long e = 0;
    while (!z.is_zero() && divides(p, z)) {
        z = div_exact(z, p);
        ++e;
    }
    return e;
}

bool is_rational_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<Int, long>> trial_factor(Int n) {
    std::vector<std::pair<Int, long>> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            long e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// k with k^2 == -1 (mod q), for q prime, q == 1 (mod 4)
Int sqrt_minus_one_mod(const Int& q) {
    Int e = (q - 1) / 4;
    for (Int a = 2; a < q; ++a) {
        Int t;
        mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        if ((t * t) % q == q - 1) return t;
    }
    throw DomainError("no square root of -1 found (q not a 1 mod 4 prime?)");
}

// Gaussian primes above a rational prime q, as canonical associates.
std::vector<GaussInt> primes_above(const Int& q) {
    if (q == 2) return {GaussInt(1, 1)};
    if (mod_euclid(q, 4) == 3) return {GaussInt(q, Int(0))};
    Int k = sqrt_minus_one_mod(q);
    GaussInt p = gauss_gcd(GaussInt(q, Int(0)), GaussInt(k, Int(1)));
    GaussInt pc = canonical_associate(p.conj());
    if (pc < p) std::swap(p, pc);
    return {p, pc};
}

}  // namespace

bool is_gaussian_prime(const GaussInt& p) {
    if (p.is_zero() || p.is_unit()) return false;
    Int n = p.norm();
    if (is_rational_prime(n)) return true;
    GaussInt c = canonical_associate(p);
    // inert rational prime q == 3 (mod 4)
    return sgn(c.im) == 0 && mod_euclid(c.re, 4) == 3 && is_rational_prime(c.re);
}

GaussFactorization factor(const GaussInt& x) {
    if (x.is_zero()) throw DomainError("cannot factor 0");
    GaussFactorization f;
    GaussInt rest = x;
    for (const auto& [q, e] : trial_factor(x.norm())) {
        (void)e;
        for (const GaussInt& p : primes_above(q)) {
            long k = divide_out(rest, p);
            if (k > 0) f.factors.push_back({p, k});
        }
    }
    if (!rest.is_unit()) throw DomainError("factorization left a non-unit remainder");
    f.unit = rest;
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

GaussFactorization factor(const GaussRat& x) {
    if (x.is_zero()) throw DomainError("cannot factor 0");
    Int d;
    mpz_lcm(d.get_mpz_t(), x.re.get_den_mpz_t(), x.im.get_den_mpz_t());
    GaussInt num(Int(x.re.get_num() * (d / x.re.get_den())),
                 Int(x.im.get_num() * (d / x.im.get_den())));
    GaussFactorization fn = factor(num);
    if (d == 1) return fn;
    GaussFactorization fd = factor(GaussInt(d, Int(0)));

    GaussFactorization f;
    f.unit = fn.unit * fd.unit.conj();  // conj inverts a unit
    f.factors = fn.factors;
    for (const auto& pp : fd.factors) {
        auto it = std::find_if(f.factors.begin(), f.factors.end(),
                               [&](const PrimePower& q) { return q.prime == pp.prime; });
        if (it == f.factors.end()) {
            f.factors.push_back({pp.prime, -pp.exponent});
        } else {
            it->exponent -= pp.exponent;
        }
    }
    std::erase_if(f.factors, [](const PrimePower& p) { return p.exponent == 0; });
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

GaussRat GaussFactorization::value() const {
    GaussRat v(Rat(unit.re), Rat(unit.im));
    for (const auto& [p, e] : factors) {
        v = v * pow(GaussRat(p), e);
    }
    return v;
}

Valuation valuation(const GaussInt& x, const GaussInt& p) {
    if (!is_gaussian_prime(p)) throw DomainError("valuation requires a Gaussian prime");
    if (x.is_zero()) return Valuation::inf();
    GaussInt z = x;
    return Valuation::of(divide_out(z, p));
}

Valuation valuation(const GaussRat& x, const GaussInt& p) {
    if (!is_gaussian_prime(p)) throw DomainError("valuation requires a Gaussian prime");
    if (x.is_zero()) return Valuation::inf();
    Int d;
    mpz_lcm(d.get_mpz_t(), x.re.get_den_mpz_t(), x.im.get_den_mpz_t());
    GaussInt num(Int(x.re.get_num() * (d / x.re.get_den())),
                 Int(x.im.get_num() * (d / x.im.get_den())));
    GaussInt den(d, Int(0));
    GaussInt zn = num, zd = den;
    return Valuation::of(divide_out(zn, p) - divide_out(zd, p));
}

Rat p_abs(const GaussRat& x, const GaussInt& p) {
    Valuation v = valuation(x, p);
    if (v.infinite) return Rat(0);
    Rat n(p.norm());
    return pow_rat(n, -v.v);
}

std::vector<long> base_p_digits(const GaussInt& n, const GaussInt& p, int count) {
    if (!is_gaussian_prime(p)) throw DomainError("base_p_digits requires a Gaussian prime");
    Int np = p.norm();
    if (np > 1000000) throw ResourceError("digit search infeasible for N(p) > 10^6");
    std::vector<long> digits;
    GaussInt z = n;
    for (int j = 0; j < count; ++j) {
        std::optional<long> found;
        for (Int r = 0; r < np; ++r) {
            if (divides(p, z - GaussInt(r, Int(0)))) {
                if (found) {
                    throw DomainError("residue system {0..N(p)-1} is not canonical for " +
                                      p.str());
                }
                found = to_long(r);
            }
        }
        if (!found) {
            throw DomainError("no residue in {0..N(p)-1} for " + z.str() + " mod " + p.str());
        }
        digits.push_back(*found);
        z = div_exact(z - GaussInt(Int(*found), Int(0)), p);
    }
    return digits;
}

}  // namespace algnum
