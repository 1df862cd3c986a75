#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algnum/scalar.hpp"

namespace algnum {

// Element of Z[i]. Immutable value type; all operations are pure.
struct GaussInt {
    Int re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussInt(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    Int norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }
    bool is_unit() const { return norm() == 1; }

    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
    bool operator<(const GaussInt& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    std::string str() const;
};

// Element of Q(i).
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}
    explicit GaussRat(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Rat norm() const { return re * re + im * im; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    std::string str() const;
};

GaussRat pow(const GaussRat& base, long e);

// true iff d divides x in Z[i]
bool divides(const GaussInt& d, const GaussInt& x);
// x / d, requires exact divisibility
GaussInt div_exact(const GaussInt& x, const GaussInt& d);

// The canonical associate: re > 0 and im >= 0 (identity on zero).
// That quadrant is a fundamental domain for multiplication by i, so the
// choice is unique. `unit` receives u with x = u * canonical.
GaussInt canonical_associate(const GaussInt& x, GaussInt* unit = nullptr);

// gcd up to units, returned as canonical associate; (0,0) is a domain error.
GaussInt gauss_gcd(GaussInt a, GaussInt b);

bool is_gaussian_prime(const GaussInt& p);

struct PrimePower {
    GaussInt prime;  // canonical associate
    long exponent;   // may be negative for rational inputs
};

struct GaussFactorization {
    GaussInt unit;  // one of 1, -1, i, -i
    std::vector<PrimePower> factors;

    GaussRat value() const;
};

GaussFactorization factor(const GaussInt& x);
GaussFactorization factor(const GaussRat& x);

// Valuation value in Z together with the nu(0) = infinity case.
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(long x) { return {false, x}; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator>=(long x) const { return infinite || v >= x; }
    bool operator<(long x) const { return !(*this >= x); }
};

// nu_p(x); p must be a Gaussian prime.
Valuation valuation(const GaussRat& x, const GaussInt& p);
Valuation valuation(const GaussInt& x, const GaussInt& p);

// |x|_p = N(p)^(-nu_p(x)) as an exact rational, 0 for x = 0.
Rat p_abs(const GaussRat& x, const GaussInt& p);

// Digits c_0..c_{count-1} in {0,...,N(p)-1} with n == sum c_j p^j (mod p^count).
// The canonical residue system exists only for split and ramified primes;
// otherwise (or when a residue is not unique) this is a domain error.
std::vector<long> base_p_digits(const GaussInt& n, const GaussInt& p, int count);

}  // namespace algnum
