#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace algnum {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// floor(a / b), b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    if (sgn(b) > 0) {
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
        Int na = -a, nb = -b;
        mpz_fdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    }
    return q;
}

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Euclidean remainder in [0, m), m > 0
inline Int mod_euclid(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// rational u with u >= sqrt(x), x >= 0
inline Rat sqrt_upper_bound(const Rat& x) {
    Int p = x.get_num(), q = x.get_den();
    return make_rat(isqrt_floor(p * q) + 1, q);
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return n.get_si();
}

inline Rat pow_rat(const Rat& base, long e) {
    Rat acc = 1, b = base;
    long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rat(1) / acc;
    return acc;
}

// Exact value a + b*sqrt(m) with m > 0 rational; supports the sign tests
// needed to compare expressions containing a single square root.
struct QuadSurd {
    Rat a, b, m;

    QuadSurd(Rat a_, Rat b_, Rat m_) : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)) {}
    static QuadSurd rational(Rat r, Rat m_) { return {std::move(r), 0, std::move(m_)}; }
    static QuadSurd root(Rat m_) { return {0, 1, m_}; }

    QuadSurd operator+(const QuadSurd& o) const { return {a + o.a, b + o.b, m}; }
    QuadSurd operator-(const QuadSurd& o) const { return {a - o.a, b - o.b, m}; }
    QuadSurd operator*(const QuadSurd& o) const {
        return {a * o.a + b * o.b * m, a * o.b + b * o.a, m};
    }
    QuadSurd operator*(const Rat& r) const { return {a * r, b * r, m}; }
    QuadSurd operator-() const { return {-a, -b, m}; }

    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 m
        Rat d = a * a - b * b * m;
        int sd = sgn(d);
        if (sd == 0) return 0;
        return sd > 0 ? sa : sb;
    }

    bool operator<(const QuadSurd& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadSurd& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadSurd& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadSurd& o) const { return (*this - o).sign() >= 0; }

    double to_double() const {
        return a.get_d() + b.get_d() * std::sqrt(m.get_d());
    }
};

}  // namespace algnum
