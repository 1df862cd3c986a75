#include "algnum/numsys.hpp"

#include <map>

#include "algnum/errors.hpp"

namespace algnum {

Expansion Expansion::make(std::vector<int> digits, long msb_exponent, WordKind kind) {
    size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    if (lead > 0) {
        digits.erase(digits.begin(), digits.begin() + static_cast<long>(lead));
        msb_exponent -= static_cast<long>(lead);
    }
    Expansion e;
    e.digits = std::move(digits);
    e.msb_exponent = e.digits.empty() ? 0 : msb_exponent;
    e.kind = kind;
    return e;
}

Expansion Expansion::integer_word(std::vector<int> digits) {
    long msb = static_cast<long>(digits.size()) - 1;
    return make(std::move(digits), msb, WordKind::Integer);
}

Expansion Expansion::parse(const std::string& s, bool wide) {
    auto radix = s.find('.');
    std::string head = s.substr(0, radix);
    std::string tail = radix == std::string::npos ? "" : s.substr(radix + 1);
    auto digits_of = [&](const std::string& part) {
        std::vector<int> out;
        if (part.empty()) return out;
        if (wide) {
            size_t pos = 0;
            while (pos <= part.size()) {
                size_t comma = part.find(',', pos);
                std::string tok = part.substr(pos, comma - pos);
                if (tok.empty()) throw DomainError("empty digit token in word");
                out.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            for (char c : part) {
                if (c < '0' || c > '9') throw DomainError("invalid digit character in word");
                out.push_back(c - '0');
            }
        }
        return out;
    };
    std::vector<int> digits = digits_of(head);
    long msb = static_cast<long>(digits.size()) - 1;
    std::vector<int> frac = digits_of(tail);
    digits.insert(digits.end(), frac.begin(), frac.end());
    return make(std::move(digits), msb,
                radix == std::string::npos ? WordKind::Integer : WordKind::TruncatedFractional);
}

std::string Expansion::str(bool wide) const {
    auto emit = [&](std::string& out, int d, bool first) {
        if (wide && !first) out += ',';
        out += std::to_string(d);
    };
    std::string out;
    if (kind == WordKind::Integer) {
        if (digits.empty()) return "0";
        for (size_t i = 0; i < digits.size(); ++i) emit(out, digits[i], i == 0);
        return out;
    }
    long low = digits.empty() ? -1 : lsb_exponent();
    long high = std::max(msb_exponent, 0L);
    if (digits.empty()) high = 0;
    bool first = true;
    for (long e = high; e >= std::min(low, -1L); --e) {
        if (e == -1) {
            out += '.';
            first = true;
        }
        emit(out, digit_at(e), first);
        first = false;
    }
    return out;
}

NumberSystem NumberSystem::make(const GaussRat& alpha) {
    NumberSystem ns;
    ns.alpha_ = alpha;

    Int w;
    mpz_lcm(w.get_mpz_t(), alpha.re.get_den_mpz_t(), alpha.im.get_den_mpz_t());
    Int u = alpha.re.get_num() * (w / alpha.re.get_den());
    Int v = alpha.im.get_num() * (w / alpha.im.get_den());
    Int g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    u /= g;
    v /= g;
    w /= g;

    ns.mod2_ = make_rat(u * u + v * v, w * w);
    if (ns.mod2_ <= 1) throw DomainError("non-expanding base: |alpha| <= 1");

    if (sgn(v) == 0) {
        // real rational base a/b: linear polynomial bX - a lifted into the
        // same container, one-dimensional lattice b*Z
        ns.degree_ = 1;
        ns.a2_ = w;
        ns.a1_ = 0;
        ns.a0_ = -u;
        ns.basis1_ = GaussRat(Rat(w), Rat(0));
        ns.basis2_ = GaussRat(0);
    } else {
        ns.degree_ = 2;
        Int A2 = w * w, A1 = -2 * u * w, A0 = u * u + v * v;
        Int gg;
        mpz_gcd(gg.get_mpz_t(), A2.get_mpz_t(), A1.get_mpz_t());
        mpz_gcd(gg.get_mpz_t(), gg.get_mpz_t(), A0.get_mpz_t());
        ns.a2_ = A2 / gg;
        ns.a1_ = A1 / gg;
        ns.a0_ = A0 / gg;
        ns.basis1_ = GaussRat(Rat(ns.a2_), Rat(0));
        ns.basis2_ = GaussRat(Rat(ns.a2_) * alpha.re + Rat(ns.a1_), Rat(ns.a2_) * alpha.im);
        // a2 alpha^2 + a1 alpha + a0 = 0
        GaussRat check = GaussRat(Rat(ns.a2_), Rat(0)) * alpha * alpha +
                         GaussRat(Rat(ns.a1_), Rat(0)) * alpha + GaussRat(Rat(ns.a0_), Rat(0));
        if (!check.is_zero()) throw DomainError("primitive polynomial construction failed");
    }

    Int abs_a0 = sgn(ns.a0_) < 0 ? Int(-ns.a0_) : ns.a0_;
    if (!abs_a0.fits_slong_p() || abs_a0.get_si() > (1L << 30)) {
        throw ResourceError("digit set too large to enumerate");
    }
    ns.digit_max_ = abs_a0.get_si() - 1;

    GaussInt zu(u, v), zw(w, Int(0));
    GaussInt gz = gauss_gcd(zu, zw);
    GaussInt num = div_exact(zu, gz), den = div_exact(zw, gz);
    GaussInt unit;
    ns.den_ = canonical_associate(den, &unit);
    ns.num_ = num * unit.conj();  // conj inverts a unit
    if (ns.degree_ == 2) {
        // N(num) = |a0| and N(den) = a2
        if (ns.num_.norm() != abs_a0 || ns.den_.norm() != ns.a2_) {
            throw DomainError("numerator/denominator norms do not match the polynomial");
        }
    } else {
        if (ns.num_.norm() != ns.a0_ * ns.a0_ || ns.den_.norm() != ns.a2_ * ns.a2_) {
            throw DomainError("numerator/denominator do not match the linear polynomial");
        }
    }
    return ns;
}

std::string NumberSystem::str() const {
    Int w;
    mpz_lcm(w.get_mpz_t(), alpha_.re.get_den_mpz_t(), alpha_.im.get_den_mpz_t());
    GaussInt z(Int(alpha_.re.get_num() * (w / alpha_.re.get_den())),
               Int(alpha_.im.get_num() * (w / alpha_.im.get_den())));
    if (w == 1) return z.str();
    return "(" + z.str() + ")/" + w.get_str();
}

GaussRat NumberSystem::lattice_value(const LatticePoint& p) const {
    GaussRat v = GaussRat(Rat(p.lam), Rat(0)) * basis1_;
    if (degree_ == 2) v = v + GaussRat(Rat(p.mu), Rat(0)) * basis2_;
    return v;
}

std::optional<LatticePoint> NumberSystem::to_lattice(const GaussRat& x) const {
    if (degree_ == 1) {
        if (sgn(x.im) != 0) return std::nullopt;
        Rat l = x.re / Rat(a2_);
        if (l.get_den() != 1) return std::nullopt;
        return LatticePoint(Int(l.get_num()), Int(0));
    }
    Rat mu = x.im / basis2_.im;
    if (mu.get_den() != 1) return std::nullopt;
    Rat lam = (x.re - mu * basis2_.re) / Rat(a2_);
    if (lam.get_den() != 1) return std::nullopt;
    return LatticePoint(Int(lam.get_num()), Int(mu.get_num()));
}

std::pair<int, LatticePoint> NumberSystem::backward_divide(const LatticePoint& n) const {
    Int abs_a0 = this->abs_a0();
    if (degree_ == 1) {
        // N = lam * b; the next point satisfies a | (lam*b - d)
        Int t = n.lam * a2_;
        Int d = mod_euclid(t, abs_a0);
        Int next = (t - d) / (-a0_);
        return {static_cast<int>(to_long(d)), LatticePoint(next, Int(0))};
    }
    Int t = n.lam * a2_ + n.mu * a1_;
    Int d = mod_euclid(t, abs_a0);
    Int w = (t - d) / a0_;
    return {static_cast<int>(to_long(d)), LatticePoint(n.mu, -w)};
}

LatticePoint NumberSystem::tree_child(const LatticePoint& n, int digit) const {
    if (degree_ == 1) {
        // alpha * (lam b) + d = (lam a + d) which must be b * next
        Int t = n.lam * (-a0_) + digit;
        if (mod_euclid(t, a2_) != 0) throw DomainError("digit not in the branching class");
        return LatticePoint(t / a2_, Int(0));
    }
    Int t = Int(digit) - n.lam * a1_ - n.mu * a0_;
    if (mod_euclid(t, a2_) != 0) throw DomainError("digit not in the branching class");
    return LatticePoint(t / a2_, n.lam);
}

ExpansionResult integer_expansion(const NumberSystem& ns, const LatticePoint& n,
                                  long max_steps) {
    if (max_steps < 1) throw DomainError("max_steps must be >= 1");
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<LatticePoint> orbit;
    std::vector<int> digits_lsb;
    LatticePoint cur = n;
    long steps = 0;
    while (!cur.is_zero()) {
        auto key = std::make_pair(cur.lam, cur.mu);
        auto it = seen.find(key);
        if (it != seen.end()) {
            CycleReport rep;
            for (size_t i = it->second; i < orbit.size(); ++i) {
                rep.cycle.push_back(orbit[i]);
                rep.digits.push_back(digits_lsb[i]);
            }
            return rep;
        }
        seen.emplace(key, orbit.size());
        orbit.push_back(cur);
        auto [d, next] = ns.backward_divide(cur);
        digits_lsb.push_back(d);
        cur = next;
        if (++steps > max_steps) throw ResourceError("integer expansion exceeded max_steps");
    }
    std::vector<int> digits(digits_lsb.rbegin(), digits_lsb.rend());
    return Expansion::integer_word(std::move(digits));
}

GaussRat evaluate(const NumberSystem& ns, const Expansion& e) {
    GaussRat acc(0);
    for (int d : e.digits) {
        acc = acc * ns.alpha() + GaussRat(d);
    }
    if (e.digits.empty()) return acc;
    return acc * pow(ns.alpha(), e.lsb_exponent());
}

bool validate_expansion(const NumberSystem& ns, const Expansion& e) {
    GaussRat acc(0);
    GaussRat inv = GaussRat(1) / ns.alpha();
    // prefix ending at exponent l, rescaled by alpha^-l, is acc via Horner
    for (size_t i = 0; i < e.digits.size(); ++i) {
        int d = e.digits[i];
        if (d < 0 || d > ns.digit_max()) return false;
        acc = acc * ns.alpha() + GaussRat(d);
        if (!ns.to_lattice(acc)) return false;
    }
    return true;
}

}  // namespace algnum
