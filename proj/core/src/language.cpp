#include "algnum/language.hpp"

#include <functional>

#include "algnum/errors.hpp"

namespace algnum {

BranchClass branch_digits(const NumberSystem& ns, const LatticePoint& n) {
    Int r;
    if (ns.degree() == 1) {
        // d with alpha*N + d on the lattice: d == -lam * numerator (mod b)
        r = mod_euclid(Int(n.lam * ns.a0()), ns.a2());
    } else {
        r = mod_euclid(Int(n.lam * ns.a1() + n.mu * ns.a0()), ns.a2());
    }
    BranchClass bc;
    bc.residue = to_long(r);
    for (long d = bc.residue; d <= ns.digit_max(); d += to_long(ns.a2())) {
        bc.digits.push_back(static_cast<int>(d));
    }
    return bc;
}

namespace {

void walk_level(const NumberSystem& ns, const LatticePoint& node, std::vector<int>& word,
                int remaining, size_t cap, std::vector<LevelEntry>* out, size_t* count) {
    if (remaining == 0) {
        if (++*count > cap) throw ResourceError("level enumeration exceeded its cap");
        if (out) out->push_back({word, node});
        return;
    }
    for (int d : branch_digits(ns, node).digits) {
        word.push_back(d);
        walk_level(ns, ns.tree_child(node, d), word, remaining - 1, cap, out, count);
        word.pop_back();
    }
}

}  // namespace

std::vector<LevelEntry> enumerate_level(const NumberSystem& ns, int k, size_t cap) {
    if (k < 0) throw DomainError("level index must be >= 0");
    std::vector<LevelEntry> out;
    std::vector<int> word;
    size_t count = 0;
    walk_level(ns, LatticePoint(), word, k, cap, &out, &count);
    return out;
}

size_t count_level(const NumberSystem& ns, int k, size_t cap) {
    if (k < 0) throw DomainError("level index must be >= 0");
    std::vector<int> word;
    size_t count = 0;
    walk_level(ns, LatticePoint(), word, k, cap, nullptr, &count);
    return count;
}

namespace {

// value^k as a + b*sqrt(m) where value = sqrt(m)
QuadSurd alpha_pow(const Rat& m, long k) {
    if (k % 2 == 0) return QuadSurd::rational(pow_rat(m, k / 2), m);
    return QuadSurd(0, pow_rat(m, (k - 1) / 2), m);
}

// u >= sqrt(s) for u in Q[sqrt(m)], s rational >= 0
bool surd_geq_sqrt(const QuadSurd& u, const Rat& s) {
    if (u.sign() < 0) return false;
    QuadSurd diff = u * u - QuadSurd::rational(s, u.m);
    return diff.sign() >= 0;
}

// u <= sqrt(s)
bool surd_leq_sqrt(const QuadSurd& u, const Rat& s) {
    if (u.sign() <= 0) return true;
    QuadSurd diff = u * u - QuadSurd::rational(s, u.m);
    return diff.sign() <= 0;
}

}  // namespace

LengthBracket length_bounds(const NumberSystem& ns, const LatticePoint& n) {
    if (n.is_zero()) throw DomainError("length bracket is undefined for zero");
    const Rat m = ns.modulus_squared();
    const Rat dmax(ns.digit_max());
    const Rat nn = ns.lattice_value(n).norm();  // |N|^2

    // dmax / (|alpha| - 1) = dmax (|alpha| + 1) / (m - 1), rationalized
    const Rat c = dmax / (m - 1);
    const QuadSurd geom(c, c, m);  // c + c*sqrt(m)
    const QuadSurd one = QuadSurd::rational(1, m);

    constexpr long kCap = 1000000;

    // smallest k with dmax (|alpha|^{k+1} - 1)/(|alpha|-1) >= |N|
    long k_min = 0;
    while (k_min < kCap) {
        QuadSurd upper_expr = geom * (alpha_pow(m, k_min + 1) - one);
        if (surd_geq_sqrt(upper_expr, nn)) break;
        ++k_min;
    }
    if (k_min >= kCap) throw ResourceError("length bracket search did not converge");

    const QuadSurd c_low = one - geom;  // 1 - dmax/(|alpha|-1)
    long k_max;
    if (c_low.sign() > 0) {
        // lower inequality is monotone increasing; scan for the last k
        // with c_low |alpha|^k + dmax/(|alpha|-1) <= |N|
        k_max = k_min;
        long k = k_min;
        while (k < kCap) {
            QuadSurd lower_expr = c_low * alpha_pow(m, k) + geom;
            if (!surd_leq_sqrt(lower_expr, nn)) break;
            k_max = k;
            ++k;
        }
    } else {
        // orbit containment: the iteration rho -> (rho + dmax)/|alpha| fixes
        // R = dmax/(|alpha|-1) and only reaches it in the limit, so use the
        // enlarged invariant ball of radius R + 1, entered in finitely many
        // steps, then count the nonzero lattice points it holds
        const QuadSurd radius = geom + one;  // R + 1
        QuadSurd rho = QuadSurd::rational(sqrt_upper_bound(nn), m);
        long steps = 0;
        while ((rho - radius).sign() > 0) {
            // rho <- (rho + dmax)/|alpha|; dividing a + b*sqrt(m) by sqrt(m)
            // gives b + (a/m)*sqrt(m)
            QuadSurd t = rho + QuadSurd::rational(dmax, m);
            rho = QuadSurd(t.b, t.a / m, m);
            ++steps;
            if (steps > kCap) throw ResourceError("orbit radius iteration did not contract");
        }
        const QuadSurd r2 = radius * radius;
        const Rat r_ub = c * (sqrt_upper_bound(m) + 1) + 1;  // rational bound >= R + 1
        long count = 0;
        if (ns.degree() == 1) {
            Int lam_hi = floor_rat(r_ub / Rat(ns.a2()));
            for (Int lam = -lam_hi; lam <= lam_hi; ++lam) {
                if (sgn(lam) == 0) continue;
                Rat x2 = Rat(lam * ns.a2()) * Rat(lam * ns.a2());
                if ((r2 - QuadSurd::rational(x2, m)).sign() >= 0) ++count;
            }
        } else {
            const Rat bim = ns.basis2().im;
            const Rat abs_bim = sgn(bim) < 0 ? Rat(-bim) : bim;
            Int mu_hi = floor_rat(r_ub / abs_bim);
            for (Int mu = -mu_hi; mu <= mu_hi; ++mu) {
                Rat re_off = Rat(mu) * ns.basis2().re;
                Int lam_lo = ceil_rat((-r_ub - re_off) / Rat(ns.a2()));
                Int lam_hi = floor_rat((r_ub - re_off) / Rat(ns.a2()));
                for (Int lam = lam_lo; lam <= lam_hi; ++lam) {
                    if (sgn(lam) == 0 && sgn(mu) == 0) continue;
                    Rat x2 = ns.lattice_value(LatticePoint(lam, mu)).norm();
                    if ((r2 - QuadSurd::rational(x2, m)).sign() >= 0) ++count;
                }
            }
        }
        k_max = steps + count - 1;
    }

    long lower = k_min + 1, upper = k_max + 1;
    if (upper < lower) upper = lower;
    return {lower, upper};
}

std::string tree_dot(const NumberSystem& ns, int depth) {
    std::string out = "digraph expansion_tree {\n  rankdir=TB;\n  node [shape=circle];\n";
    std::function<void(const LatticePoint&, const std::string&, int)> rec =
        [&](const LatticePoint& node, const std::string& id, int remaining) {
            BranchClass bc = branch_digits(ns, node);
            out += "  \"" + id + "\" [label=\"" + ns.lattice_value(node).str() + "\\nr=" +
                   std::to_string(bc.residue) + "\"];\n";
            if (remaining == 0) return;
            for (int d : bc.digits) {
                std::string cid = id + "." + std::to_string(d);
                out += "  \"" + id + "\" -> \"" + cid + "\" [label=\"" + std::to_string(d) +
                       "\"];\n";
                rec(ns.tree_child(node, d), cid, remaining - 1);
            }
        };
    rec(LatticePoint(), "r", depth);
    out += "}\n";
    return out;
}

}  // namespace algnum
