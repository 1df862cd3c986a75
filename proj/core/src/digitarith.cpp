#include "algnum/digitarith.hpp"

#include <optional>

#include "algnum/errors.hpp"

namespace algnum {

DigitArith::DigitArith(const NumberSystem& ns) : ns_(ns) {
    // carry value |a0|/alpha: sgn(a0) * (-a2 alpha - a1) for quadratic bases,
    // -sgn(a0) * a2 for linear ones
    GaussRat beta =
        ns.degree() == 2
            ? GaussRat(Rat(-ns.a2()), Rat(0)) * ns.alpha() - GaussRat(Rat(ns.a1()), Rat(0))
            : GaussRat(Rat(-ns.a2()), Rat(0));
    if (sgn(ns.a0()) < 0) beta = -beta;
    auto p = ns.to_lattice(beta);
    if (!p) throw DomainError("carry value is not a lattice point");
    auto r = integer_expansion(ns, *p);
    if (auto* e = std::get_if<Expansion>(&r)) {
        carry_ = *e;
    } else {
        throw DomainError("base lacks the finiteness property: carry word does not terminate");
    }
}

namespace {

void accumulate(WorkWord& w, const Expansion& e, long shift, const Int& scale) {
    for (size_t i = 0; i < e.digits.size(); ++i) {
        if (e.digits[i] == 0) continue;
        long exp = e.msb_exponent - static_cast<long>(i) + shift;
        w[exp] += scale * e.digits[i];
    }
}

// Operands must be digit words over D. Ambinumber words are admissible digit
// strings that need not satisfy the lattice prefix condition, so only the
// digit range is enforced here.
void require_valid_operand(const NumberSystem& ns, const Expansion& e, const char* which) {
    for (int d : e.digits) {
        if (d < 0 || d > ns.digit_max()) {
            throw DomainError(std::string(which) + " operand has a digit outside D");
        }
    }
}

// truncation cut of a fractional result: the shorter (higher-cut) operand
// wins; exact operands (integer words and the zero word) impose none
std::optional<long> truncation_cut(const Expansion& x, const Expansion& y) {
    std::optional<long> cut;
    for (const Expansion* e : {&x, &y}) {
        if (e->kind != WordKind::TruncatedFractional || e->empty()) continue;
        long l = e->lsb_exponent();
        if (!cut || l > *cut) cut = l;
    }
    return cut;
}

}  // namespace

Expansion DigitArith::reduce(WorkWord w, WordKind kind, std::optional<long> cut,
                             long max_rewrites) const {
    auto word_value = [&](const WorkWord& ww) {
        GaussRat v(0);
        for (const auto& [exp, coeff] : ww) {
            v = v + GaussRat(Rat(coeff), Rat(0)) * pow(ns_.alpha(), exp);
        }
        return v;
    };
    const GaussRat before = word_value(w);

    const Int full = ns_.abs_a0();
    long rewrites = 0;
    // Lowest offending exponent first; carries only move upward. Digits below
    // the lowest offender are final. The rewriting system admits zero-valued
    // digit blocks that march leftwards forever (the stabilized answer grows
    // a zero trail beneath them), so when everything at and above the lowest
    // offender evaluates to exactly zero it is dropped wholesale.
    while (true) {
        auto it = w.begin();
        while (it != w.end() && it->second < full) ++it;
        if (it == w.end()) break;
        long j = it->first;
        GaussRat head(0);
        for (long e = w.rbegin()->first; e >= j; --e) {
            auto he = w.find(e);
            head = head * ns_.alpha() +
                   (he == w.end() ? GaussRat(0) : GaussRat(Rat(he->second), Rat(0)));
        }
        if (head.is_zero()) {
            w.erase(it, w.end());
            break;
        }
        if (++rewrites > max_rewrites) {
            throw ResourceError("carry reduction exceeded max_rewrites");
        }
        // same-position reductions commute, so clear the whole position at once
        Int q = it->second / full;
        it->second -= q * full;
        accumulate(w, carry_, j + 1, q);
    }
    if (word_value(w) != before) {
        throw DomainError("carry reduction did not preserve the evaluation");
    }

    std::vector<int> digits;
    long msb = 0;
    if (!w.empty()) {
        msb = w.rbegin()->first;
        long low = w.begin()->first;
        // integer words run down to exponent 0; truncated words down to the cut
        long anchor = kind == WordKind::Integer ? 0 : cut.value_or(low);
        low = std::min(low, anchor);
        for (long e = msb; e >= low; --e) {
            auto it = w.find(e);
            digits.push_back(it == w.end() ? 0 : static_cast<int>(to_long(it->second)));
        }
    }
    Expansion out = Expansion::make(std::move(digits), msb, kind);
    if (cut && !out.empty() && out.lsb_exponent() < *cut) {
        long keep = out.msb_exponent - *cut + 1;
        if (keep <= 0) {
            out.digits.clear();
        } else {
            out.digits.resize(static_cast<size_t>(keep));
        }
        out = Expansion::make(std::move(out.digits), out.msb_exponent, kind);
    }
    // Integer results are canonical integer expansions. Truncated results may
    // carry a nonzero residue class in the denominator completions, where any
    // digit string is admissible, so only integer words are lattice-validated.
    if (kind == WordKind::Integer && !validate_expansion(ns_, out)) {
        throw DomainError("carry reduction produced an invalid word");
    }
    return out;
}

Expansion DigitArith::add(const Expansion& x, const Expansion& y, long max_rewrites) const {
    require_valid_operand(ns_, x, "left");
    require_valid_operand(ns_, y, "right");
    WordKind kind = (x.kind == WordKind::Integer && y.kind == WordKind::Integer)
                        ? WordKind::Integer
                        : WordKind::TruncatedFractional;
    WorkWord w;
    accumulate(w, x, 0, Int(1));
    accumulate(w, y, 0, Int(1));
    return reduce(std::move(w), kind, truncation_cut(x, y), max_rewrites);
}

Expansion DigitArith::multiply(const Expansion& x, const Expansion& y,
                               long max_rewrites) const {
    require_valid_operand(ns_, x, "left");
    require_valid_operand(ns_, y, "right");
    WordKind kind = (x.kind == WordKind::Integer && y.kind == WordKind::Integer)
                        ? WordKind::Integer
                        : WordKind::TruncatedFractional;
    WorkWord w;
    for (size_t i = 0; i < y.digits.size(); ++i) {
        if (y.digits[i] == 0) continue;
        long t = y.msb_exponent - static_cast<long>(i);
        accumulate(w, x, t, Int(y.digits[i]));
    }
    return reduce(std::move(w), kind, truncation_cut(x, y), max_rewrites);
}

namespace {

Expansion expand_lattice_value(const NumberSystem& ns, const GaussRat& v, const char* what) {
    auto p = ns.to_lattice(v);
    if (!p) throw DomainError(std::string(what) + " is not a lattice point");
    auto r = integer_expansion(ns, *p);
    if (auto* e = std::get_if<Expansion>(&r)) return *e;
    throw DomainError(std::string(what) + " has no terminating integer expansion");
}

}  // namespace

Expansion oracle_add(const NumberSystem& ns, const Expansion& x, const Expansion& y) {
    return expand_lattice_value(ns, evaluate(ns, x) + evaluate(ns, y), "sum");
}

Expansion oracle_multiply(const NumberSystem& ns, const Expansion& x, const Expansion& y) {
    return expand_lattice_value(ns, evaluate(ns, x) * evaluate(ns, y), "product");
}

}  // namespace algnum
