#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algnum/gauss.hpp"
#include "algnum/scalar.hpp"

namespace algnum {

// Point of the lattice on which backward division is defined, stored in
// basis coordinates: value = lam * a2 + mu * (a2*alpha + a1).
// (Bases on the real line use the one-dimensional sublattice mu = 0.)
struct LatticePoint {
    Int lam, mu;

    LatticePoint() : lam(0), mu(0) {}
    LatticePoint(Int l, Int m) : lam(std::move(l)), mu(std::move(m)) {}

    bool is_zero() const { return sgn(lam) == 0 && sgn(mu) == 0; }
    bool operator==(const LatticePoint& o) const { return lam == o.lam && mu == o.mu; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const {
        if (lam != o.lam) return lam < o.lam;
        return mu < o.mu;
    }
};

enum class WordKind {
    Integer,              // digits cover exponents k..0
    TruncatedFractional,  // truncation of an expansion that continues rightwards
};

// Digit word over {0,...,digit_max}, most significant digit first, with the
// exponent of the leading digit. The empty word represents zero.
struct Expansion {
    std::vector<int> digits;
    long msb_exponent = 0;
    WordKind kind = WordKind::Integer;

    bool empty() const { return digits.empty(); }
    long lsb_exponent() const {
        return digits.empty() ? msb_exponent : msb_exponent - static_cast<long>(digits.size()) + 1;
    }
    int digit_at(long exp) const {
        if (digits.empty() || exp > msb_exponent || exp < lsb_exponent()) return 0;
        return digits[static_cast<size_t>(msb_exponent - exp)];
    }

    // drops leading zeros (adjusting msb_exponent); zero word becomes empty
    static Expansion make(std::vector<int> digits, long msb_exponent, WordKind kind);
    static Expansion integer_word(std::vector<int> digits);

    // inverse of str(): "223011", "22.3", "0.0042", or comma-separated wide
    // digits like "17,25.3"
    static Expansion parse(const std::string& s, bool wide = false);

    // "223011" or "22.3" or "0.0042"; digits comma-separated when wide is set
    std::string str(bool wide = false) const;

    bool operator==(const Expansion& o) const {
        return digits == o.digits && (digits.empty() || msb_exponent == o.msb_exponent);
    }
};

// Base alpha with its primitive polynomial, digit set, lattice basis and
// coprime numerator/denominator. Immutable after construction; safe to share
// across threads.
class NumberSystem {
  public:
    static NumberSystem make(const GaussRat& alpha);

    const GaussRat& alpha() const { return alpha_; }
    int degree() const { return degree_; }
    const Int& a2() const { return a2_; }
    const Int& a1() const { return a1_; }
    const Int& a0() const { return a0_; }
    Int abs_a0() const { return sgn(a0_) < 0 ? Int(-a0_) : a0_; }
    long digit_max() const { return digit_max_; }
    long digit_count() const { return digit_max_ + 1; }
    const GaussInt& num() const { return num_; }
    const GaussInt& den() const { return den_; }
    // Brunotte basis {a2, a2*alpha + a1}; second element is 0 for degree 1
    const GaussRat& basis1() const { return basis1_; }
    const GaussRat& basis2() const { return basis2_; }
    // |alpha|^2 as an exact rational
    const Rat& modulus_squared() const { return mod2_; }

    GaussRat lattice_value(const LatticePoint& p) const;
    std::optional<LatticePoint> to_lattice(const GaussRat& x) const;

    // one step of backward division: digit d and (value - d) / alpha
    std::pair<int, LatticePoint> backward_divide(const LatticePoint& n) const;
    // inverse step: lattice coordinates of alpha * value(n) + d
    LatticePoint tree_child(const LatticePoint& n, int digit) const;

    std::string str() const;  // "(-1+3i)/2"

  private:
    NumberSystem() = default;

    GaussRat alpha_;
    int degree_ = 2;
    Int a2_, a1_, a0_;
    long digit_max_ = 0;
    GaussInt num_, den_;
    GaussRat basis1_, basis2_;
    Rat mod2_;
};

struct CycleReport {
    std::vector<LatticePoint> cycle;  // lattice points of the cycle, in orbit order
    std::vector<int> digits;          // digit emitted at each cycle point
};

using ExpansionResult = std::variant<Expansion, CycleReport>;

// Iterate backward division until zero; a revisited point yields a
// CycleReport instead.
ExpansionResult integer_expansion(const NumberSystem& ns, const LatticePoint& n,
                                  long max_steps = 1000000);

// Exact evaluation sum d_j alpha^j.
GaussRat evaluate(const NumberSystem& ns, const Expansion& e);

// True iff every prefix of the word, rescaled to exponent zero, is a lattice
// point. Valid words (leading zeros stripped) are exactly the words produced
// by integer_expansion.
bool validate_expansion(const NumberSystem& ns, const Expansion& e);

}  // namespace algnum
