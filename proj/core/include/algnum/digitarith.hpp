#pragma once

#include <map>
#include <optional>

#include "algnum/numsys.hpp"

namespace algnum {

// Scratch representation used by the carry rewriting: exponent -> coefficient,
// coefficients may exceed digit_max while a reduction is in flight. Every
// rewrite preserves the exact evaluation.
using WorkWord = std::map<long, Int>;

// Digitwise addition and multiplication of expansions. Construction computes
// and caches the carry word, the integer expansion of |a0|/alpha; it fails
// for bases where that expansion does not terminate.
class DigitArith {
  public:
    explicit DigitArith(const NumberSystem& ns);

    const NumberSystem& ns() const { return ns_; }
    const Expansion& carry_word() const { return carry_; }

    Expansion add(const Expansion& x, const Expansion& y, long max_rewrites = 10000) const;
    Expansion multiply(const Expansion& x, const Expansion& y,
                       long max_rewrites = 10000) const;

  private:
    Expansion reduce(WorkWord w, WordKind kind, std::optional<long> cut,
                     long max_rewrites) const;

    const NumberSystem& ns_;
    Expansion carry_;
};

// Reference route: evaluate exactly in Q(i), return to the lattice, re-expand.
// Operands must evaluate to lattice points (integer words do).
Expansion oracle_add(const NumberSystem& ns, const Expansion& x, const Expansion& y);
Expansion oracle_multiply(const NumberSystem& ns, const Expansion& x, const Expansion& y);

}  // namespace algnum
