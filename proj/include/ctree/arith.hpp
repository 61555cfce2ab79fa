#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ctree {

/// Arbitrary-precision nonnegative integer. Every integer path in the
/// library is exact; nothing is ever rounded.
using Nat = mpz_class;

struct OddStep {
    Nat next;
    unsigned divisions = 0;
};

/// Largest e with 2^e | n. Throws DomainError for n == 0.
unsigned v2(const Nat& n);

/// One application of x -> x/2 (even) or 3x+1 (odd). Throws for x == 0.
Nat collatz_step(const Nat& x);

/// Odd-to-odd map: (3x+1) / 2^v2(3x+1). Throws DomainError for even x.
/// x = 1 gives (1, 2) through 1 -> 4 -> 2 -> 1.
OddStep odd_to_odd(const Nat& x);

/// 2^e and 3^e as exact integers.
Nat pow2(unsigned e);
Nat pow3(unsigned e);

/// Residue of a (possibly negative) integer, always in [0, modulus).
unsigned long residue(const Nat& x, unsigned long modulus);

inline bool is_odd(const Nat& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

/// Decimal parse; rejects signs, whitespace, and anything but [0-9]+.
Nat parse_nat(const std::string& text);

inline std::string to_string(const Nat& x) { return x.get_str(10); }

}  // namespace ctree
