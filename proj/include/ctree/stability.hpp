#pragma once

#include <vector>

#include "ctree/itinerary.hpp"

namespace ctree {

/// Growth summary of one primitive itinerary.
///
/// ones/twos count the binary symbols after the leading 0. The asymptotic
/// flag is the exact integer form of (3/2)^ones (3/4)^twos > 1, i.e.
/// 3^(ones+twos) > 2^(ones+2*twos). Equality counts as not expansive.
struct StabilityReport {
    unsigned ones = 0;
    unsigned twos = 0;
    Nat start;
    Nat end;
    bool expansive_by_value = false;
    bool expansive_asymptotic = false;
};

StabilityReport analyze(const PrimitiveItinerary& it);

/// 3^(ones+twos) > 2^(ones+2*twos), exact.
bool expansive_exact(unsigned ones, unsigned twos);

/// log(4/3) / log(3/2). Display only; no classification goes through it.
double gamma();

struct TwosBound {
    unsigned twos = 0;
    bool any_expansive = false;  // false when not even the all-ones word expands
};

/// Largest n with 3^N > 2^(N+n): the most 2-symbols an expansive binary
/// word of length N can carry. N counts the symbols after the leading 0.
TwosBound max_twos(unsigned n_symbols);

/// sum_{k=0}^{max_twos(N)} C(N, k).
Nat count_expansive(unsigned n_symbols);

/// A run of M+1 consecutive 1-nodes under y -> (3y+1)/2, seeded by
/// y0 + 1 = 3 s 2^(M+1). Each y_i + 1 equals s 3^(i+1) 2^(M+1-i), so the
/// powers of two run out after M halvings and y_{M+1} is even.
struct ExpansiveRun {
    Nat s;
    unsigned M = 0;
    Nat p0;  // s 2^M - 1; y0 = 6 p0 + 5
    std::vector<Nat> nodes;
    Nat terminal_even;
};

ExpansiveRun construct_expansive(const Nat& s, unsigned M);

}  // namespace ctree
