#include "ctree/stability.hpp"

#include <cmath>

#include "ctree/errors.hpp"

namespace ctree {

bool expansive_exact(unsigned ones, unsigned twos) {
    return pow3(ones + twos) > pow2(ones + 2 * twos);
}

StabilityReport analyze(const PrimitiveItinerary& it) {
    StabilityReport r;
    for (std::size_t i = 1; i < it.symbols.size(); ++i) {
        if (it.symbols[i] == NodeKind::One) {
            ++r.ones;
        } else if (it.symbols[i] == NodeKind::Two) {
            ++r.twos;
        }
    }
    r.start = it.start().value;
    r.end = it.end().value;
    r.expansive_by_value = r.end > r.start;
    r.expansive_asymptotic = expansive_exact(r.ones, r.twos);
    return r;
}

double gamma() {
    return std::log(4.0 / 3.0) / std::log(1.5);
}

TwosBound max_twos(unsigned n_symbols) {
    const Nat lhs = pow3(n_symbols);
    TwosBound b;
    // 3^N > 2^(N+n) is monotone in n, so scan upward until it breaks.
    for (unsigned n = 0; n <= n_symbols; ++n) {
        if (lhs > pow2(n_symbols + n)) {
            b.twos = n;
            b.any_expansive = true;
        } else {
            break;
        }
    }
    return b;
}

Nat count_expansive(unsigned n_symbols) {
    const TwosBound bound = max_twos(n_symbols);
    Nat total = 0;
    if (!bound.any_expansive) {
        return total;
    }
    const unsigned top = bound.twos;
    Nat c;
    for (unsigned k = 0; k <= top; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), n_symbols, k);
        total += c;
    }
    return total;
}

ExpansiveRun construct_expansive(const Nat& s, unsigned M) {
    if (sgn(s) <= 0 || !is_odd(s)) {
        throw DomainError("construct_expansive: s must be odd and positive, got " + to_string(s));
    }
    if (M == 0) {
        throw DomainError("construct_expansive: M must be at least 1");
    }
    ExpansiveRun run;
    run.s = s;
    run.M = M;
    run.p0 = s * pow2(M) - 1;
    Nat y = 3 * s * pow2(M + 1) - 1;
    run.nodes.reserve(M + 1);
    for (unsigned i = 0; i <= M; ++i) {
        run.nodes.push_back(y);
        y = (3 * y + 1) / 2;
    }
    run.terminal_even = y;
    return run;
}

}  // namespace ctree
