#include "ctree/arith.hpp"

#include "ctree/errors.hpp"

namespace ctree {

unsigned v2(const Nat& n) {
    if (sgn(n) <= 0) {
        throw DomainError("v2: valuation is undefined for " + to_string(n));
    }
    return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

Nat collatz_step(const Nat& x) {
    if (sgn(x) <= 0) {
        throw DomainError("collatz_step: argument must be >= 1, got " + to_string(x));
    }
    if (is_odd(x)) {
        return 3 * x + 1;
    }
    Nat half;
    mpz_fdiv_q_2exp(half.get_mpz_t(), x.get_mpz_t(), 1);
    return half;
}

OddStep odd_to_odd(const Nat& x) {
    if (sgn(x) <= 0 || !is_odd(x)) {
        throw DomainError("odd_to_odd: argument must be an odd positive integer, got " + to_string(x));
    }
    Nat up = 3 * x + 1;
    const unsigned e = v2(up);
    OddStep step;
    step.divisions = e;
    mpz_fdiv_q_2exp(step.next.get_mpz_t(), up.get_mpz_t(), e);
    return step;
}

Nat pow2(unsigned e) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Nat pow3(unsigned e) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

unsigned long residue(const Nat& x, unsigned long modulus) {
    return mpz_fdiv_ui(x.get_mpz_t(), modulus);
}

Nat parse_nat(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("not a decimal nonnegative integer: '" + text + "'");
    }
    return Nat(text, 10);
}

}  // namespace ctree
