#pragma once

// Brute-force reference implementations on machine integers. Test-only;
// none of this touches the library so it can serve as an independent check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brute {

using u64 = std::uint64_t;

inline int kind(u64 x) {
    for (u64 m = x / 6;; --m) {  // find the form 6m+r by search, not by %.
        const u64 base = 6 * m;
        if (base + 3 == x) return 0;
        if (base + 5 == x) return 1;
        if (base + 1 == x) return 2;
        if (m == 0) return -1;
    }
}

inline bool pump(u64 x) { return x >= 5 && (x - 1) % 4 == 0 && ((x - 1) / 4) % 2 == 1; }

inline int character(u64 x) {
    for (int t : {1, 3, 5}) {
        if (x / 3 >= static_cast<u64>(t) && (x / 3 - t) % 6 == 0 && x % 3 == 0) return t;
    }
    return 0;
}

struct Step {
    u64 next;
    unsigned halvings;
};

// 3x+1, then halve until odd, one Collatz step at a time.
inline Step next_odd(u64 x) {
    u64 y = 3 * x + 1;
    unsigned h = 0;
    while (y % 2 == 0) {
        y /= 2;
        ++h;
    }
    return {y, h};
}

// Smallest odd x with next_odd(x) == v, by linear search.
inline std::optional<u64> smallest_odd_preimage(u64 v, u64 limit) {
    for (u64 x = 1; x <= limit; x += 2) {
        if (next_odd(x).next == v) return x;
    }
    return std::nullopt;
}

// Forward from a 0-node to the first pump.
inline std::vector<u64> forward_itinerary(u64 zero) {
    std::vector<u64> xs{zero};
    while (!pump(xs.back())) xs.push_back(next_odd(xs.back()).next);
    return xs;
}

inline std::string symbols_endpoint_first(const std::vector<u64>& chain) {
    std::string s;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) s.push_back(static_cast<char>('0' + kind(*it)));
    return s;
}

inline std::vector<u64> raw_orbit(u64 x) {
    std::vector<u64> v{x};
    do {
        v.push_back(v.back() % 2 ? 3 * v.back() + 1 : v.back() / 2);
    } while (v.back() != 1);
    return v;
}

}  // namespace brute
