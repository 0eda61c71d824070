#pragma once

#include <optional>
#include <utility>

namespace cdlat {

inline bool is_prime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// x = p^n with p prime and n >= 1, or nothing.
inline std::optional<std::pair<int, int>> prime_power(long long x) {
    if (x < 2) return std::nullopt;
    long long p = 2;
    while (x % p != 0) ++p;
    int n = 0;
    long long y = x;
    while (y % p == 0) {
        y /= p;
        ++n;
    }
    if (y != 1) return std::nullopt;
    return std::make_pair(static_cast<int>(p), n);
}

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// t^e mod m, m >= 1
inline long long pow_mod(long long t, long long e, long long m) {
    long long r = 1 % m;
    t %= m;
    if (t < 0) t += m;
    while (e > 0) {
        if (e & 1) r = r * t % m;
        t = t * t % m;
        e >>= 1;
    }
    return r;
}

}  // namespace cdlat
