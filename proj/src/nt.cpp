#include "mor/nt.hpp"

#include "mor/errors.hpp"

namespace mor {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::map<u64, unsigned> factor_u64(u64 n, u64 trial_bound) {
    std::map<u64, unsigned> out;
    if (n <= 1) return out;
    for (u64 d = 2; d <= trial_bound && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) {
        if (!is_prime_u64(n))
            throw FactoringIncomplete("composite cofactor " + std::to_string(n) +
                                      " beyond trial-division bound");
        ++out[n];
    }
    return out;
}

u64 smallest_primitive_root(u64 p) {
    if (p == 3) return 2;
    auto fac = factor_u64(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            (void)e;
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("no primitive root found (p not prime?)");
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm_u64(u64 a, u64 b) { return a / gcd_u64(a, b) * b; }

namespace {
// extended gcd on signed 128-bit values
__int128 egcd(__int128 a, __int128 b, __int128& x, __int128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    __int128 x1, y1;
    __int128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}
} // namespace

bool crt_merge(u64& res, u64& mod, u64 r, u64 m) {
    __int128 x, y;
    __int128 g = egcd((__int128)mod, (__int128)m, x, y);
    __int128 diff = (__int128)r - (__int128)res;
    if (diff % g != 0) return false;
    // mod*x + m*y = g, so (mod/g)*x = 1 (mod m/g)
    __int128 mg2 = (__int128)m / g;
    __int128 t = (diff / g) % mg2 * (x % mg2) % mg2;
    if (t < 0) t += mg2;
    u64 l = lcm_u64(mod, m);
    __int128 nr = ((__int128)res + (__int128)mod * t) % (__int128)l;
    if (nr < 0) nr += l;
    res = (u64)nr;
    mod = l;
    return true;
}

u64 DetRng::below(u64 n) {
    u64 threshold = -n % n; // 2^64 mod n
    for (;;) {
        u64 v = next();
        if (v >= threshold) return v % n;
    }
}

u128 DetRng::range128(u128 lo, u128 hi) {
    u128 span = hi - lo + 1;
    if (span == 0) return ((u128)next() << 64) | next(); // full range
    // rejection over 128 bits
    u128 limit = (u128)0 - span;
    u128 threshold = limit % span;
    for (;;) {
        u128 v = ((u128)next() << 64) | next();
        if (v >= threshold) return lo + v % span;
    }
}

} // namespace mor
