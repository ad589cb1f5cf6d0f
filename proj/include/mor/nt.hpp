#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace mor {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

/// Trial division up to `bound`, then Miller-Rabin on the remainder.
/// Throws FactoringIncomplete when the remainder is composite.
std::map<u64, unsigned> factor_u64(u64 n, u64 trial_bound = 1'000'000);

/// Smallest primitive root mod an odd prime p.
u64 smallest_primitive_root(u64 p);

/// Merge a congruence x = r (mod m) into an accumulated (residue, modulus)
/// pair, allowing non-coprime moduli. Returns false on inconsistency.
bool crt_merge(u64& res, u64& mod, u64 r, u64 m);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

/// splitmix64-based deterministic generator; the single source of
/// randomness in the artifact, fixed so seeded runs are reproducible
/// across platforms.
class DetRng {
public:
    explicit DetRng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), n > 0, by rejection.
    u64 below(u64 n);

    /// Uniform in [lo, hi] over a 128-bit range.
    u128 range128(u128 lo, u128 hi);

private:
    u64 state_;
};

} // namespace mor
