#include "mor/ffield.hpp"

#include <algorithm>

namespace mor {

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p > (1ULL << 20)) throw Error("p exceeds the supported bound 2^20");
    if (p < 3 || !is_prime_u64(p) || p % 2 == 0) throw Error("p must be an odd prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::pow(Elem a, u128 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

// ---- polynomials ----

int poly_deg(const Poly& f) { return (int)f.size() - 1; }

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(std::move(r));
}

Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(std::move(r));
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return poly_trim(std::move(r));
}

Poly poly_scale(const PrimeField& F, const Poly& a, u64 c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {Poly{}, a};
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1, 0);
    u64 lead_inv = F.inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (rem.size() <= i || rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        u64 q = F.mul(rem[i], lead_inv);
        quot[i - b.size() + 1] = q;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[i - b.size() + 1 + j] = F.sub(rem[i - b.size() + 1 + j], F.mul(q, b[j]));
        if (i == 0) break;
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_monic(const PrimeField& F, const Poly& a) {
    if (a.empty() || a.back() == 1) return a;
    return poly_scale(F, a, F.inv(a.back()));
}

Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_derivative(const PrimeField& F, const Poly& a) {
    if (a.size() < 2) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p());
    return poly_trim(std::move(r));
}

u64 poly_eval(const PrimeField& F, const Poly& a, u64 x) {
    u64 r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly poly_powmod(const PrimeField& F, Poly a, u128 e, const Poly& m) {
    Poly r{1};
    a = poly_mod(F, a, m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, a), m);
        a = poly_mod(F, poly_mul(F, a, a), m);
        e >>= 1;
    }
    return r;
}

bool poly_eq(const Poly& a, const Poly& b) { return a == b; }

namespace {

// t as a polynomial
Poly poly_t() { return Poly{0, 1}; }

// a^(1/p): strips every exponent by p (valid over F_p where c^p = c)
Poly poly_pth_root(const PrimeField& F, const Poly& a) {
    Poly r;
    for (std::size_t i = 0; i < a.size(); i += (std::size_t)F.p()) r.push_back(a[i]);
    return poly_trim(std::move(r));
}

} // namespace

bool poly_is_irreducible(const PrimeField& F, const Poly& f) {
    int k = poly_deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    // Rabin: t^(p^k) = t mod f, and gcd(t^(p^(k/q)) - t, f) = 1 for primes q | k
    std::vector<Poly> frob(k + 1); // frob[j] = t^(p^j) mod f
    frob[0] = poly_mod(F, poly_t(), f);
    for (int j = 1; j <= k; ++j) frob[j] = poly_powmod(F, frob[j - 1], F.p(), f);
    if (!poly_eq(frob[k], frob[0])) return false;
    auto kfac = factor_u64((u64)k);
    for (const auto& [q, e] : kfac) {
        (void)e;
        Poly g = poly_gcd(F, poly_sub(F, frob[k / q], frob[0]), f);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

// ---- ExtField ----

ExtField::ExtField(PrimeField base, Poly modulus) : base_(base), modulus_(poly_trim(std::move(modulus))) {
    if (poly_deg(modulus_) < 1) throw Error("extension modulus must have degree >= 1");
    if (modulus_.back() != 1) throw Error("extension modulus must be monic");
    if (!poly_is_irreducible(base_, modulus_)) throw Error("extension modulus is reducible");
}

u64 ExtField::order() const {
    u64 q = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (q > (1ULL << 62) / base_.p())
            throw FactoringIncomplete("field order exceeds 64-bit desk scale");
        q *= base_.p();
    }
    return q;
}

ExtField::Elem ExtField::gen() const {
    return poly_mod(base_, Poly{0, 1}, modulus_);
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (a.empty()) throw DivisionByZero();
    // extended Euclid: s*a + t*modulus = g (constant)
    Poly r0 = modulus_, r1 = a;
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(base_, r0, r1);
        Poly s2 = poly_sub(base_, s0, poly_mul(base_, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant
    return poly_mod(base_, poly_scale(base_, s0, base_.inv(r0[0])), modulus_);
}

// ---- factorization ----

namespace {

// squarefree decomposition, char-p aware; f monic, deg >= 1
void squarefree_decompose(const PrimeField& F, const Poly& f, unsigned mult,
                          std::vector<std::pair<Poly, unsigned>>& out) {
    Poly fp = poly_derivative(F, f);
    if (fp.empty()) {
        squarefree_decompose(F, poly_pth_root(F, f), mult * (unsigned)F.p(), out);
        return;
    }
    Poly c = poly_gcd(F, f, fp);
    Poly w = poly_divmod(F, f, c).first;
    unsigned i = 1;
    while (poly_deg(w) > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_divmod(F, w, y).first;
        if (poly_deg(z) > 0) out.emplace_back(poly_monic(F, z), i * mult);
        w = std::move(y);
        c = poly_divmod(F, c, w).first;
        ++i;
    }
    if (poly_deg(c) > 0) squarefree_decompose(F, poly_pth_root(F, c), mult * (unsigned)F.p(), out);
}

// distinct-degree split of a monic squarefree polynomial
std::vector<std::pair<Poly, int>> distinct_degree_split(const PrimeField& F, Poly f) {
    std::vector<std::pair<Poly, int>> out;
    Poly h = poly_mod(F, Poly{0, 1}, f); // t mod f
    int d = 0;
    while (poly_deg(f) > 0 && poly_deg(f) >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(F, h, F.p(), f);
        Poly g = poly_gcd(F, poly_sub(F, h, Poly{0, 1}), f);
        if (poly_deg(g) > 0) {
            out.emplace_back(g, d);
            f = poly_divmod(F, f, g).first;
            h = poly_mod(F, h, f);
        }
    }
    if (poly_deg(f) > 0) out.emplace_back(f, poly_deg(f));
    return out;
}

// Cantor-Zassenhaus equal-degree split; rng keeps the whole pipeline
// deterministic (seeded from the input polynomial).
void equal_degree_split(const PrimeField& F, const Poly& f, int d, DetRng& rng,
                        std::vector<Poly>& out) {
    if (poly_deg(f) == d) {
        out.push_back(poly_monic(F, f));
        return;
    }
    u128 half = 1;
    for (int i = 0; i < d; ++i) half *= F.p();
    half = (half - 1) / 2;
    for (;;) {
        Poly a((std::size_t)poly_deg(f));
        for (auto& c : a) c = rng.below(F.p());
        a = poly_trim(std::move(a));
        if (poly_deg(a) < 1) continue;
        Poly g = poly_gcd(F, a, f);
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, poly_divmod(F, f, g).first, d, rng, out);
            return;
        }
        Poly b = poly_powmod(F, a, half, f);
        g = poly_gcd(F, poly_sub(F, b, Poly{1}), f);
        if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, poly_divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor_poly(const PrimeField& F, const Poly& f_in) {
    Poly f = poly_trim(f_in);
    if (f.empty()) throw Error("cannot factor the zero polynomial");
    std::vector<std::pair<Poly, unsigned>> result;
    if (poly_deg(f) == 0) return result;
    u64 seed = 0x6d6f7231;
    for (u64 c : f) seed = seed * 1000003 + c;
    DetRng rng(seed);
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree_decompose(F, poly_monic(F, f), 1, sqf);
    for (const auto& [g, mult] : sqf) {
        for (const auto& [h, d] : distinct_degree_split(F, g)) {
            std::vector<Poly> irr;
            equal_degree_split(F, h, d, rng, irr);
            for (auto& q : irr) result.emplace_back(std::move(q), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    // merge equal factors (can arise when multiplicities split across stages)
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& fm : result) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(std::move(fm));
    }
    return merged;
}

// ---- Berkowitz characteristic polynomial ----

Poly char_poly(const PrimeField& F, const Matrix<PrimeField>& a) {
    if (a.rows != a.cols) throw ShapeError("char_poly");
    std::size_t n = a.rows;
    std::vector<u64> v{1}; // coefficients, highest degree first
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t i = it; // size of the leading principal block
        std::vector<u64> c(it + 2, 0);
        c[0] = 1;
        c[1] = F.neg(a.at(it, it));
        if (i > 0) {
            std::vector<u64> w(i);
            for (std::size_t k = 0; k < i; ++k) w[k] = a.at(k, it);
            for (std::size_t j = 0; j + 2 < c.size(); ++j) {
                u64 dot = 0;
                for (std::size_t k = 0; k < i; ++k) dot = F.add(dot, F.mul(a.at(it, k), w[k]));
                c[j + 2] = F.neg(dot);
                if (j + 3 < c.size()) {
                    std::vector<u64> nw(i, 0);
                    for (std::size_t rr = 0; rr < i; ++rr)
                        for (std::size_t k = 0; k < i; ++k)
                            nw[rr] = F.add(nw[rr], F.mul(a.at(rr, k), w[k]));
                    w = std::move(nw);
                }
            }
        }
        std::vector<u64> nv(it + 2, 0);
        for (std::size_t k = 0; k < nv.size(); ++k)
            for (std::size_t j = 0; j < v.size() && j <= k; ++j)
                nv[k] = F.add(nv[k], F.mul(c[k - j], v[j]));
        v = std::move(nv);
    }
    std::reverse(v.begin(), v.end());
    return poly_trim(std::move(v));
}

} // namespace mor
