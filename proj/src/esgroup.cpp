#include "mor/esgroup.hpp"

#include <cmath>
#include <sstream>

namespace mor {

GroupParams::GroupParams(u64 p_, std::size_t r_) : p(p_), r(r_) {
    if (p > (1ULL << 20)) throw Error("p exceeds the supported bound 2^20");
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw Error("p must be an odd prime");
    if (r < 1) throw Error("r must be at least 1");
    // group order p^(2r+1) must be iterable at desk scale
    long double ord = (2.0L * r + 1) * std::log2((long double)p);
    if (ord > 126) throw Error("group order p^(2r+1) too large");
}

namespace {

void check_params(const GroupParams& P, const Element& g) {
    if (g.a.size() != P.r || g.b.size() != P.r) throw ParamsMismatch();
}

u64 dot(const GroupParams& P, const std::vector<u64>& u, const std::vector<u64>& v) {
    u64 s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s = (s + u[i] * v[i]) % P.p;
    return s;
}

} // namespace

Element identity(const GroupParams& P) {
    return Element{std::vector<u64>(P.r, 0), std::vector<u64>(P.r, 0), 0};
}

Element generator_x(const GroupParams& P, std::size_t i) {
    Element g = identity(P);
    g.a.at(i) = 1;
    return g;
}

Element generator_y(const GroupParams& P, std::size_t i) {
    Element g = identity(P);
    g.b.at(i) = 1;
    return g;
}

Element central(const GroupParams& P, u64 exp) {
    Element g = identity(P);
    g.c = exp % P.p;
    return g;
}

Element mul(const GroupParams& P, const Element& g, const Element& h) {
    check_params(P, g);
    check_params(P, h);
    Element r = identity(P);
    for (std::size_t i = 0; i < P.r; ++i) {
        r.a[i] = (g.a[i] + h.a[i]) % P.p;
        r.b[i] = (g.b[i] + h.b[i]) % P.p;
    }
    // moving h's x-part left across g's y-part picks up z^(-h.a . g.b)
    u64 twist = dot(P, h.a, g.b);
    r.c = (g.c + h.c + P.p - twist) % P.p;
    return r;
}

Element inv(const GroupParams& P, const Element& g) {
    check_params(P, g);
    Element r = identity(P);
    for (std::size_t i = 0; i < P.r; ++i) {
        r.a[i] = (P.p - g.a[i]) % P.p;
        r.b[i] = (P.p - g.b[i]) % P.p;
    }
    u64 ab = dot(P, g.a, g.b);
    r.c = (2 * P.p - g.c - ab) % P.p;
    return r;
}

Element pow(const GroupParams& P, const Element& g, long long n) {
    check_params(P, g);
    u64 m = (u64)(((n % (long long)P.p) + (long long)P.p) % (long long)P.p);
    Element r = identity(P);
    for (std::size_t i = 0; i < P.r; ++i) {
        r.a[i] = g.a[i] * m % P.p;
        r.b[i] = g.b[i] * m % P.p;
    }
    // binomial term from collecting m copies: z^(-C(m,2) a.b)
    u64 ab = dot(P, g.a, g.b);
    u64 binom = (m % P.p) * ((m + P.p - 1) % P.p) % P.p; // m(m-1)
    binom = binom * ((P.p + 1) / 2) % P.p;               // / 2
    r.c = (g.c * m % P.p + P.p - binom * ab % P.p) % P.p;
    return r;
}

Element commutator(const GroupParams& P, const Element& g, const Element& h) {
    return mul(P, mul(P, inv(P, g), inv(P, h)), mul(P, g, h));
}

u64 form_b(const GroupParams& P, const Element& g, const Element& h) {
    check_params(P, g);
    check_params(P, h);
    u64 s = dot(P, g.a, h.b);
    u64 t = dot(P, h.a, g.b);
    return (s + P.p - t) % P.p;
}

bool is_identity(const GroupParams& P, const Element& g) { return g == identity(P); }

std::size_t block_bytes(const GroupParams& P) {
    long double bits = 2.0L * P.r * std::log2((long double)P.p);
    auto k = (std::size_t)std::floor(bits / 8.0L);
    if (k < 1)
        throw CapacityError("p^(2r) < 256, too small to carry a byte per block");
    return k;
}

namespace {

// write N < p^(2r) as 2r base-p digits, most significant first,
// into (a1..ar, b1..br)
Element element_from_value(const GroupParams& P, u128 n) {
    Element g = identity(P);
    for (std::size_t i = P.r; i-- > 0;) {
        g.b[i] = (u64)(n % P.p);
        n /= P.p;
    }
    for (std::size_t i = P.r; i-- > 0;) {
        g.a[i] = (u64)(n % P.p);
        n /= P.p;
    }
    return g;
}

u128 value_from_element(const GroupParams& P, const Element& g) {
    u128 n = 0;
    for (std::size_t i = 0; i < P.r; ++i) n = n * P.p + g.a[i];
    for (std::size_t i = 0; i < P.r; ++i) n = n * P.p + g.b[i];
    return n;
}

u128 group_capacity(const GroupParams& P) {
    u128 cap = 1;
    for (std::size_t i = 0; i < 2 * P.r; ++i) cap *= P.p;
    return cap;
}

} // namespace

std::vector<Element> encode_bytes(const GroupParams& P, const std::vector<std::uint8_t>& data) {
    std::size_t k = block_bytes(P);
    u128 cap = group_capacity(P);
    if ((u128)data.size() >= cap)
        throw CapacityError("message length does not fit in the length block");
    std::vector<Element> out;
    out.push_back(element_from_value(P, (u128)data.size()));
    for (std::size_t off = 0; off < data.size(); off += k) {
        u128 n = 0;
        for (std::size_t j = 0; j < k; ++j) {
            std::uint8_t byte = off + j < data.size() ? data[off + j] : 0;
            n = (n << 8) | byte;
        }
        out.push_back(element_from_value(P, n));
    }
    return out;
}

std::vector<std::uint8_t> decode_bytes(const GroupParams& P, const std::vector<Element>& blocks) {
    std::size_t k = block_bytes(P);
    if (blocks.empty()) throw DecodeError("missing length block");
    u128 len128 = value_from_element(P, blocks[0]);
    if (blocks[0].c != 0 || len128 > (u128)1 << 40) throw DecodeError("corrupt length block");
    auto len = (std::size_t)len128;
    std::size_t nblocks = (len + k - 1) / k;
    if (blocks.size() != nblocks + 1) throw DecodeError("block count does not match length");
    std::vector<std::uint8_t> out;
    out.reserve(len);
    for (std::size_t bi = 0; bi < nblocks; ++bi) {
        const Element& g = blocks[bi + 1];
        if (g.c != 0) throw DecodeError("nonzero central coordinate in data block");
        u128 n = value_from_element(P, g);
        if (n >> (8 * k)) throw DecodeError("block value exceeds capacity");
        std::uint8_t buf[32];
        for (std::size_t j = k; j-- > 0;) {
            buf[j] = (std::uint8_t)(n & 0xff);
            n >>= 8;
        }
        for (std::size_t j = 0; j < k && out.size() < len; ++j) out.push_back(buf[j]);
    }
    return out;
}

std::string element_to_text(const Element& g) {
    std::ostringstream os;
    for (u64 v : g.a) os << v << ' ';
    for (u64 v : g.b) os << v << ' ';
    os << g.c;
    return os.str();
}

Element element_from_text(const GroupParams& P, const std::string& line) {
    std::istringstream is(line);
    Element g = identity(P);
    for (std::size_t i = 0; i < P.r; ++i)
        if (!(is >> g.a[i])) throw ValidationError("bad element line");
    for (std::size_t i = 0; i < P.r; ++i)
        if (!(is >> g.b[i])) throw ValidationError("bad element line");
    if (!(is >> g.c)) throw ValidationError("bad element line");
    std::string rest;
    if (is >> rest) throw ValidationError("trailing data on element line");
    for (u64 v : g.a)
        if (v >= P.p) throw ValidationError("coordinate out of range");
    for (u64 v : g.b)
        if (v >= P.p) throw ValidationError("coordinate out of range");
    if (g.c >= P.p) throw ValidationError("coordinate out of range");
    return g;
}

Element random_element(const GroupParams& P, DetRng& rng) {
    Element g = identity(P);
    for (std::size_t i = 0; i < P.r; ++i) g.a[i] = rng.below(P.p);
    for (std::size_t i = 0; i < P.r; ++i) g.b[i] = rng.below(P.p);
    g.c = rng.below(P.p);
    return g;
}

} // namespace mor
