#include "mor/morsys.hpp"

#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace mor {

namespace {

u128 u128_gcd(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr u128 kSaturation = (u128)1 << 100;

// upper bound (saturating) used only to size the ephemeral-exponent range
u128 exponent_bound_saturated(const GroupParams& P) {
    u128 l = 1;
    u128 q = 1;
    for (std::size_t i = 1; i <= 2 * P.r; ++i) {
        q *= P.p;
        u128 v = q - 1;
        u128 g = u128_gcd(l, v);
        u128 nl = l / g;
        if (nl > kSaturation / v) return kSaturation;
        l = nl * v;
    }
    u64 ppow = 1;
    while (ppow < 2 * P.r) ppow *= P.p;
    if (l > kSaturation / ppow) return kSaturation;
    return l * ppow;
}

Matrix<PrimeField> pow_factored(const PrimeField& F, const Matrix<PrimeField>& a,
                                const std::map<u64, unsigned>& factors, u64 skip_prime) {
    Matrix<PrimeField> r = a;
    for (const auto& [q, e] : factors) {
        if (q == skip_prime) continue;
        u128 qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= q;
        r = mat_pow(F, r, qe);
    }
    return r;
}

} // namespace

std::map<u64, unsigned> exponent_bound_factors(const GroupParams& P) {
    static std::mutex cache_mu;
    static std::map<std::pair<u64, std::size_t>, std::map<u64, unsigned>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({P.p, P.r});
        if (it != cache.end()) return it->second;
    }
    std::map<u64, unsigned> out;
    u128 q = 1;
    for (std::size_t i = 1; i <= 2 * P.r; ++i) {
        q *= P.p;
        if (q - 1 > (u128)std::numeric_limits<u64>::max())
            throw FactoringIncomplete("p^" + std::to_string(i) + " - 1 exceeds 64 bits");
        for (const auto& [f, e] : factor_u64((u64)(q - 1))) {
            auto& cur = out[f];
            if (e > cur) cur = e;
        }
    }
    unsigned a = 0;
    u64 ppow = 1;
    while (ppow < 2 * P.r) {
        ppow *= P.p;
        ++a;
    }
    if (a > out[P.p]) out[P.p] = a;
    if (out[P.p] == 0) out.erase(P.p);
    std::lock_guard<std::mutex> lock(cache_mu);
    cache.emplace(std::make_pair(P.p, P.r), out);
    return out;
}

u64 matrix_order(const PrimeField& F, const Matrix<PrimeField>& a,
                 const std::map<u64, unsigned>& bound_factors) {
    Matrix<PrimeField> id = mat_identity(F, a.rows);
    u128 order = 1;
    for (const auto& [q, e] : bound_factors) {
        Matrix<PrimeField> b = pow_factored(F, a, bound_factors, q);
        unsigned f = 0;
        while (!mat_eq(F, b, id)) {
            b = mat_pow(F, b, q);
            ++f;
            if (f > e) throw NoSolution("matrix order exceeds the exponent bound");
        }
        for (unsigned i = 0; i < f; ++i) order *= q;
        if (order > (u128)std::numeric_limits<u64>::max())
            throw FactoringIncomplete("matrix order exceeds 64 bits");
    }
    return (u64)order;
}

u64 order_of(const Automorphism& phi) {
    const GroupParams& P = phi.params;
    PrimeField F(P.p);
    u64 os = matrix_order(F, induced_matrix(phi), exponent_bound_factors(P));
    // phi^os is inner, so ord(phi) is os or p*os
    if (automorphism_eq(power(phi, os), identity_automorphism(P))) return os;
    return P.p * os;
}

std::pair<PublicKey, PrivateKey> keygen(const GroupParams& P, DetRng& rng) {
    block_bytes(P); // capacity check, throws CapacityError
    for (;;) {
        Automorphism phi = random_center_trivial(P, rng);
        u64 ord = order_of(phi);
        if (ord < 8) continue; // degenerate key, resample
        u64 m = 2 + rng.below(ord - 2);
        Automorphism phim = power(phi, m);
        PublicKey pub{P, phi.images, phim.images};
        PrivateKey priv{P, m, std::move(phi), ord};
        return {std::move(pub), std::move(priv)};
    }
}

Ciphertext encrypt(const PublicKey& pub, const std::vector<std::uint8_t>& message, DetRng& rng) {
    const GroupParams& P = pub.params;
    Automorphism phi = validate(P, pub.phi_images);
    Automorphism phim = validate(P, pub.phim_images);
    // the sender never learns ord(phi); the range is a fixed multiple of it
    u128 hi = exponent_bound_saturated(P);
    if (hi < kSaturation) hi *= P.p;
    u128 ke = rng.range128(2, hi);
    Automorphism psi = power(phi, ke);
    Automorphism chi = power(phim, ke);
    std::vector<Element> payload;
    for (const auto& block : encode_bytes(P, message)) payload.push_back(apply(chi, block));
    return Ciphertext{P, psi.images, std::move(payload), (u64)message.size()};
}

std::vector<std::uint8_t> decrypt(const PrivateKey& priv, const Ciphertext& ct) {
    const GroupParams& P = priv.params;
    if (!(ct.params == P)) throw ParamsMismatch();
    Automorphism psi = validate(P, ct.psi_images);
    Automorphism chi = power(psi, priv.m);
    Automorphism chi_inv = inverse(chi);
    std::vector<Element> blocks;
    blocks.reserve(ct.payload.size());
    for (const auto& g : ct.payload) blocks.push_back(apply(chi_inv, g));
    std::vector<std::uint8_t> out = decode_bytes(P, blocks);
    if (out.size() != ct.byte_len) throw DecodeError("length field does not match payload");
    return out;
}

// ---- text formats ----

namespace {

void write_header(std::ostream& os, const char* kind, const GroupParams& P) {
    os << "MOR1 " << kind << "\n";
    os << "p " << P.p << " r " << P.r << "\n";
}

std::string next_line(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("unexpected end of file");
    return line;
}

GroupParams read_header(std::istream& is, const char* kind) {
    std::string magic = next_line(is);
    if (magic != std::string("MOR1 ") + kind) throw ValidationError("bad file header");
    std::istringstream ps(next_line(is));
    std::string tp, tr;
    u64 p = 0, r = 0;
    if (!(ps >> tp >> p >> tr >> r) || tp != "p" || tr != "r")
        throw ValidationError("bad parameter line");
    try {
        return GroupParams(p, (std::size_t)r);
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

std::vector<Element> read_elements(std::istream& is, const GroupParams& P, std::size_t n) {
    std::vector<Element> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(element_from_text(P, next_line(is)));
    return out;
}

} // namespace

void write_public_key(std::ostream& os, const PublicKey& k) {
    write_header(os, "PUB", k.params);
    for (const auto& g : k.phi_images) os << element_to_text(g) << "\n";
    for (const auto& g : k.phim_images) os << element_to_text(g) << "\n";
}

void write_private_key(std::ostream& os, const PrivateKey& k) {
    write_header(os, "PRIV", k.params);
    os << "m " << k.m << "\n";
    os << "order " << k.order_phi << "\n";
    for (const auto& g : k.phi.images) os << element_to_text(g) << "\n";
}

void write_ciphertext(std::ostream& os, const Ciphertext& ct) {
    write_header(os, "CT", ct.params);
    for (const auto& g : ct.psi_images) os << element_to_text(g) << "\n";
    os << "len " << ct.byte_len << "\n";
    for (const auto& g : ct.payload) os << element_to_text(g) << "\n";
}

PublicKey read_public_key(std::istream& is) {
    GroupParams P = read_header(is, "PUB");
    PublicKey k;
    k.params = P;
    k.phi_images = read_elements(is, P, 2 * P.r);
    k.phim_images = read_elements(is, P, 2 * P.r);
    return k;
}

PrivateKey read_private_key(std::istream& is) {
    GroupParams P = read_header(is, "PRIV");
    std::istringstream ms(next_line(is));
    std::string tag;
    u64 m = 0, ord = 0;
    if (!(ms >> tag >> m) || tag != "m") throw ValidationError("bad m line");
    std::istringstream osr(next_line(is));
    if (!(osr >> tag >> ord) || tag != "order") throw ValidationError("bad order line");
    Automorphism phi = validate(P, read_elements(is, P, 2 * P.r));
    return PrivateKey{P, m, std::move(phi), ord};
}

Ciphertext read_ciphertext(std::istream& is) {
    GroupParams P = read_header(is, "CT");
    Ciphertext ct;
    ct.params = P;
    ct.psi_images = read_elements(is, P, 2 * P.r);
    std::istringstream ls(next_line(is));
    std::string tag;
    if (!(ls >> tag >> ct.byte_len) || tag != "len") throw ValidationError("bad len line");
    std::size_t k = block_bytes(P);
    std::size_t nblocks = ((std::size_t)ct.byte_len + k - 1) / k + 1;
    ct.payload = read_elements(is, P, nblocks);
    return ct;
}

} // namespace mor
