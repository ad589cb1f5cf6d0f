#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "mor/autom.hpp"

namespace mor {

struct PrivateKey {
    GroupParams params;
    u64 m = 0;
    Automorphism phi;
    u64 order_phi = 0;
};

struct PublicKey {
    GroupParams params;
    std::vector<Element> phi_images;
    std::vector<Element> phim_images;
};

struct Ciphertext {
    GroupParams params;
    std::vector<Element> psi_images;
    std::vector<Element> payload;
    u64 byte_len = 0;
};

/// Prime factorization of the exponent bound for Aut-element orders:
/// p^ceil(log_p 2r) * lcm(p^i - 1, i = 1..2r).
std::map<u64, unsigned> exponent_bound_factors(const GroupParams& P);

/// Multiplicative order of an invertible matrix over F_p.
u64 matrix_order(const PrimeField& F, const Matrix<PrimeField>& a,
                 const std::map<u64, unsigned>& bound_factors);

/// Exact multiplicative order of a validated automorphism.
u64 order_of(const Automorphism& phi);

std::pair<PublicKey, PrivateKey> keygen(const GroupParams& P, DetRng& rng);
Ciphertext encrypt(const PublicKey& pub, const std::vector<std::uint8_t>& message, DetRng& rng);
std::vector<std::uint8_t> decrypt(const PrivateKey& priv, const Ciphertext& ct);

// line-oriented text formats ("MOR1 PUB" / "MOR1 PRIV" / "MOR1 CT")
void write_public_key(std::ostream& os, const PublicKey& k);
void write_private_key(std::ostream& os, const PrivateKey& k);
void write_ciphertext(std::ostream& os, const Ciphertext& ct);
PublicKey read_public_key(std::istream& is);
PrivateKey read_private_key(std::istream& is);
Ciphertext read_ciphertext(std::istream& is);

} // namespace mor
