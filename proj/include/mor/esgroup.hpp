#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mor/errors.hpp"
#include "mor/nt.hpp"

namespace mor {

/// Parameters of the extra-special group P(p, r) of order p^(2r+1),
/// the r-fold central product of the Heisenberg group of order p^3.
struct GroupParams {
    u64 p = 0;
    std::size_t r = 0;

    GroupParams() = default;
    GroupParams(u64 p_, std::size_t r_);

    bool operator==(const GroupParams&) const = default;
};

/// Normal form x_1^a1 ... x_r^ar y_1^b1 ... y_r^br z^c, coordinates mod p.
struct Element {
    std::vector<u64> a, b;
    u64 c = 0;

    auto operator<=>(const Element&) const = default;
};

Element identity(const GroupParams& P);
Element generator_x(const GroupParams& P, std::size_t i);
Element generator_y(const GroupParams& P, std::size_t i);
Element central(const GroupParams& P, u64 exp); // z^exp

/// Collection rule: y^b x^a = x^a y^b z^(-a.b), per [g,h] = g^-1 h^-1 g h
/// and [x_i, y_i] = z.
Element mul(const GroupParams& P, const Element& g, const Element& h);
Element inv(const GroupParams& P, const Element& g);
/// Closed form (na, nb, nc - C(n,2) a.b); n is reduced mod p first.
Element pow(const GroupParams& P, const Element& g, long long n);
/// g^-1 h^-1 g h; always central with exponent B(g,h) = g.a . h.b - h.a . g.b.
Element commutator(const GroupParams& P, const Element& g, const Element& h);

/// The symplectic form B on P modulo its Frattini subgroup.
u64 form_b(const GroupParams& P, const Element& g, const Element& h);

bool is_identity(const GroupParams& P, const Element& g);

/// Bytes per message block: floor(2r log2(p) / 8); requires p^2r >= 256.
std::size_t block_bytes(const GroupParams& P);
/// Splits data into blocks written base p into the (a, b) coordinates
/// (c stays 0); a leading block carries the byte count.
std::vector<Element> encode_bytes(const GroupParams& P, const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> decode_bytes(const GroupParams& P, const std::vector<Element>& blocks);

/// Text form "a1 .. ar b1 .. br c" used by key and ciphertext files.
std::string element_to_text(const Element& g);
Element element_from_text(const GroupParams& P, const std::string& line);

Element random_element(const GroupParams& P, DetRng& rng);

} // namespace mor
