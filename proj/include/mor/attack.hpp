#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "mor/morsys.hpp"

namespace mor {

/// The matrix DLP extracted from a public key: tm_mat = t_mat^m.
struct DlpInstance {
    GroupParams params;
    Matrix<PrimeField> t_mat;
    Matrix<PrimeField> tm_mat;
};

struct EigenResidue {
    Poly factor;  // irreducible factor of char_poly(t_mat)
    u64 residue;  // m mod order
    u64 order;    // multiplicative order of the eigenvalue
};

struct AttackReport {
    u64 recovered_m = 0;
    u64 modulus = 0; // residue modulus determined by the eigenvalue stage
    std::vector<EigenResidue> residues;
    u64 lift_steps = 0;
    bool verified = false;
};

DlpInstance extract_instance(const PublicKey& pub);

inline std::vector<u64> elem_key(const PrimeField&, u64 e) { return {e}; }
inline std::vector<u64> elem_key(const ExtField&, const Poly& e) { return e; }

/// Least nonnegative x with base^x = target; O(sqrt(order)) table.
template <class F>
u64 bsgs(const F& K, const typename F::Elem& base, const typename F::Elem& target, u64 order) {
    u64 m = (u64)std::ceil(std::sqrt((double)order)) + 1;
    std::map<std::vector<u64>, u64> baby;
    auto cur = K.one();
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(elem_key(K, cur), j); // keeps the smallest j
        cur = K.mul(cur, base);
    }
    auto giant = K.inv(K.pow(base, m));
    auto g = target;
    for (u64 i = 0; i <= m; ++i) {
        auto it = baby.find(elem_key(K, g));
        if (it != baby.end()) return i * m + it->second;
        g = K.mul(g, giant);
    }
    throw NotInSubgroup();
}

/// Prime-by-prime BSGS combined by CRT; factored_order must multiply to
/// order, which may be any multiple of ord(base). Returns x mod ord(base).
template <class F>
u64 pohlig_hellman(const F& K, const typename F::Elem& base, const typename F::Elem& target,
                   u64 order, const std::map<u64, unsigned>& factored_order) {
    // shrink to the exact order of the base so per-prime digits are sound
    std::map<u64, unsigned> fac = factored_order;
    for (auto& [q, e] : fac)
        while (e > 0 && K.eq(K.pow(base, order / q), K.one())) {
            order /= q;
            --e;
        }
    u64 res = 0, mod = 1;
    for (const auto& [q, e] : fac) {
        if (e == 0) continue;
        u64 qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= q;
        auto gamma = K.pow(base, order / q); // order dividing q
        u64 x = 0, qk = 1;
        for (unsigned k = 0; k < e; ++k) {
            auto shifted = K.mul(target, K.inv(K.pow(base, x)));
            auto h = K.pow(shifted, order / (qk * q));
            u64 d = bsgs(K, gamma, h, q);
            x += d * qk;
            qk *= q;
        }
        if (!crt_merge(res, mod, x, qe)) throw NotInSubgroup();
    }
    return res;
}

/// Menezes-Wu eigenvalue stage: one residue of m per irreducible factor of
/// the characteristic polynomial of t_mat.
std::vector<EigenResidue> eigen_residues(const DlpInstance& inst);

AttackReport recover_exponent(const PublicKey& pub);

std::vector<std::uint8_t> break_ciphertext(const PublicKey& pub, const Ciphertext& ct);

} // namespace mor
