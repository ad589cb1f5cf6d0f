#pragma once

#include <vector>

#include "mor/esgroup.hpp"
#include "mor/ffield.hpp"

namespace mor {

/// Automorphism of P(p, r), represented by the images of x_1..x_r, y_1..y_r.
/// The central image is forced: phi(z) = z^lambda with lambda read off the
/// commutator relations during validation.
struct Automorphism {
    GroupParams params;
    std::vector<Element> images; // 2r entries: x-images then y-images
    u64 lambda = 0;              // cached by validate()
};

/// Checks relation preservation, a uniform nonzero lambda, and an invertible
/// induced matrix; returns the automorphism with lambda cached.
Automorphism validate(const GroupParams& P, std::vector<Element> images);

Automorphism identity_automorphism(const GroupParams& P);
bool automorphism_eq(const Automorphism& a, const Automorphism& b);

Element apply(const Automorphism& phi, const Element& g);
/// (phi . psi)(g) = phi(psi(g))
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
Automorphism power(const Automorphism& phi, u128 n);
Automorphism inverse(const Automorphism& phi);

/// 2r x 2r matrix over F_p; row i is the (a, b)-projection of images[i].
/// Under this row convention composition reverses: T(phi.psi) = T(psi) T(phi).
Matrix<PrimeField> induced_matrix(const Automorphism& phi);

/// The alternating-form Gram matrix J = [[0, I_r], [-I_r, 0]].
Matrix<PrimeField> form_gram(const GroupParams& P);
/// Checks S J S^T = scale * J; returns the scale, or 0 when S is not a
/// similitude of the form.
u64 form_scale(const GroupParams& P, const Matrix<PrimeField>& s);

/// Builds the automorphism with projection S * diag(I, theta^e I), z-twists d.
/// With thetaExp = 0, S itself must be symplectic.
Automorphism from_matrix_twist(const GroupParams& P, const Matrix<PrimeField>& s,
                               const std::vector<u64>& d, u64 theta_exp);

/// x_i -> x_i, y_i -> y_i^(theta^e), theta the smallest primitive root mod p.
Automorphism theta_automorphism(const GroupParams& P, u64 theta_exp);

/// Inner automorphism x_i -> x_i z^(e_i), y_i -> y_i z^(e_{r+i}).
Automorphism inner(const GroupParams& P, const std::vector<u64>& e);

/// Identity induced matrix and lambda = 1: reads off the inner twist vector.
std::vector<u64> inner_twist(const Automorphism& phi);

/// Random center-trivial automorphism: 20 random symplectic transvections
/// composed with a uniform inner twist.
Automorphism random_center_trivial(const GroupParams& P, DetRng& rng);

} // namespace mor
