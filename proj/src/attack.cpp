#include "mor/attack.hpp"

namespace mor {

DlpInstance extract_instance(const PublicKey& pub) {
    const GroupParams& P = pub.params;
    Automorphism phi = validate(P, pub.phi_images);
    Automorphism phim = validate(P, pub.phim_images);
    return DlpInstance{P, induced_matrix(phi), induced_matrix(phim)};
}

namespace {

Matrix<ExtField> embed(const ExtField& E, const Matrix<PrimeField>& a) {
    Matrix<ExtField> m(a.rows, a.cols, E.zero());
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = E.from_base(a.e[i]);
    return m;
}

u64 element_order(const ExtField& E, const ExtField::Elem& a,
                  std::map<u64, unsigned>& factored_out) {
    u64 n = E.order() - 1;
    auto fac = factor_u64(n);
    u64 ord = n;
    for (const auto& [q, e] : fac) {
        (void)e;
        while (ord % q == 0 && E.eq(E.pow(a, ord / q), E.one())) ord /= q;
    }
    factored_out = factor_u64(ord);
    return ord;
}

} // namespace

std::vector<EigenResidue> eigen_residues(const DlpInstance& inst) {
    PrimeField F(inst.params.p);
    Poly cp = char_poly(F, inst.t_mat);
    std::vector<EigenResidue> out;
    for (const auto& [factor, mult] : factor_poly(F, cp)) {
        (void)mult;
        ExtField E(F, factor);
        ExtField::Elem lambda = E.gen();
        // eigenvector of t_mat for lambda
        Matrix<ExtField> shifted = embed(E, inst.t_mat);
        for (std::size_t i = 0; i < shifted.rows; ++i)
            shifted.at(i, i) = E.sub(shifted.at(i, i), lambda);
        auto basis = kernel_basis(E, shifted);
        if (basis.empty()) throw NotInSubgroup(); // factor is not a divisor: malformed
        const auto& v = basis.front();
        // mu with tm_mat v = mu v
        Matrix<ExtField> bm = embed(E, inst.tm_mat);
        std::vector<ExtField::Elem> w(bm.rows, E.zero());
        for (std::size_t i = 0; i < bm.rows; ++i)
            for (std::size_t j = 0; j < bm.cols; ++j)
                w[i] = E.add(w[i], E.mul(bm.at(i, j), v[j]));
        std::size_t piv = 0;
        while (piv < v.size() && E.is_zero(v[piv])) ++piv;
        if (piv == v.size()) throw NotInSubgroup();
        ExtField::Elem mu = E.mul(w[piv], E.inv(v[piv]));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!E.eq(w[i], E.mul(mu, v[i]))) throw NotInSubgroup();
        std::map<u64, unsigned> ord_fac;
        u64 ord = element_order(E, lambda, ord_fac);
        u64 residue = pohlig_hellman(E, lambda, mu, ord, ord_fac);
        out.push_back(EigenResidue{factor, residue, ord});
    }
    return out;
}

AttackReport recover_exponent(const PublicKey& pub) {
    const GroupParams& P = pub.params;
    PrimeField F(P.p);
    DlpInstance inst = extract_instance(pub);
    AttackReport report;
    report.residues = eigen_residues(inst);

    u64 res = 0, mod = 1;
    for (const auto& er : report.residues)
        if (!crt_merge(res, mod, er.residue, er.order))
            throw NoSolution("eigenvalue residues are inconsistent");
    report.modulus = mod;

    u64 os = matrix_order(F, inst.t_mat, exponent_bound_factors(P));
    // stage 1: pin m modulo the matrix order (covers any unipotent part)
    Matrix<PrimeField> cur = mat_pow(F, inst.t_mat, res);
    Matrix<PrimeField> step = mat_pow(F, inst.t_mat, mod);
    u64 mstar = res;
    bool found = false;
    for (u64 j = 0; res + j * mod < os || j == 0; ++j) {
        if (mat_eq(F, cur, inst.tm_mat)) {
            mstar = res + j * mod;
            found = true;
            break;
        }
        cur = mat_mul(F, cur, step);
        ++report.lift_steps;
    }
    if (!found) throw NoSolution("no exponent matches the matrix instance");

    // stage 2: resolve the inner twist, at most p further lifts of step os
    Automorphism phi = validate(P, pub.phi_images);
    Automorphism stepper = power(phi, os);
    Automorphism aut = power(phi, mstar);
    u64 mfull = 0;
    found = false;
    for (u64 k = 0; k < P.p; ++k) {
        if (aut.images == pub.phim_images) {
            mfull = mstar + k * os;
            found = true;
            break;
        }
        aut = compose(aut, stepper);
        ++report.lift_steps;
    }
    if (!found) throw NoSolution("no exponent matches the automorphism instance");

    u64 ord_phi = automorphism_eq(power(phi, os), identity_automorphism(P)) ? os : P.p * os;
    report.recovered_m = mfull % ord_phi;
    report.verified = power(phi, report.recovered_m).images == pub.phim_images;
    return report;
}

std::vector<std::uint8_t> break_ciphertext(const PublicKey& pub, const Ciphertext& ct) {
    AttackReport report = recover_exponent(pub);
    if (!report.verified) throw NoSolution("recovered exponent failed verification");
    const GroupParams& P = pub.params;
    Automorphism phi = validate(P, pub.phi_images);
    u64 os = matrix_order(PrimeField(P.p), induced_matrix(phi), exponent_bound_factors(P));
    u64 ord_phi = automorphism_eq(power(phi, os), identity_automorphism(P)) ? os : P.p * os;
    PrivateKey priv{P, report.recovered_m, std::move(phi), ord_phi};
    return decrypt(priv, ct);
}

} // namespace mor
