#include "mor/autom.hpp"

#include <algorithm>
#include <string>

namespace mor {

namespace {

void check_same_params(const GroupParams& a, const GroupParams& b) {
    if (!(a == b)) throw ParamsMismatch();
}

Matrix<PrimeField> projection_matrix(const GroupParams& P, const std::vector<Element>& images) {
    PrimeField F(P.p);
    Matrix<PrimeField> m(2 * P.r, 2 * P.r, 0);
    for (std::size_t i = 0; i < 2 * P.r; ++i) {
        for (std::size_t j = 0; j < P.r; ++j) {
            m.at(i, j) = images[i].a[j];
            m.at(i, P.r + j) = images[i].b[j];
        }
    }
    return m;
}

} // namespace

Automorphism validate(const GroupParams& P, std::vector<Element> images) {
    if (images.size() != 2 * P.r) throw ValidationError("expected 2r generator images");
    for (const auto& g : images)
        if (g.a.size() != P.r || g.b.size() != P.r) throw ParamsMismatch();

    PrimeField F(P.p);
    Matrix<PrimeField> proj = projection_matrix(P, images);
    if (F.is_zero(mat_det(F, proj))) throw SingularInducedMatrix();

    u64 lambda = form_b(P, images[0], images[P.r]);
    for (std::size_t i = 0; i < 2 * P.r; ++i) {
        for (std::size_t j = i + 1; j < 2 * P.r; ++j) {
            u64 c = form_b(P, images[i], images[j]);
            bool diag_pair = (j == i + P.r);
            if (diag_pair) {
                if (c != lambda) throw InconsistentLambda();
            } else if (c != 0) {
                throw RelationViolation("images " + std::to_string(i) + "," + std::to_string(j));
            }
        }
    }
    if (lambda == 0) throw SingularInducedMatrix();
    return Automorphism{P, std::move(images), lambda};
}

Automorphism identity_automorphism(const GroupParams& P) {
    std::vector<Element> images;
    for (std::size_t i = 0; i < P.r; ++i) images.push_back(generator_x(P, i));
    for (std::size_t i = 0; i < P.r; ++i) images.push_back(generator_y(P, i));
    return Automorphism{P, std::move(images), 1};
}

bool automorphism_eq(const Automorphism& a, const Automorphism& b) {
    return a.params == b.params && a.images == b.images;
}

Element apply(const Automorphism& phi, const Element& g) {
    const GroupParams& P = phi.params;
    if (g.a.size() != P.r || g.b.size() != P.r) throw ParamsMismatch();
    Element out = identity(P);
    for (std::size_t i = 0; i < P.r; ++i)
        if (g.a[i]) out = mul(P, out, pow(P, phi.images[i], (long long)g.a[i]));
    for (std::size_t i = 0; i < P.r; ++i)
        if (g.b[i]) out = mul(P, out, pow(P, phi.images[P.r + i], (long long)g.b[i]));
    if (g.c) out = mul(P, out, central(P, phi.lambda * g.c % P.p));
    return out;
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
    check_same_params(phi.params, psi.params);
    std::vector<Element> images;
    images.reserve(psi.images.size());
    for (const auto& g : psi.images) images.push_back(apply(phi, g));
    return Automorphism{phi.params, std::move(images), phi.lambda * psi.lambda % phi.params.p};
}

Automorphism power(const Automorphism& phi, u128 n) {
    Automorphism result = identity_automorphism(phi.params);
    Automorphism base = phi;
    while (n) {
        if (n & 1) result = compose(result, base);
        n >>= 1;
        if (n) base = compose(base, base);
    }
    return result;
}

Matrix<PrimeField> induced_matrix(const Automorphism& phi) {
    return projection_matrix(phi.params, phi.images);
}

Matrix<PrimeField> form_gram(const GroupParams& P) {
    PrimeField F(P.p);
    Matrix<PrimeField> j(2 * P.r, 2 * P.r, 0);
    for (std::size_t i = 0; i < P.r; ++i) {
        j.at(i, P.r + i) = 1;
        j.at(P.r + i, i) = P.p - 1;
    }
    return j;
}

u64 form_scale(const GroupParams& P, const Matrix<PrimeField>& s) {
    PrimeField F(P.p);
    Matrix<PrimeField> j = form_gram(P);
    Matrix<PrimeField> st(s.cols, s.rows, 0);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t k = 0; k < s.cols; ++k) st.at(k, i) = s.at(i, k);
    Matrix<PrimeField> sjst = mat_mul(F, mat_mul(F, s, j), st);
    u64 scale = sjst.at(0, P.r);
    Matrix<PrimeField> scaled = j;
    for (auto& v : scaled.e) v = F.mul(v, scale);
    return mat_eq(F, sjst, scaled) ? scale : 0;
}

Automorphism from_matrix_twist(const GroupParams& P, const Matrix<PrimeField>& s,
                               const std::vector<u64>& d, u64 theta_exp) {
    if (s.rows != 2 * P.r || s.cols != 2 * P.r) throw ShapeError("from_matrix_twist");
    if (d.size() != 2 * P.r) throw ShapeError("twist vector");
    PrimeField F(P.p);
    if (F.is_zero(mat_det(F, s))) throw SingularInducedMatrix();
    if (theta_exp == 0 && form_scale(P, s) != 1) throw NotSymplectic();
    u64 theta = theta_exp ? PrimeField(P.p).pow(smallest_primitive_root(P.p), theta_exp) : 1;
    std::vector<Element> images;
    for (std::size_t i = 0; i < 2 * P.r; ++i) {
        Element g = identity(P);
        for (std::size_t j = 0; j < P.r; ++j) {
            g.a[j] = s.at(i, j);
            g.b[j] = F.mul(s.at(i, P.r + j), theta);
        }
        g.c = d[i] % P.p;
        images.push_back(std::move(g));
    }
    return validate(P, std::move(images));
}

Automorphism theta_automorphism(const GroupParams& P, u64 theta_exp) {
    PrimeField F(P.p);
    theta_exp %= (P.p - 1);
    u64 lam = F.pow(smallest_primitive_root(P.p), theta_exp);
    std::vector<Element> images;
    for (std::size_t i = 0; i < P.r; ++i) images.push_back(generator_x(P, i));
    for (std::size_t i = 0; i < P.r; ++i) {
        Element g = identity(P);
        g.b[i] = lam;
        images.push_back(std::move(g));
    }
    return Automorphism{P, std::move(images), lam};
}

Automorphism inner(const GroupParams& P, const std::vector<u64>& e) {
    if (e.size() != 2 * P.r) throw ShapeError("inner twist vector");
    std::vector<Element> images;
    for (std::size_t i = 0; i < P.r; ++i) {
        Element g = generator_x(P, i);
        g.c = e[i] % P.p;
        images.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < P.r; ++i) {
        Element g = generator_y(P, i);
        g.c = e[P.r + i] % P.p;
        images.push_back(std::move(g));
    }
    return Automorphism{P, std::move(images), 1};
}

std::vector<u64> inner_twist(const Automorphism& phi) {
    const GroupParams& P = phi.params;
    PrimeField F(P.p);
    if (phi.lambda != 1 || !mat_eq(F, induced_matrix(phi), mat_identity(F, 2 * P.r)))
        throw ValidationError("automorphism is not inner");
    std::vector<u64> e;
    e.reserve(2 * P.r);
    for (const auto& g : phi.images) e.push_back(g.c);
    return e;
}

Automorphism inverse(const Automorphism& phi) {
    const GroupParams& P = phi.params;
    PrimeField F(P.p);
    // matrix-and-theta part: projection rows = rows of T^-1, zero twist
    Matrix<PrimeField> sinv = mat_inverse(F, induced_matrix(phi));
    std::vector<Element> images;
    for (std::size_t i = 0; i < 2 * P.r; ++i) {
        Element g = identity(P);
        for (std::size_t j = 0; j < P.r; ++j) {
            g.a[j] = sinv.at(i, j);
            g.b[j] = sinv.at(i, P.r + j);
        }
        images.push_back(std::move(g));
    }
    Automorphism rho = validate(P, std::move(images));
    // the defect rho.phi is inner; cancel its twist on the left
    Automorphism delta = compose(rho, phi);
    std::vector<u64> e = inner_twist(delta);
    for (auto& v : e) v = (P.p - v) % P.p;
    return compose(inner(P, e), rho);
}

Automorphism random_center_trivial(const GroupParams& P, DetRng& rng) {
    PrimeField F(P.p);
    std::size_t n = 2 * P.r;
    Matrix<PrimeField> s = mat_identity(F, n);
    auto form_with = [&](const std::vector<u64>& u, const std::vector<u64>& w) {
        u64 acc = 0;
        for (std::size_t k = 0; k < P.r; ++k) {
            acc = F.add(acc, F.mul(u[k], w[P.r + k]));
            acc = F.sub(acc, F.mul(u[P.r + k], w[k]));
        }
        return acc;
    };
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<u64> w(n);
        do {
            for (auto& v : w) v = rng.below(P.p);
        } while (std::all_of(w.begin(), w.end(), [](u64 v) { return v == 0; }));
        u64 c = 1 + rng.below(P.p - 1);
        // transvection v -> v + c B(v, w) w, as a row-action matrix
        Matrix<PrimeField> t = mat_identity(F, n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<u64> ei(n, 0);
            ei[i] = 1;
            u64 coeff = F.mul(c, form_with(ei, w));
            for (std::size_t j = 0; j < n; ++j)
                t.at(i, j) = F.add(t.at(i, j), F.mul(coeff, w[j]));
        }
        s = mat_mul(F, s, t);
    }
    std::vector<u64> d(n);
    for (auto& v : d) v = rng.below(P.p);
    return from_matrix_twist(P, s, d, 0);
}

} // namespace mor
