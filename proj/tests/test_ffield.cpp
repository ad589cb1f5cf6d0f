#include <doctest.h>

#include "mor/ffield.hpp"
#include "oracles.hpp"

using namespace mor;

TEST_CASE("prime field basics") {
    PrimeField F(3);
    CHECK(F.add(2, 2) == 1);
    CHECK(F.mul(2, 2) == 1);
    CHECK(F.inv(2) == 2);
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(PrimeField(2), Error);
    CHECK_THROWS_AS(PrimeField((1ULL << 20) + 7), Error);
}

TEST_CASE("extension field F_9 examples") {
    PrimeField F3(3);
    ExtField F9(F3, Poly{1, 0, 1}); // t^2 + 1
    Poly t_plus_1{1, 1};
    // (t+1)^2 = 2t, cross-checked by schoolbook multiply-and-reduce
    Poly sq = F9.mul(t_plus_1, t_plus_1);
    CHECK(sq == Poly{0, 2});
    CHECK(sq == oracle::schoolbook_mulmod(F3, t_plus_1, t_plus_1, F9.modulus()));
    // inv(t) = 2t: t * 2t = 2t^2 = 1
    Poly t{0, 1};
    CHECK(F9.inv(t) == Poly{0, 2});
    CHECK(F9.mul(t, Poly{0, 2}) == F9.one());
    CHECK_THROWS_AS(F9.inv(Poly{}), DivisionByZero);
}

TEST_CASE("extension modulus must be monic irreducible") {
    PrimeField F3(3);
    CHECK_THROWS_AS(ExtField(F3, Poly{2, 0, 1}), Error); // t^2+2 = (t+1)(t+2)
    CHECK_THROWS_AS(ExtField(F3, Poly{1, 0, 2}), Error); // not monic
    CHECK_NOTHROW(ExtField(F3, Poly{1, 1}));             // degree 1 is fine
}

TEST_CASE("field axioms on random triples") {
    for (u64 p : {3, 5, 7, 11}) {
        PrimeField F(p);
        DetRng rng(p);
        for (int i = 0; i < 200; ++i) {
            u64 a = rng.below(p), b = rng.below(p), c = rng.below(p);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

namespace {
Poly find_irreducible(const PrimeField& F, std::size_t k) {
    DetRng rng(17 * F.p() + k);
    for (;;) {
        Poly f(k + 1);
        for (std::size_t i = 0; i < k; ++i) f[i] = rng.below(F.p());
        f[k] = 1;
        if (poly_is_irreducible(F, f)) return f;
    }
}
} // namespace

TEST_CASE("extension field axioms and Lagrange") {
    for (u64 p : {3, 5, 7, 11}) {
        PrimeField F(p);
        for (std::size_t k : {1, 2, 3, 4}) {
            ExtField E(F, find_irreducible(F, k));
            DetRng rng(100 * p + k);
            u64 q1 = E.order() - 1;
            for (int i = 0; i < 25; ++i) {
                Poly a(k), b(k), c(k);
                for (auto& v : a) v = rng.below(p);
                for (auto& v : b) v = rng.below(p);
                for (auto& v : c) v = rng.below(p);
                a = poly_trim(std::move(a));
                b = poly_trim(std::move(b));
                c = poly_trim(std::move(c));
                CHECK(E.mul(E.mul(a, b), c) == E.mul(a, E.mul(b, c)));
                CHECK(E.mul(a, E.add(b, c)) == E.add(E.mul(a, b), E.mul(a, c)));
                if (!E.is_zero(a)) {
                    CHECK(E.mul(a, E.inv(a)) == E.one());
                    CHECK(E.pow(a, q1) == E.one());
                }
            }
        }
    }
}

TEST_CASE("matrix ops over F_3") {
    PrimeField F(3);
    Matrix<PrimeField> t(2, 2, 0);
    t.at(0, 0) = 0;
    t.at(0, 1) = 1;
    t.at(1, 0) = 2;
    t.at(1, 1) = 0;
    Matrix<PrimeField> t2 = mat_pow(F, t, 2);
    CHECK(t2.at(0, 0) == 2);
    CHECK(t2.at(0, 1) == 0);
    CHECK(t2.at(1, 0) == 0);
    CHECK(t2.at(1, 1) == 2);
    CHECK(mat_det(F, t) == 1); // ad - bc = -2 = 1 mod 3
    Matrix<PrimeField> id = mat_identity(F, 2);
    CHECK(mat_eq(F, mat_mul(F, id, t), t));
    CHECK(mat_eq(F, mat_mul(F, t, mat_inverse(F, t)), id));
    Matrix<PrimeField> sing(2, 2, 1);
    CHECK_THROWS_AS(mat_inverse(F, sing), SingularMatrix);
    Matrix<PrimeField> wide(2, 3, 0);
    CHECK_THROWS_AS(mat_mul(F, wide, t), ShapeError);
}

TEST_CASE("char_poly examples") {
    PrimeField F3(3);
    Matrix<PrimeField> t(2, 2, 0);
    t.at(0, 1) = 1;
    t.at(1, 0) = 2;
    CHECK(char_poly(F3, t) == Poly{1, 0, 1}); // t^2 + 1

    PrimeField F5(5);
    CHECK(char_poly(F5, mat_identity(F5, 2)) == Poly{1, 3, 1}); // (t-1)^2

    Matrix<PrimeField> z(3, 3, 0);
    CHECK(char_poly(F3, z) == Poly{0, 0, 0, 1}); // t^3
}

TEST_CASE("Cayley-Hamilton on random matrices") {
    for (u64 p : {3, 5, 11}) {
        PrimeField F(p);
        DetRng rng(p + 1);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                Matrix<PrimeField> a(n, n, 0);
                for (auto& v : a.e) v = rng.below(p);
                Poly cp = char_poly(F, a);
                REQUIRE(poly_deg(cp) == (int)n);
                CHECK(cp.back() == 1);
                // Horner over matrices
                Matrix<PrimeField> acc(n, n, 0);
                for (std::size_t i = cp.size(); i-- > 0;) {
                    acc = mat_mul(F, acc, a);
                    for (std::size_t d = 0; d < n; ++d)
                        acc.at(d, d) = F.add(acc.at(d, d), cp[i]);
                }
                CHECK(mat_eq(F, acc, Matrix<PrimeField>(n, n, 0)));
            }
        }
    }
}

TEST_CASE("factor_poly examples over F_3") {
    PrimeField F(3);
    auto f1 = factor_poly(F, Poly{1, 0, 1}); // irreducible: no roots 0,1,2
    for (u64 x = 0; x < 3; ++x) CHECK(poly_eval(F, Poly{1, 0, 1}, x) != 0);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == Poly{1, 0, 1});
    CHECK(f1[0].second == 1);

    auto f2 = factor_poly(F, Poly{2, 0, 1}); // t^2 - 1 = (t+1)(t+2)
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first == Poly{1, 1});
    CHECK(f2[1].first == Poly{2, 1});

    auto f3 = factor_poly(F, Poly{0, 0, 1}); // t^2
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == Poly{0, 1});
    CHECK(f3[0].second == 2);
}

TEST_CASE("factor_poly re-multiplies and factors are irreducible") {
    for (u64 p : {3, 5, 7}) {
        PrimeField F(p);
        DetRng rng(31 * p);
        for (int trial = 0; trial < 40; ++trial) {
            Poly f(1 + rng.below(7) + 1);
            for (auto& v : f) v = rng.below(p);
            f = poly_trim(std::move(f));
            if (poly_deg(f) < 1) continue;
            auto factors = factor_poly(F, f);
            Poly prod{f.back()};
            for (const auto& [g, mult] : factors) {
                CHECK(poly_is_irreducible(F, g));
                for (unsigned i = 0; i < mult; ++i) prod = poly_mul(F, prod, g);
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("kernel_basis") {
    PrimeField F5(5);
    CHECK(kernel_basis(F5, mat_identity(F5, 3)).empty());

    PrimeField F3(3);
    Matrix<PrimeField> z(2, 2, 0);
    CHECK(kernel_basis(F3, z).size() == 2);

    // (T - tI) over F_9 has a one-dimensional kernel
    ExtField F9(F3, Poly{1, 0, 1});
    Matrix<ExtField> m(2, 2, F9.zero());
    Poly neg_t = F9.neg(F9.gen());
    m.at(0, 0) = neg_t;
    m.at(0, 1) = F9.from_base(1);
    m.at(1, 0) = F9.from_base(2);
    m.at(1, 1) = neg_t;
    auto basis = kernel_basis(F9, m);
    REQUIRE(basis.size() == 1);
    for (const auto& v : basis) {
        // Av = 0 exactly
        for (std::size_t i = 0; i < 2; ++i) {
            Poly s = F9.zero();
            for (std::size_t j = 0; j < 2; ++j) s = F9.add(s, F9.mul(m.at(i, j), v[j]));
            CHECK(F9.is_zero(s));
        }
    }
}
