#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "mor/errors.hpp"
#include "mor/nt.hpp"

namespace mor {

// Dense polynomial over F_p, lowest degree first, trailing zeros trimmed.
using Poly = std::vector<u64>;

/// F_p for an odd machine-word prime, p <= 2^20.
class PrimeField {
public:
    using Elem = u64;

    explicit PrimeField(u64 p);

    u64 p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const {
        long long m = v % (long long)p_;
        return (u64)(m < 0 ? m + (long long)p_ : m);
    }
    Elem add(Elem a, Elem b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return a * b % p_; } // p < 2^20, no overflow
    Elem inv(Elem a) const;
    Elem pow(Elem a, u128 e) const;
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

private:
    u64 p_;
};

// ---- polynomial arithmetic over F_p ----

int poly_deg(const Poly& f); // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& F, const Poly& a, u64 c);
// returns (quotient, remainder); divisor must be nonzero
std::pair<Poly, Poly> poly_divmod(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_monic(const PrimeField& F, const Poly& a);
Poly poly_gcd(const PrimeField& F, Poly a, Poly b); // monic
Poly poly_derivative(const PrimeField& F, const Poly& a);
u64 poly_eval(const PrimeField& F, const Poly& a, u64 x);
Poly poly_powmod(const PrimeField& F, Poly a, u128 e, const Poly& m);
bool poly_eq(const Poly& a, const Poly& b);
bool poly_is_irreducible(const PrimeField& F, const Poly& f);

/// F_{p^k} = F_p[t]/(m), m monic irreducible of degree k >= 1.
class ExtField {
public:
    using Elem = Poly; // degree < k, trimmed

    ExtField(PrimeField base, Poly modulus);

    const PrimeField& base() const { return base_; }
    const Poly& modulus() const { return modulus_; }
    std::size_t degree() const { return (std::size_t)poly_deg(modulus_); }
    /// p^k as u64; throws FactoringIncomplete when it does not fit.
    u64 order() const;

    Elem zero() const { return {}; }
    Elem one() const { return Poly{1}; }
    Elem gen() const; // residue class of t
    Elem from_base(u64 v) const { return v % base_.p() ? Poly{v % base_.p()} : Poly{}; }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base_, a, b); }
    Elem neg(const Elem& a) const { return poly_sub(base_, {}, a); }
    Elem mul(const Elem& a, const Elem& b) const {
        return poly_mod(base_, poly_mul(base_, a, b), modulus_);
    }
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, u128 e) const { return poly_powmod(base_, a, e, modulus_); }
    bool is_zero(const Elem& a) const { return a.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

private:
    PrimeField base_;
    Poly modulus_;
};

/// Squarefree + distinct-degree + Cantor-Zassenhaus factorization (p odd).
/// Factors are monic irreducible, sorted (degree, then coefficients);
/// their product times the leading coefficient of f equals f.
std::vector<std::pair<Poly, unsigned>> factor_poly(const PrimeField& F, const Poly& f);

// ---- dense matrices over an arbitrary coefficient field ----

template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::Elem> e;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, typename F::Elem fill)
        : rows(r), cols(c), e(r * c, std::move(fill)) {}

    typename F::Elem& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const typename F::Elem& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

template <class F>
Matrix<F> mat_identity(const F& K, std::size_t n) {
    Matrix<F> m(n, n, K.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
}

template <class F>
bool mat_eq(const F& K, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (!K.eq(a.e[i], b.e[i])) return false;
    return true;
}

template <class F>
Matrix<F> mat_mul(const F& K, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols != b.rows) throw ShapeError("mat_mul");
    Matrix<F> r(a.rows, b.cols, K.zero());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (K.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = K.add(r.at(i, j), K.mul(aik, b.at(k, j)));
        }
    return r;
}

template <class F>
Matrix<F> mat_pow(const F& K, Matrix<F> a, u128 e) {
    if (a.rows != a.cols) throw ShapeError("mat_pow");
    Matrix<F> r = mat_identity(K, a.rows);
    while (e) {
        if (e & 1) r = mat_mul(K, r, a);
        a = mat_mul(K, a, a);
        e >>= 1;
    }
    return r;
}

// Gauss-Jordan; row-major first-nonzero pivot scan (deterministic).
template <class F>
Matrix<F> mat_inverse(const F& K, const Matrix<F>& a) {
    if (a.rows != a.cols) throw ShapeError("mat_inverse");
    std::size_t n = a.rows;
    Matrix<F> m = a;
    Matrix<F> inv = mat_identity(K, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && K.is_zero(m.at(piv, col))) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        auto d = K.inv(m.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = K.mul(m.at(col, j), d);
            inv.at(col, j) = K.mul(inv.at(col, j), d);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || K.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
                inv.at(i, j) = K.sub(inv.at(i, j), K.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

template <class F>
typename F::Elem mat_det(const F& K, const Matrix<F>& a) {
    if (a.rows != a.cols) throw ShapeError("mat_det");
    std::size_t n = a.rows;
    Matrix<F> m = a;
    auto det = K.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && K.is_zero(m.at(piv, col))) ++piv;
        if (piv == n) return K.zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = K.neg(det);
        }
        det = K.mul(det, m.at(col, col));
        auto d = K.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (K.is_zero(m.at(i, col))) continue;
            auto f = K.mul(m.at(i, col), d);
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
        }
    }
    return det;
}

/// Basis of the right null space {v : Av = 0}, free columns in standard order.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& K, const Matrix<F>& a) {
    std::size_t rows = a.rows, cols = a.cols;
    Matrix<F> m = a;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && K.is_zero(m.at(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto d = K.inv(m.at(r, col));
        for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = K.mul(m.at(r, j), d);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || K.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(r, j)));
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Elem> v(cols, K.zero());
        v[free] = K.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = K.neg(m.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial det(tI - A), monic, by the division-free
/// Berkowitz method (safe in small characteristic).
Poly char_poly(const PrimeField& F, const Matrix<PrimeField>& a);

} // namespace mor
