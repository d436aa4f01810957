#pragma once

#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/rational.hpp"

namespace qtau {

struct SimpleRootFactor {
    int i;
    int j;
    Rational xi;
};

// Unit-diagonal upper-triangular check.
inline void require_unipotent(const Matrix<Rational>& u) {
    if (u.rows() != u.cols()) throw NotUnipotent("matrix is not square");
    for (std::size_t a = 0; a < u.rows(); ++a)
        for (std::size_t b = 0; b <= a; ++b)
            if (u(a, b) != (a == b ? 1 : 0)) throw NotUnipotent("matrix is not unipotent upper triangular");
}

// prod_{i=1}^{N-1} prod_{j=i+1}^{N} (1 + xi_ij T_{j-i}), factors in the listed order.
inline Matrix<Rational> rebuild_simple_roots(const std::vector<SimpleRootFactor>& factors, int N) {
    auto result = Matrix<Rational>::identity(N);
    for (const auto& f : factors) {
        auto e = Matrix<Rational>::identity(N);
        int root = f.j - f.i;
        e(root - 1, root) = f.xi;
        result = result * e;
    }
    return result;
}

// Solves U = prod_{i<j} (1 + xi_ij T_{j-i}) block by block. Block i is read off the last column
// of the remaining matrix, then divided out on the left.
inline std::vector<SimpleRootFactor> factorize_simple_roots(const Matrix<Rational>& u) {
    require_unipotent(u);
    int N = static_cast<int>(u.rows());
    std::vector<SimpleRootFactor> out;
    Matrix<Rational> v = u;
    for (int block = 1, M = N; M >= 2; ++block, --M) {
        std::vector<Rational> xs(M);
        xs[M - 1] = v(M - 2, M - 1);
        for (int k = M - 2; k >= 1; --k) {
            const Rational& num = v(k - 1, M - 1);
            const Rational& den = v(k, M - 1);
            if (den != 0) xs[k] = num / den;
            else if (num == 0) xs[k] = 0;
            else throw SingularFactorization("simple-root factorization has no solution with this ordering");
        }
        auto a = Matrix<Rational>::identity(M);
        for (int k = 1; k <= M - 1; ++k) {
            auto e = Matrix<Rational>::identity(M);
            e(k - 1, k) = xs[k];
            a = a * e;
            out.push_back({block, block + k, xs[k]});
        }
        // a is unipotent; invert by back substitution.
        auto inv = Matrix<Rational>::identity(M);
        for (int c = 0; c < M; ++c)
            for (int r = c - 1; r >= 0; --r) {
                Rational s = 0;
                for (int k = r + 1; k <= c; ++k) s += a(r, k) * inv(k, c);
                inv(r, c) = -s;
            }
        Matrix<Rational> rest = inv * v;
        for (int r = 0; r < M - 1; ++r)
            if (rest(r, M - 1) != 0) throw SingularFactorization("simple-root factorization has no solution with this ordering");
        Matrix<Rational> next(M - 1, M - 1);
        for (int r = 0; r < M - 1; ++r)
            for (int c = 0; c < M - 1; ++c) next(r, c) = rest(r, c);
        v = next;
    }
    return out;
}

inline Rational det_rational(Matrix<Rational> a) {
    std::size_t n = a.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
            d = -d;
        }
        d *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = a(r, c) / a(c, c);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return d;
}

// Minors on consecutive rows i..i+r-1 and the last r columns. When none vanishes every division
// in factorize_simple_roots is by a nonzero number.
inline bool generic_for_factorization(const Matrix<Rational>& u) {
    int N = static_cast<int>(u.rows());
    for (int r = 1; r < N; ++r)
        for (int i = 0; i + r < N; ++i) {
            Matrix<Rational> m(r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) m(a, b) = u(i + a, N - r + b);
            if (det_rational(m) == 0) return false;
        }
    return true;
}

}  // namespace qtau
