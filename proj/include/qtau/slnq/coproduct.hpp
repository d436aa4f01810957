#pragma once

#include <vector>

#include "qtau/ncalg/ncpoly.hpp"
#include "qtau/slnq/generators.hpp"
#include "qtau/slnq/qwedge.hpp"

namespace qtau {

inline Matrix<NCPoly> lift(const Matrix<ScalarQ>& m) {
    return m.map([](const ScalarQ& s) { return NCPoly(s); });
}

// Slot m (0-based) of an n-fold tensor product: left^{(m)} x X x right^{(n-m-1)}.
inline Matrix<ScalarQ> slot_operator(const Matrix<ScalarQ>& left, const Matrix<ScalarQ>& x,
                                     const Matrix<ScalarQ>& right, int m, int n) {
    std::vector<Matrix<ScalarQ>> f;
    for (int k = 0; k < n; ++k) f.push_back(k < m ? left : (k == m ? x : right));
    return kron_all(f);
}

// X^{(m)} = I x ... x T_i x K_i x ... x K_i with K_i = q^{-2H_i}
inline Matrix<ScalarQ> raise_slot(int N, int i, int m, int n) {
    return slot_operator(Matrix<ScalarQ>::identity(N), generator_matrix(N, GeneratorKind::Raise, i),
                         k_matrix(N, i, -1), m, n);
}

// Y^{(m)} = q^{2H_i} x ... x T_{-i} x I x ... x I
inline Matrix<ScalarQ> lower_slot(int N, int i, int m, int n) {
    return slot_operator(k_matrix(N, i, +1), generator_matrix(N, GeneratorKind::Lower, i),
                         Matrix<ScalarQ>::identity(N), m, n);
}

// Delta^{n-1} of T_i, T_{-i} or H_i on F_1^{x n}.
inline Matrix<ScalarQ> coproduct_power(int N, GeneratorKind kind, int i, int n) {
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) dim *= N;
    Matrix<ScalarQ> r(dim, dim);
    auto id = Matrix<ScalarQ>::identity(N);
    for (int m = 0; m < n; ++m) {
        switch (kind) {
            case GeneratorKind::Raise: r += raise_slot(N, i, m, n); break;
            case GeneratorKind::Lower: r += lower_slot(N, i, m, n); break;
            case GeneratorKind::Cartan:
                r += slot_operator(id, generator_matrix(N, GeneratorKind::Cartan, i), id, m, n);
                break;
            default: throw IndexOutOfRange("coproduct_power: unsupported generator kind");
        }
    }
    return r;
}

// Delta^{n-1} U(xi) = prod_m U^{(m)}, U^{(m)} = prod_{i ascending} (1 + xi_i X_i^{(m)}).
inline Matrix<NCPoly> coproduct_evolution_A(const AlphabetPtr& alpha, const std::vector<Symbol>& xis, int N, int n) {
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) dim *= N;
    auto result = Matrix<NCPoly>::identity(dim);
    for (int m = 0; m < n; ++m)
        for (int i = 1; i <= N - 1; ++i) {
            auto f = Matrix<NCPoly>::identity(dim) + lift(raise_slot(N, i, m, n)).scaled_left(NCPoly::generator(alpha, xis[i - 1]));
            result = result * f;
        }
    return result;
}

// Delta^{n-1} Ubar(xibar) = prod_m Ubar^{(m)}, Ubar^{(m)} = prod_{i descending} (1 + xibar_i Y_i^{(m)}).
inline Matrix<NCPoly> coproduct_evolution_A_bar(const AlphabetPtr& alpha, const std::vector<Symbol>& xibars, int N, int n) {
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) dim *= N;
    auto result = Matrix<NCPoly>::identity(dim);
    for (int m = 0; m < n; ++m)
        for (int i = N - 1; i >= 1; --i) {
            auto f = Matrix<NCPoly>::identity(dim) + lift(lower_slot(N, i, m, n)).scaled_left(NCPoly::generator(alpha, xibars[i - 1]));
            result = result * f;
        }
    return result;
}

// Entry ((k_1..k_n),(l_1..l_n)) = g_{k_1 l_1} g_{k_2 l_2} ... g_{k_n l_n}, slot 1 leftmost.
template <class T>
Matrix<T> tensor_action(const Matrix<T>& g, int n) {
    int N = static_cast<int>(g.rows());
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) dim *= N;
    Matrix<T> r(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        Tuple ka = unflat_index(a, N, n);
        for (std::size_t b = 0; b < dim; ++b) {
            Tuple kb = unflat_index(b, N, n);
            T prod(1);
            for (int m = 0; m < n; ++m) prod = prod * g(ka[m], kb[m]);
            r(a, b) = prod;
        }
    }
    return r;
}

}  // namespace qtau
