#pragma once

#include <vector>

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/poly.hpp"
#include "qtau/slnq/qwedge.hpp"

namespace qtau {

// Leibniz expansion; fine for the sizes used here (n <= 5).
template <class T>
T det_leibniz(const Matrix<T>& a) {
    int n = static_cast<int>(a.rows());
    if (a.cols() != a.rows()) throw DimensionMismatch("determinant of non-square matrix");
    T sum(0);
    for (const auto& p : permutations(n)) {
        T prod(1);
        for (int r = 0; r < n; ++r) prod = prod * a(r, p[r]);
        if (inversions(p) % 2) sum -= prod;
        else sum += prod;
    }
    return sum;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const Tuple& rows, const Tuple& cols) {
    Matrix<T> r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = a(rows[i], cols[j]);
    return r;
}

template <class T>
T minor_det(const Matrix<T>& a, const Tuple& rows, const Tuple& cols) {
    return det_leibniz(submatrix(a, rows, cols));
}

// Action of A on the n-th exterior power in the sorted-tuple basis (matrix of n x n minors).
template <class T>
Matrix<T> wedge_matrix(const Matrix<T>& a, int n) {
    int N = static_cast<int>(a.rows());
    auto basis = sorted_tuples(N, n);
    Matrix<T> r(basis.size(), basis.size());
    for (std::size_t K = 0; K < basis.size(); ++K)
        for (std::size_t J = 0; J < basis.size(); ++J) r(K, J) = minor_det(a, basis[K], basis[J]);
    return r;
}

inline Matrix<Poly> lift_rational(const Matrix<Rational>& g) {
    return g.map([](const Rational& x) { return Poly(x); });
}

inline Matrix<Poly> symbolic_g(int N) {
    Matrix<Poly> g(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g(i, j) = Poly::variable(g_entry(i, j));
    return g;
}

}  // namespace qtau
