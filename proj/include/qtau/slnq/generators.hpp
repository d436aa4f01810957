#pragma once

#include <vector>

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/scalar_q.hpp"
#include "qtau/slnq/root_data.hpp"

namespace qtau {

enum class GeneratorKind { Raise, Lower, Cartan, RaiseHeight, LowerHeight };

// T_i = e_{i-1,i}, T_{-i} = e_{i,i-1}, H_i = diag(h_{i,.}), T_(+/-)^(k) = units on the k-th diagonal.
inline Matrix<ScalarQ> generator_matrix(int N, GeneratorKind kind, int index) {
    RootData rd(N);
    Matrix<ScalarQ> m(N, N);
    switch (kind) {
        case GeneratorKind::Raise:
            rd.check_root(index);
            m(index - 1, index) = 1;
            break;
        case GeneratorKind::Lower:
            rd.check_root(index);
            m(index, index - 1) = 1;
            break;
        case GeneratorKind::Cartan:
            rd.check_root(index);
            for (int j = 0; j < N; ++j) m(j, j) = rd.h(index, j);
            break;
        case GeneratorKind::RaiseHeight:
            rd.check_root(index);
            for (int j = 0; j + index < N; ++j) m(j, j + index) = 1;
            break;
        case GeneratorKind::LowerHeight:
            rd.check_root(index);
            for (int j = 0; j + index < N; ++j) m(j + index, j) = 1;
            break;
    }
    return m;
}

// q^{sign * 2 H_i}
inline Matrix<ScalarQ> k_matrix(int N, int i, int sign) {
    RootData rd(N);
    Matrix<ScalarQ> m(N, N);
    for (int j = 0; j < N; ++j) m(j, j) = ScalarQ::q_power(sign * rd.two_h(i, j));
    return m;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero_entry(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

template <class T>
Matrix<T> kron_all(const std::vector<Matrix<T>>& factors) {
    Matrix<T> r = Matrix<T>::identity(1);
    for (const auto& f : factors) r = kron(r, f);
    return r;
}

}  // namespace qtau
