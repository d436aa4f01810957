#pragma once

#include <vector>

#include "qtau/evolve/schur.hpp"
#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/ncpoly.hpp"
#include "qtau/slnq/generators.hpp"

namespace qtau {

inline Matrix<Poly> classical_matrix(const Matrix<ScalarQ>& m) {
    return m.map([](const ScalarQ& s) { return Poly(s.at_one()); });
}

// exp(X) for strictly triangular X (X^N = 0).
inline Matrix<Poly> nilpotent_exp(const Matrix<Poly>& x) {
    auto result = Matrix<Poly>::identity(x.rows());
    auto power = result;
    for (std::size_t m = 1; m < x.rows(); ++m) {
        power = power * x;
        result += power.scaled_left(Poly(Rational(1) / factorial(static_cast<int>(m))));
    }
    return result;
}

// U(t) = exp(sum_k t_k T_+^{(k)}), or Ubar(tbar) with T_-^{(k)} when bar is set.
inline Matrix<Poly> evolution_B(const std::vector<Poly>& t, int N, bool bar = false) {
    Matrix<Poly> x(N, N);
    for (int k = 1; k <= N - 1 && k <= static_cast<int>(t.size()); ++k) {
        auto unit = classical_matrix(generator_matrix(N, bar ? GeneratorKind::LowerHeight : GeneratorKind::RaiseHeight, k));
        x += unit.scaled_left(t[k - 1]);
    }
    return nilpotent_exp(x);
}

// U = prod_{i ascending} (1 + xi_i T_i); Ubar = prod_{i descending} (1 + xibar_i T_{-i}).
inline Matrix<Poly> evolution_A(const std::vector<Poly>& xi, int N, bool bar = false) {
    auto id = Matrix<Poly>::identity(N);
    auto result = id;
    for (int step = 1; step <= N - 1; ++step) {
        int i = bar ? N - step : step;
        auto unit = classical_matrix(generator_matrix(N, bar ? GeneratorKind::Lower : GeneratorKind::Raise, i));
        result = result * (id + unit.scaled_left(xi[i - 1]));
    }
    return result;
}

inline Matrix<NCPoly> evolution_A(const AlphabetPtr& alpha, const std::vector<Symbol>& xi, int N, bool bar = false) {
    auto id = Matrix<NCPoly>::identity(N);
    auto result = id;
    for (int step = 1; step <= N - 1; ++step) {
        int i = bar ? N - step : step;
        auto unit = generator_matrix(N, bar ? GeneratorKind::Lower : GeneratorKind::Raise, i)
                        .map([](const ScalarQ& s) { return NCPoly(s); });
        result = result * (id + unit.scaled_left(NCPoly::generator(alpha, xi[i - 1])));
    }
    return result;
}

// Miwa form: prod_a prod_{i ascending} exp(lambda_a T_i).
inline Matrix<Poly> evolution_C(const std::vector<Poly>& lambdas, int N, bool bar = false) {
    auto id = Matrix<Poly>::identity(N);
    auto result = id;
    for (const auto& lam : lambdas) {
        std::vector<Poly> xi(N - 1, lam);
        result = result * evolution_A(xi, N, bar);
    }
    return result;
}

// t_k = (1/k) sum_a lambda_a^k
inline std::vector<Poly> miwa_times(const std::vector<Poly>& lambdas, int N) {
    std::vector<Poly> t;
    for (int k = 1; k <= N - 1; ++k) {
        Poly s;
        for (const auto& lam : lambdas) {
            Poly p = 1;
            for (int e = 0; e < k; ++e) p = p * lam;
            s += p;
        }
        t.push_back(Rational(1, k) * s);
    }
    return t;
}

inline std::vector<Poly> xi_symbols(int count, bool bar = false, int copy = 0) {
    std::vector<Poly> x;
    for (int i = 1; i <= count; ++i) x.push_back(Poly::variable(bar ? xibar(i, copy) : xi(i, copy)));
    return x;
}

}  // namespace qtau
