#pragma once

#include <vector>

#include "qtau/classical/wedge.hpp"
#include "qtau/evolve/evolution.hpp"
#include "qtau/evolve/schur.hpp"

namespace qtau {

enum class Parametrization { A, B, C };

inline char parametrization_name(Parametrization p) {
    return p == Parametrization::A ? 'A' : (p == Parametrization::B ? 'B' : 'C');
}

struct Evolutions {
    Matrix<Poly> U;
    Matrix<Poly> Ubar;
};

// Symbolic evolutions; copy distinguishes primed time sets.
inline Evolutions make_evolutions(Parametrization p, int N, int copy = 0, int miwa_count = 2) {
    switch (p) {
        case Parametrization::A:
            return {evolution_A(xi_symbols(N - 1, false, copy), N), evolution_A(xi_symbols(N - 1, true, copy), N, true)};
        case Parametrization::B:
            return {evolution_B(time_symbols(N - 1, false, copy), N), evolution_B(time_symbols(N - 1, true, copy), N, true)};
        case Parametrization::C: {
            std::vector<Poly> lam, lamb;
            for (int a = 1; a <= miwa_count; ++a) {
                lam.push_back(Poly::variable(miwa(a, 2 * copy)));
                lamb.push_back(Poly::variable(miwa(a, 2 * copy + 1)));
            }
            return {evolution_C(lam, N), evolution_C(lamb, N, true)};
        }
    }
    return {};
}

// <0_{F_n}| U^{x n} g^{x n} Ubar^{x n} |0_{F_n}> / n! with antisymmetrized vacua.
inline Poly tau_direct(const Evolutions& ev, const Matrix<Poly>& g, int n) {
    int N = static_cast<int>(g.rows());
    if (n == 0) return 1;
    if (n < 0 || n > N) throw DimensionMismatch("tau_direct: level out of range");
    std::size_t dim = 1;
    for (int k = 0; k < n; ++k) dim *= N;
    auto perms = permutations(n);
    std::vector<Poly> row(dim), col(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        Tuple t = unflat_index(a, N, n);
        for (const auto& P : perms) {
            Poly r = 1, c = 1;
            for (int m = 0; m < n; ++m) {
                r = r * ev.U(P[m], t[m]);
                c = c * ev.Ubar(t[m], P[m]);
            }
            if (inversions(P) % 2) {
                row[a] -= r;
                col[a] -= c;
            } else {
                row[a] += r;
                col[a] += c;
            }
        }
    }
    Poly sum;
    for (std::size_t a = 0; a < dim; ++a) {
        if (row[a].is_zero()) continue;
        Tuple ta = unflat_index(a, N, n);
        for (std::size_t b = 0; b < dim; ++b) {
            if (col[b].is_zero()) continue;
            Tuple tb = unflat_index(b, N, n);
            Poly ge = 1;
            for (int m = 0; m < n; ++m) ge = ge * g(ta[m], tb[m]);
            if (ge.is_zero()) continue;
            sum += row[a] * ge * col[b];
        }
    }
    return (Rational(1) / factorial(n)) * sum;
}

inline Matrix<Poly> tau1_matrix(const Evolutions& ev, const Matrix<Poly>& g) { return ev.U * g * ev.Ubar; }

// <m| U g Ubar |mbar>
inline Poly tau1_shift(const Evolutions& ev, const Matrix<Poly>& g, int m, int mbar) {
    int N = static_cast<int>(g.rows());
    if (m < 0 || m >= N || mbar < 0 || mbar >= N) throw IndexOutOfRange("tau1_shift: state out of range");
    Poly sum;
    for (int k = 0; k < N; ++k)
        for (int kb = 0; kb < N; ++kb) sum += ev.U(m, k) * g(k, kb) * ev.Ubar(kb, mbar);
    return sum;
}

// det_{0 <= m, mbar < n} tau1_shift(m, mbar)
inline Poly tau_det(const Evolutions& ev, const Matrix<Poly>& g, int n) {
    if (n == 0) return 1;
    Matrix<Poly> block(n, n);
    auto full = tau1_matrix(ev, g);
    for (int m = 0; m < n; ++m)
        for (int mb = 0; mb < n; ++mb) block(m, mb) = full(m, mb);
    return det_leibniz(block);
}

// Cauchy-Binet form in parametrization B with Schur polynomials.
inline Poly tau_schur_expand(const std::vector<Poly>& t, const std::vector<Poly>& tbar, const Matrix<Poly>& g, int n) {
    int N = static_cast<int>(g.rows());
    if (n == 0) return 1;
    auto P = schur_polynomials(t, N - 1);
    auto Pb = schur_polynomials(tbar, N - 1);
    auto at = [](const std::vector<Poly>& s, int k) { return k < 0 ? Poly() : s[k]; };
    auto sets = sorted_tuples(N, n);
    Poly sum;
    for (const auto& M : sets) {
        Matrix<Poly> left(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) left(i, j) = at(P, M[j] - i);
        Poly dl = det_leibniz(left);
        if (dl.is_zero()) continue;
        for (const auto& Mb : sets) {
            Matrix<Poly> right(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) right(i, j) = at(Pb, Mb[i] - j);
            Poly dr = det_leibniz(right);
            if (dr.is_zero()) continue;
            sum += dl * minor_det(g, M, Mb) * dr;
        }
    }
    return sum;
}

inline Monomial s_monomial(int k, bool bar, int copy = 0) {
    Monomial m;
    for (int i = 1; i <= k; ++i) m = monomial_mul(m, {{bar ? xibar(i, copy) : xi(i, copy), 1}});
    return m;
}

// Bordered-determinant formula in parametrization A; equals tau at level n + 1.
inline Poly tau_A_det(const Matrix<Poly>& g, int n) {
    int N = static_cast<int>(g.rows());
    if (n < 0 || n >= N) throw DimensionMismatch("tau_A_det: border out of range");
    Tuple head(n);
    for (int m = 0; m < n; ++m) head[m] = m;
    Poly sum;
    for (int k = n; k < N; ++k)
        for (int kb = n; kb < N; ++kb) {
            Tuple rows = head, cols = head;
            rows.push_back(k);
            cols.push_back(kb);
            Monomial s = monomial_mul(s_monomial(k, false), s_monomial(kb, true));
            sum += Poly::from_monomial(s) * minor_det(g, rows, cols);
        }
    return sum.divide_monomial(monomial_mul(s_monomial(n, false), s_monomial(n, true)));
}

// tau1^{m mbar} - (1 / (s_{m-1} sbar_{mbar-1})) d_{xi_m} d_{xibar_mbar} tau1 in parametrization A.
inline Poly tau_A_derivative_residual(const Matrix<Poly>& g, int m, int mbar) {
    int N = static_cast<int>(g.rows());
    auto ev = make_evolutions(Parametrization::A, N);
    Poly tau1 = tau1_shift(ev, g, 0, 0);
    Poly d = tau1;
    if (m > 0) d = d.derivative(xi(m)).divide_monomial(s_monomial(m - 1, false));
    if (mbar > 0) d = d.derivative(xibar(mbar)).divide_monomial(s_monomial(mbar - 1, true));
    return tau1_shift(ev, g, m, mbar) - d;
}

// Sign sigma with  d tau d' tau - tau d d' tau = sigma tau_{n+1} tau_{n-1}; fixed on N = 2.
inline constexpr int kHirotaSign = -1;

inline Poly hirota_lhs(const Poly& tau) {
    return tau.derivative(time_var(1)) * tau.derivative(time_bar(1)) -
           tau * tau.derivative(time_var(1)).derivative(time_bar(1));
}

// Residual of the first Toda equation in parametrization B with the given sign.
inline Poly hirota_residual(const Matrix<Poly>& g, int n, int sign = kHirotaSign) {
    int N = static_cast<int>(g.rows());
    if (n < 1 || n > N - 1) throw DimensionMismatch("hirota_residual: level out of range");
    auto ev = make_evolutions(Parametrization::B, N);
    Poly tn = tau_det(ev, g, n);
    return hirota_lhs(tn) - Rational(sign) * (tau_det(ev, g, n + 1) * tau_det(ev, g, n - 1));
}

}  // namespace qtau
