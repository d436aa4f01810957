#pragma once

#include <string>
#include <vector>

#include "qtau/classical/fermion.hpp"
#include "qtau/quantum/qtau.hpp"

namespace qtau {

enum class Placement { L, R };

inline char placement_name(Placement p) { return p == Placement::L ? 'L' : 'R'; }

// Phi^{+-,R}_i = q^{-N_{<i}} psi^{+-}_i and Phi^{+-,L}_i = q^{+N_{<i}} psi^{+-}_i, where N_{<i} counts the
// occupied modes below i. Maps level n to level n +- 1 in the sorted-tuple basis.
inline Matrix<ScalarQ> intertwiner_matrix(int N, int i, FermionKind kind, Placement side, int n) {
    auto psi = fermion_matrix(N, i, kind, n);
    auto src = sorted_tuples(N, n);
    int sign = side == Placement::L ? 1 : -1;
    Matrix<ScalarQ> m(psi.rows(), psi.cols());
    for (std::size_t c = 0; c < psi.cols(); ++c) {
        int below = 0;
        for (int j : src[c])
            if (j < i - 1) ++below;
        for (std::size_t r = 0; r < psi.rows(); ++r)
            if (psi(r, c) != 0) m(r, c) = ScalarQ::monomial(sign * below, psi(r, c));
    }
    return m;
}

inline Matrix<NCPoly> lift_scalar(const Matrix<ScalarQ>& m) {
    return m.map([](const ScalarQ& s) { return NCPoly(s); });
}

// sum_i Phi^{+,a}_i x Phi^{-,b}_i : F_n x F_m -> F_{n+1} x F_{m-1}
inline Matrix<NCPoly> gamma_q(int N, int n, int m, Placement plus, Placement minus) {
    Matrix<NCPoly> sum;
    for (int i = 1; i <= N; ++i) {
        auto k = lift_scalar(kron(intertwiner_matrix(N, i, FermionKind::Create, plus, n),
                                  intertwiner_matrix(N, i, FermionKind::Annihilate, minus, m)));
        if (i == 1) sum = k;
        else sum += k;
    }
    return sum;
}

struct GammaResult {
    Placement plus, minus;
    int n, m;
    std::size_t defect;   // number of differing entries
    std::string witness;  // first differing entry, empty when none
};

// Gamma_q (g x g) = (g x g) Gamma_q on F_n x F_m with the Gauss element, slot-ordered.
inline GammaResult gamma_q_check(const QuantumSetup& S, const QWedgeData& W, int n, int m, Placement plus,
                                 Placement minus) {
    int N = S.N;
    if (n < 0 || n + 1 > N || m < 1 || m > N) throw DimensionMismatch("gamma_q_check: invalid levels");
    auto G = gamma_q(N, n, m, plus, minus);
    auto lhs = G * kron(W.g[n], W.g[m]);
    auto rhs = kron(W.g[n + 1], W.g[m - 1]) * G;
    GammaResult res{plus, minus, n, m, 0, {}};
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c) {
            NCPoly d = lhs(r, c) - rhs(r, c);
            if (d.is_zero()) continue;
            if (res.defect++ == 0) res.witness = d.to_string();
        }
    return res;
}

}  // namespace qtau
