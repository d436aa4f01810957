#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtau/quantum/intertwiner.hpp"
#include "qtau/quantum/qdiff.hpp"

namespace qtau {

struct QRelationCheck {
    std::string label;
    NCPoly residual;
};

// Baker-Akhiezer functions in parametrization A built from wedge-level matrices:
//   Psi^{+-,i}_n = <0_{n+-1}| U Phi^{+-}_i g Ubar |0_n>,  Psibar^{+-,i}_n = <0_n| U g Phi^{+-}_i Ubar |0_{n-+1}>.
struct QBaker {
    const QuantumSetup* setup;
    QWedgeData w;
    Placement plus = Placement::R;
    Placement minus = Placement::L;
    int copy = 0;

    QBaker(const QuantumSetup& S, int copy_ = 0, Placement p = Placement::R, Placement m = Placement::L)
        : setup(&S), w(S, copy_), plus(p), minus(m), copy(copy_) {}

    int N() const { return setup->N; }
    NCPoly tau(int n) const { return w.tau(n); }

    Matrix<NCPoly> phi(int i, FermionKind kind, int n) const {
        return lift_scalar(intertwiner_matrix(N(), i, kind, kind == FermionKind::Create ? plus : minus, n));
    }

    NCPoly psi(int i, FermionKind kind, int n) const {
        int top = kind == FermionKind::Create ? n + 1 : n - 1;
        if (top < 0 || top > N() || n < 0 || n > N()) return {};
        return (w.U[top] * phi(i, kind, n) * w.g[n] * w.Ubar[n])(0, 0);
    }

    NCPoly psi_bar(int i, FermionKind kind, int n) const {
        int bottom = kind == FermionKind::Create ? n - 1 : n + 1;
        if (bottom < 0 || bottom > N() || n < 0 || n > N()) return {};
        return (w.U[n] * w.g[n] * phi(i, kind, bottom) * w.Ubar[bottom])(0, 0);
    }
};

// Relations of the quantum parametrization-A list at level n. With printed = true every line is
// taken as displayed (the undeclared index in the psi^- line read as i = k); otherwise the forms
// that hold for the placement (Phi^{+,R}, Phi^{-,L}) are used.
inline std::vector<QRelationCheck> qbaker_checks(const QBaker& B, int n, bool printed = true) {
    const QuantumSetup& S = *B.setup;
    int N = S.N;
    int c = B.copy;
    NCPoly tau = B.tau(n);
    auto X = [&](int j) { return (j >= 1 && j <= N - 1) ? S.xi_gen(j, c) : NCPoly(); };
    auto D = [&](const NCPoly& p, int j) { return (j >= 1 && j <= N - 1) ? d_xi(p, j, c) : NCPoly(); };
    // s_b^{-1} s_a p for a <= b
    auto s_div = [&](NCPoly p, int a, int b) {
        for (int k = a + 1; k <= b; ++k)
            if (k >= 1 && k <= N - 1) p = p.side_divide(xi(k, c), Side::Left);
        return p;
    };
    // s_a^{-1} s_b p for a <= b
    auto s_mul = [&](const NCPoly& p, int a, int b) {
        NCPoly w(1);
        for (int k = a + 1; k <= b; ++k) w = w * X(k);
        return w * p;
    };
    auto qp = [](int k) { return ScalarQ::q_power(k); };
    auto id = [&](const std::string& s, int k) {
        return s + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    };
    std::vector<QRelationCheck> out;
    if (n >= 1 && n + 1 <= N) {
        NCPoly base = tau - X(n) * D(tau, n);
        int e_up = printed ? n + 1 : -n;
        int e_diag = printed ? n : 1 - n;
        std::string pre = printed ? "q^{n+1}" : "q^{-n}";
        for (int k = 1; n + k + 1 <= N; ++k) {
            NCPoly tw = base;
            for (int j = n + 1; j <= n + k - 1; ++j) tw = m_twist(tw, j, 1, c);
            out.push_back({id("Psi+[n+k+1] = " + pre + " s_n^-1 s_{n+k} M+ (tau - xi_n D_n tau)", n + k + 1),
                           B.psi(n + k + 1, FermionKind::Create, n) - qp(e_up) * s_mul(tw, n, n + k)});
        }
        out.push_back({id("Psi+[n+1] = " + pre + " (tau - xi_n D_n tau)", n + 1),
                       B.psi(n + 1, FermionKind::Create, n) - qp(e_up) * base});
        out.push_back({id(std::string("Psi+[n] = -") + (printed ? "q^n" : "q^{1-n}") + " D_n tau", n),
                       B.psi(n, FermionKind::Create, n) + qp(e_diag) * D(tau, n)});
    }
    if (n >= 1) {
        auto reduced = [&](int k) {
            NCPoly p = B.psi(k, FermionKind::Annihilate, n);
            return p - X(n - 1) * D(p, n - 1);
        };
        int e = printed ? n - 2 : n - 1;
        int sgn = printed ? 1 : -1;
        for (int k = n + 1; k <= N; ++k) {
            NCPoly t1 = s_div(D(tau, k - 1), n - 1, k - 2);
            NCPoly t2 = s_div(X(k) * D(tau, k), n - 1, k - 1);
            NCPoly rhs = printed ? qp(e) * (t1 + t2) : qp(k == n + 1 ? n - 1 : n - 2) * t1 - qp(n - 1) * t2;
            out.push_back({id(printed ? "Psi-[k] - xi_{n-1} D Psi-[k] = q^{n-2} (s^-1 s D_{k-1} tau + s^-1 s xi_k D_k tau)"
                                      : "Psi-[k] - xi_{n-1} D Psi-[k] = q^{n-2+[k=n+1]} s^-1 s D_{k-1} tau - q^{n-1} s^-1 s xi_k D_k tau",
                              k),
                           reduced(k) - rhs});
        }
        NCPoly rhs = printed ? qp(n - 2) * tau + X(n) * D(tau, n) : qp(n - 1) * (tau - X(n) * D(tau, n));
        out.push_back({id(printed ? "Psi-[n] - xi_{n-1} D Psi-[n] = q^{n-2} tau + xi_n D_n tau"
                                  : "Psi-[n] - xi_{n-1} D Psi-[n] = q^{n-1} (tau - xi_n D_n tau)",
                          n),
                       reduced(n) - rhs});
        if (n >= 2)
            out.push_back({id(printed ? "Psi-[n-1] = q^{n-2} xi_{n-1} tau" : "Psi-[n-1] = -q^{n-2} xi_{n-1} tau", n - 1),
                           B.psi(n - 1, FermionKind::Annihilate, n) - ScalarQ::monomial(n - 2, sgn) * (X(n - 1) * tau)});
        for (int k = 1; k < n - 1; ++k)
            out.push_back({id("Psi-[k] = 0 for k < n-1", k), B.psi(k, FermionKind::Annihilate, n)});
    }
    return out;
}

// sum_i Psi^{+,i}_k Psi'^{-,i}_l - sum_i Psibar^{+,i}_{k+1} Psibar'^{-,i}_{l-1}; primed functions use time copy 1.
inline NCPoly qbilinear_residual(const QBaker& B, const QBaker& Bp, int k, int l) {
    int N = B.N();
    if (k < 0 || k + 1 > N || l < 1 || l > N) throw DimensionMismatch("quantum bilinear identity: invalid levels");
    NCPoly r;
    for (int i = 1; i <= N; ++i) {
        r += B.psi(i, FermionKind::Create, k) * Bp.psi(i, FermionKind::Annihilate, l);
        r -= B.psi_bar(i, FermionKind::Create, k + 1) * Bp.psi_bar(i, FermionKind::Annihilate, l - 1);
    }
    return r;
}

// Quantum bilinear identity over all admissible (k, l); for k <= l - 1 also after xi'_{l-1} = 0.
inline std::vector<QRelationCheck> qbia_checks(const QuantumSetup& S, Placement plus, Placement minus) {
    if (S.copies < 2) throw ConfigError("quantum bilinear identity needs two time copies");
    QBaker B(S, 0, plus, minus), Bp(S, 1, plus, minus);
    std::vector<QRelationCheck> out;
    int N = S.N;
    std::string tag = std::string("[+") + placement_name(plus) + ",-" + placement_name(minus) + "] ";
    for (int k = 0; k + 1 <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            NCPoly r = qbilinear_residual(B, Bp, k, l);
            std::string lv = "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
            out.push_back({tag + "BIA " + lv, r});
            if (k <= l - 1 && l - 1 >= 1 && l - 1 <= N - 1) {
                Symbol z = xi(l - 1, 1);
                out.push_back({tag + "BIA at xi'_{l-1}=0 " + lv, r.drop([z](Symbol s) { return s == z; })});
            }
        }
    return out;
}

}  // namespace qtau
