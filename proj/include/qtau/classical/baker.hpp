#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtau/classical/fermion.hpp"
#include "qtau/classical/tau.hpp"

namespace qtau {

inline Matrix<Poly> lift_fermion(int N, int i, FermionKind kind, int n) {
    return lift_rational(fermion_matrix(N, i, kind, n));
}

// Wedge-level matrices of U, g, Ubar for levels 0..N.
struct WedgeData {
    int N;
    std::vector<Matrix<Poly>> U, g, Ubar;

    WedgeData(const Evolutions& ev, const Matrix<Poly>& gm) : N(static_cast<int>(gm.rows())) {
        for (int n = 0; n <= N; ++n) {
            U.push_back(wedge_matrix(ev.U, n));
            g.push_back(wedge_matrix(gm, n));
            Ubar.push_back(wedge_matrix(ev.Ubar, n));
        }
    }

    Poly vac(const Matrix<Poly>& m) const { return m(0, 0); }

    Poly tau(int n) const { return vac(U[n] * g[n] * Ubar[n]); }

    // <0_{n+-1}| U psi^{+-}_i g Ubar |0_n>
    Poly psi(int i, FermionKind kind, int n) const {
        int top = kind == FermionKind::Create ? n + 1 : n - 1;
        if (top < 0 || top > N || n < 0 || n > N) return {};
        return vac(U[top] * lift_fermion(N, i, kind, n) * g[n] * Ubar[n]);
    }

    // Fermion to the right of g, labelled by the bra level n:
    // <0_n| U g psi^{+-}_i Ubar |0_{n-+1}>
    Poly psi_bar(int i, FermionKind kind, int n) const {
        int bottom = kind == FermionKind::Create ? n - 1 : n + 1;
        if (bottom < 0 || bottom > N || n < 0 || n > N) return {};
        return vac(U[n] * g[n] * lift_fermion(N, i, kind, bottom) * Ubar[bottom]);
    }
};

// Both sides of  sum_i <0_{n+1}|U psi^+_i g Ubar|0_n> <0_{m-1}|U' psi^-_i g Ubar'|0_m>
//             =  sum_i <0_{n+1}|U g psi^+_i Ubar|0_n> <0_{m-1}|U' g psi^-_i Ubar'|0_m>.
inline std::pair<Poly, Poly> bilinear_sides(const WedgeData& w, const WedgeData& wp, int n, int m) {
    int N = w.N;
    if (n < 0 || n + 1 > N || m < 1 || m > N) throw DimensionMismatch("bilinear identity: invalid levels");
    Poly lhs, rhs;
    for (int i = 1; i <= N; ++i) {
        lhs += w.psi(i, FermionKind::Create, n) * wp.psi(i, FermionKind::Annihilate, m);
        rhs += w.psi_bar(i, FermionKind::Create, n + 1) * wp.psi_bar(i, FermionKind::Annihilate, m - 1);
    }
    return {lhs, rhs};
}

inline std::pair<Poly, Poly> bilinear_check(Parametrization p, const Matrix<Poly>& g, int n, int m) {
    int N = static_cast<int>(g.rows());
    WedgeData w(make_evolutions(p, N, 0), g);
    WedgeData wp(make_evolutions(p, N, 1), g);
    return bilinear_sides(w, wp, n, m);
}

inline Matrix<Rational> inverse(const Matrix<Rational>& a) {
    std::size_t n = a.rows();
    Matrix<Rational> m = a;
    auto inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) throw DimensionMismatch("matrix is singular");
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(m(p, k), m(c, k));
            std::swap(inv(p, k), inv(c, k));
        }
        Rational piv = m(c, c);
        for (std::size_t k = 0; k < n; ++k) {
            m(c, k) /= piv;
            inv(c, k) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                m(r, k) -= f * m(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

// Entry count of sum_i (g psi^+_i g^-1) x (g psi^-_i g^-1) - sum_i psi^+_i x psi^-_i on F_n x F_m.
inline std::size_t gamma_invariance_defect(const Matrix<Rational>& g, int n, int m) {
    int N = static_cast<int>(g.rows());
    if (n < 0 || n + 1 > N || m < 1 || m > N) throw DimensionMismatch("Gamma invariance: invalid levels");
    auto gw = [&](int lvl) { return wedge_matrix(g, lvl); };
    Matrix<Rational> lhs, rhs;
    for (int i = 1; i <= N; ++i) {
        auto pa = fermion_matrix(N, i, FermionKind::Create, n);
        auto pb = fermion_matrix(N, i, FermionKind::Annihilate, m);
        auto k1 = kron(gw(n + 1) * pa * inverse(gw(n)), gw(m - 1) * pb * inverse(gw(m)));
        auto k2 = kron(pa, pb);
        if (i == 1) {
            lhs = k1;
            rhs = k2;
        } else {
            lhs += k1;
            rhs += k2;
        }
    }
    std::size_t defect = 0;
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c)
            if (lhs(r, c) != rhs(r, c)) ++defect;
    return defect;
}

struct RelationCheck {
    std::string label;
    Poly residual;
};

inline Poly s_ratio(int a, int b) {
    Monomial inv;
    for (const auto& [v, e] : s_monomial(b, false)) inv.emplace_back(v, -e);
    return Poly::from_monomial(monomial_mul(s_monomial(a, false), inv));
}

// Lines of the parametrization-A Baker-Akhiezer list. With printed = true the relations are taken
// exactly as displayed; otherwise the sign-corrected forms of the three psi^- lines are used.
inline std::vector<RelationCheck> exbaa_checks(const Matrix<Poly>& g, int n, bool printed = true) {
    int N = static_cast<int>(g.rows());
    WedgeData w(make_evolutions(Parametrization::A, N), g);
    Poly tau = w.tau(n);
    auto X = [&](int j) { return (j >= 1 && j <= N - 1) ? Poly::variable(xi(j)) : Poly(); };
    auto d = [&](const Poly& p, int j) { return (j >= 1 && j <= N - 1) ? p.derivative(xi(j)) : Poly(); };
    auto dlog = [&](const Poly& p, int j) { return X(j) * d(p, j); };
    auto id = [&](const std::string& s, int k) {
        return s + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    };
    std::vector<RelationCheck> out;
    if (n + 1 <= N) {
        Poly base = tau - dlog(tau, n);
        for (int k = 1; n + k + 1 <= N; ++k)
            out.push_back({id("Psi+[n+k+1] = s_{n+k}/s_n (tau - xi_n d tau)", k),
                           w.psi(n + k + 1, FermionKind::Create, n) - s_ratio(n + k, n) * base});
        out.push_back({id("Psi+[n+1] = tau - xi_n d tau", n + 1), w.psi(n + 1, FermionKind::Create, n) - base});
        out.push_back({id("Psi+[n] = -d tau / d xi_n", n), w.psi(n, FermionKind::Create, n) + d(tau, n)});
    }
    int sgn = printed ? 1 : -1;
    auto reduced = [&](int k) {
        Poly p = w.psi(k, FermionKind::Annihilate, n);
        return p - X(n - 1) * d(p, n - 1);
    };
    for (int k = n + 1; k <= N; ++k)
        out.push_back({id(printed ? "Psi-[k] - xi_{n-1} d Psi-[k] = s_{n-1}/s_{k-1} d tau/d log xi_k + s_{n-1}/s_{k-2} d tau/d xi_{k-1}"
                                  : "Psi-[k] - xi_{n-1} d Psi-[k] = -s_{n-1}/s_{k-1} d tau/d log xi_k + s_{n-1}/s_{k-2} d tau/d xi_{k-1}",
                          k),
                       reduced(k) - (Rational(sgn) * (s_ratio(n - 1, k - 1) * dlog(tau, k)) + s_ratio(n - 1, k - 2) * d(tau, k - 1))});
    out.push_back({id(printed ? "Psi-[n] - xi_{n-1} d Psi-[n] = tau + d tau/d log xi_n"
                              : "Psi-[n] - xi_{n-1} d Psi-[n] = tau - d tau/d log xi_n",
                      n),
                   reduced(n) - (tau + Rational(sgn) * dlog(tau, n))});
    if (n >= 2)
        out.push_back({id(printed ? "Psi-[n-1] = xi_{n-1} tau" : "Psi-[n-1] = -xi_{n-1} tau", n - 1),
                       w.psi(n - 1, FermionKind::Annihilate, n) - Rational(sgn) * (X(n - 1) * tau)});
    for (int k = 1; k < n - 1; ++k)
        out.push_back({id("Psi-[k] = 0 for k < n-1", k), w.psi(k, FermionKind::Annihilate, n)});
    return out;
}

// Finite-sum bilinear identity in parametrization A for bra levels (k+1, l-1); for k <= l-1 it is
// also checked after setting xi'_{l-1} = 0.
inline std::vector<RelationCheck> bia_checks(const Matrix<Poly>& g) {
    int N = static_cast<int>(g.rows());
    WedgeData w(make_evolutions(Parametrization::A, N, 0), g);
    WedgeData wp(make_evolutions(Parametrization::A, N, 1), g);
    std::vector<RelationCheck> out;
    for (int k = 0; k + 1 <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            auto [lhs, rhs] = bilinear_sides(w, wp, k, l);
            std::string tag = "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
            out.push_back({"BIA " + tag, lhs - rhs});
            if (k <= l - 1 && l - 1 >= 1 && l - 1 <= N - 1) {
                Poly zero;
                out.push_back({"BIA at xi'_{l-1}=0 " + tag,
                               (lhs - rhs).substitute(xi(l - 1, 1), zero)});
            }
        }
    return out;
}

}  // namespace qtau
