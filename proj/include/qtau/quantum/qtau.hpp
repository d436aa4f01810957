#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qtau/quantum/setup.hpp"
#include "qtau/slnq/qwedge.hpp"

namespace qtau {

// <m| U g Ubar |mbar> = s_m^{-1} (sum_{k >= m, kbar >= mbar} s_k sbar_kbar g_{k kbar}) sbar_mbar^{-1}
inline NCPoly qtau1(const QuantumSetup& S, int m, int mbar, int copy = 0) {
    if (m < 0 || m >= S.N || mbar < 0 || mbar >= S.N) throw IndexOutOfRange("qtau1: state out of range");
    auto U = S.U(copy);
    auto Ub = S.Ubar(copy);
    NCPoly sum;
    for (int k = m; k < S.N; ++k)
        for (int kb = mbar; kb < S.N; ++kb) sum += U(m, k) * S.g(k, kb) * Ub(kb, mbar);
    return sum;
}

inline Matrix<NCPoly> qtau1_matrix(const QuantumSetup& S, int copy = 0) { return S.U(copy) * S.g * S.Ubar(copy); }

// Time twists of the m-th factor: xi_i -> q^{-2 sum_{l>m} h_{i,j_l}} xi_i,
// xibar_i -> q^{2 sum_{l<m} h_{i,jbar_l}} xibar_i.
inline std::vector<std::pair<Symbol, int>> product_twists(int N, const Tuple& j, const Tuple& jbar, int m,
                                                          int copy = 0) {
    RootData rd(N);
    int n = static_cast<int>(j.size());
    std::vector<std::pair<Symbol, int>> rules;
    for (int i = 1; i <= N - 1; ++i) {
        int a = 0, b = 0;
        for (int l = m + 1; l < n; ++l) a -= rd.two_h(i, j[l]);
        for (int l = 0; l < m; ++l) b += rd.two_h(i, jbar[l]);
        if (a) rules.emplace_back(xi(i, copy), a);
        if (b) rules.emplace_back(xibar(i, copy), b);
    }
    return rules;
}

// Ordered product over m of twisted <j_m| U g Ubar |jbar_m>.
inline NCPoly qtau_product_entry(const QuantumSetup& S, const Tuple& j, const Tuple& jbar, int copy = 0) {
    if (j.size() != jbar.size()) throw DimensionMismatch("qtau_product_entry: label lengths differ");
    auto T = qtau1_matrix(S, copy);
    NCPoly prod(1);
    for (int m = 0; m < static_cast<int>(j.size()); ++m) {
        if (j[m] < 0 || j[m] >= S.N || jbar[m] < 0 || jbar[m] >= S.N)
            throw IndexOutOfRange("qtau_product_entry: label out of range");
        prod = prod * T(j[m], jbar[m]).twist(product_twists(S.N, j, jbar, m, copy));
        if (prod.is_zero()) break;
    }
    return prod;
}

inline NCPoly qtau_qdet(const QuantumSetup& S, int n, int copy = 0) {
    if (n < 0 || n > S.N) throw DimensionMismatch("qtau_qdet: level out of range");
    if (n == 0) return 1;
    auto perms = permutations(n);
    NCPoly sum;
    for (const auto& P : perms)
        for (const auto& Pb : perms)
            sum += minus_q_power(inversions(P) + inversions(Pb)) * qtau_product_entry(S, P, Pb, copy);
    return sum;
}

// sum_{P,P'} (-q)^{deg P + deg P'} prod_a A_{P(a) P'(a)}
inline NCPoly qdet_matrix(const Matrix<NCPoly>& A) {
    int n = static_cast<int>(A.rows());
    if (A.cols() != A.rows()) throw DimensionMismatch("qdet_matrix: square matrix expected");
    if (n == 0) return 1;
    auto perms = permutations(n);
    NCPoly sum;
    for (const auto& P : perms)
        for (const auto& Pb : perms) {
            NCPoly prod(minus_q_power(inversions(P) + inversions(Pb)));
            for (int a = 0; a < n && !prod.is_zero(); ++a) prod = prod * A(P[a], Pb[a]);
            sum += prod;
        }
    return sum;
}

using SparseVector = std::map<Tuple, NCPoly>;

// <v| Delta^{n-1} U: factors U^{(0)} U^{(1)} ..., each prod_{i ascending} (1 + xi_i X_i^{(m)}).
inline SparseVector bra_evolve(const QuantumSetup& S, SparseVector v, int copy = 0) {
    RootData rd(S.N);
    int n = v.empty() ? 0 : static_cast<int>(v.begin()->first.size());
    for (int m = 0; m < n; ++m)
        for (int i = 1; i <= S.N - 1; ++i) {
            NCPoly x = S.xi_gen(i, copy);
            SparseVector add;
            for (const auto& [a, c] : v) {
                if (a[m] != i - 1) continue;
                int e = 0;
                for (int l = m + 1; l < n; ++l) e -= rd.two_h(i, a[l]);
                Tuple b = a;
                b[m] = i;
                add[b] += ScalarQ::q_power(e) * (c * x);
            }
            for (auto& [b, c] : add) v[b] += c;
        }
    return v;
}

// Delta^{n-1} Ubar |v>: factors Ubar^{(0)} Ubar^{(1)} ..., each prod_{i descending} (1 + xibar_i Y_i^{(m)}).
inline SparseVector ket_evolve(const QuantumSetup& S, SparseVector v, int copy = 0) {
    RootData rd(S.N);
    int n = v.empty() ? 0 : static_cast<int>(v.begin()->first.size());
    for (int m = n; m-- > 0;)
        for (int i = 1; i <= S.N - 1; ++i) {
            NCPoly x = S.xibar_gen(i, copy);
            SparseVector add;
            for (const auto& [a, c] : v) {
                if (a[m] != i - 1) continue;
                int e = 0;
                for (int l = 0; l < m; ++l) e += rd.two_h(i, a[l]);
                Tuple b = a;
                b[m] = i;
                add[b] += ScalarQ::q_power(e) * (x * c);
            }
            for (auto& [b, c] : add) v[b] += c;
        }
    return v;
}

inline SparseVector q_wedge_vector(const Tuple& sorted) {
    int n = static_cast<int>(sorted.size());
    SparseVector v;
    for (const auto& P : permutations(n)) {
        Tuple t(n);
        for (int m = 0; m < n; ++m) t[m] = sorted[P[m]];
        v[t] += NCPoly(minus_q_power(inversions(P)));
    }
    return v;
}

inline NCPoly tensor_entry(const Matrix<NCPoly>& g, const Tuple& a, const Tuple& b) {
    NCPoly prod(1);
    for (std::size_t m = 0; m < a.size() && !prod.is_zero(); ++m) prod = prod * g(a[m], b[m]);
    return prod;
}

// Pairing of the q-antisymmetrized vacuum bra and ket against Delta U g^{x n} Delta Ubar.
inline NCPoly qtau_direct(const QuantumSetup& S, int n, int copy = 0) {
    if (n < 0 || n > S.N) throw DimensionMismatch("qtau_direct: level out of range");
    if (n == 0) return 1;
    Tuple vac(n);
    for (int m = 0; m < n; ++m) vac[m] = m;
    auto bra = bra_evolve(S, q_wedge_vector(vac), copy);
    auto ket = ket_evolve(S, q_wedge_vector(vac), copy);
    NCPoly sum;
    for (const auto& [a, ca] : bra) {
        if (ca.is_zero()) continue;
        for (const auto& [b, cb] : ket) {
            if (cb.is_zero()) continue;
            NCPoly ge = tensor_entry(S.g, a, b);
            if (!ge.is_zero()) sum += ca * ge * cb;
        }
    }
    return sum;
}

// Operators restricted to the q-wedge F_n, in the sorted-tuple basis. Bra-side invariance of
// Delta U and ket-side invariance of Delta Ubar and g^{x n} let the coefficient at the sorted
// tuple stand for the whole q-wedge vector.
struct QWedgeData {
    int N = 0;
    std::vector<Matrix<NCPoly>> U, g, Ubar;

    QWedgeData(const QuantumSetup& S, int copy = 0) : N(S.N) {
        for (int n = 0; n <= N; ++n) {
            auto basis = sorted_tuples(N, n);
            std::size_t d = basis.size();
            Matrix<NCPoly> u(d, d), gm(d, d), ub(d, d);
            if (n == 0) {
                u(0, 0) = gm(0, 0) = ub(0, 0) = NCPoly(1);
            } else {
                for (std::size_t r = 0; r < d; ++r) {
                    auto bra = bra_evolve(S, q_wedge_vector(basis[r]), copy);
                    auto ket = ket_evolve(S, q_wedge_vector(basis[r]), copy);
                    for (std::size_t c = 0; c < d; ++c) {
                        if (auto it = bra.find(basis[c]); it != bra.end()) u(r, c) = it->second;
                        if (auto it = ket.find(basis[c]); it != ket.end()) ub(c, r) = it->second;
                    }
                }
                auto perms = permutations(n);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) {
                        NCPoly sum;
                        for (const auto& P : perms) {
                            Tuple t(n);
                            for (int m = 0; m < n; ++m) t[m] = basis[c][P[m]];
                            NCPoly e = tensor_entry(S.g, basis[r], t);
                            if (!e.is_zero()) sum += minus_q_power(inversions(P)) * e;
                        }
                        gm(r, c) = sum;
                    }
            }
            U.push_back(std::move(u));
            g.push_back(std::move(gm));
            Ubar.push_back(std::move(ub));
        }
    }

    // Wedge-normalized tau: the direct pairing divided by <v_0|v_0> = [n]!.
    NCPoly tau(int n) const { return (U[n] * g[n] * Ubar[n])(0, 0); }
};

}  // namespace qtau
