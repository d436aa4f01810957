#pragma once

#include <vector>

#include "qtau/evolve/evolution.hpp"
#include "qtau/slnq/gauss.hpp"

namespace qtau {

// xi_i xi_j = q^{-a_ij} xi_j xi_i for i < j, and the same for xibar.
inline void add_time_generators(Alphabet::Builder& b, int N, int copy) {
    RootData rd(N);
    for (int i = 1; i <= N - 1; ++i) b.add(xi(i, copy)).add(xibar(i, copy));
    for (int i = 1; i <= N - 1; ++i)
        for (int j = i + 1; j <= N - 1; ++j) {
            b.relate(xi(i, copy), xi(j, copy), -rd.cartan(i, j));
            b.relate(xibar(i, copy), xibar(j, copy), -rd.cartan(i, j));
        }
}

// Combined alphabet: time sets 0..copies-1 and the Gauss coordinates. Pairs from different
// sectors or different copies commute.
struct QuantumSetup {
    int N = 0;
    int copies = 1;
    AlphabetPtr alpha;
    Matrix<NCPoly> g;

    NCPoly xi_gen(int i, int copy = 0) const { return NCPoly::generator(alpha, xi(i, copy)); }
    NCPoly xibar_gen(int i, int copy = 0) const { return NCPoly::generator(alpha, xibar(i, copy)); }

    std::vector<Symbol> xis(int copy = 0) const {
        std::vector<Symbol> out;
        for (int i = 1; i <= N - 1; ++i) out.push_back(xi(i, copy));
        return out;
    }
    std::vector<Symbol> xibars(int copy = 0) const {
        std::vector<Symbol> out;
        for (int i = 1; i <= N - 1; ++i) out.push_back(xibar(i, copy));
        return out;
    }

    Matrix<NCPoly> U(int copy = 0) const { return evolution_A(alpha, xis(copy), N); }
    Matrix<NCPoly> Ubar(int copy = 0) const { return evolution_A(alpha, xibars(copy), N, true); }
};

inline QuantumSetup make_quantum_setup(int N, int copies = 1, const GaussOptions& opt = {}) {
    Alphabet::Builder b;
    for (int c = 0; c < copies; ++c) add_time_generators(b, N, c);
    add_gauss_generators(b, N, opt);
    std::vector<Symbol> all;
    for (int c = 0; c < copies; ++c)
        for (int i = 1; i <= N - 1; ++i) {
            all.push_back(xi(i, c));
            all.push_back(xibar(i, c));
        }
    auto roots = economic_roots(N);
    std::vector<Symbol> gauss;
    for (int s = 1; s <= static_cast<int>(roots.size()); ++s) {
        gauss.push_back(theta(s));
        gauss.push_back(chi(s));
    }
    for (int j = 0; j < N; ++j) gauss.push_back(lambda_d(j));
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t c = a + 1; c < all.size(); ++c)
            if (all[a].sector() != all[c].sector() || all[a].copy() != all[c].copy()) b.commute(all[a], all[c]);
        for (const auto& s : gauss) b.commute(all[a], s);
    }
    QuantumSetup q;
    q.N = N;
    q.copies = copies;
    q.alpha = b.build();
    q.g = gauss_matrix(q.alpha, N);
    return q;
}

}  // namespace qtau
