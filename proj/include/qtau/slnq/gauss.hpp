#pragma once

#include <vector>

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/ncpoly.hpp"
#include "qtau/slnq/generators.hpp"
#include "qtau/slnq/root_data.hpp"

namespace qtau {

enum class ThetaChi { Commute, NoRelation };

struct GaussOptions {
    ThetaChi theta_chi = ThetaChi::Commute;
};

// theta_s, Lambda_j, chi_s with
//   theta_s theta_s' = q^{-a} theta_s' theta_s,  chi_s chi_s' = q^{-a} chi_s' chi_s   (s < s', a = a_{i(s) i(s')})
//   Lambda_j theta_s = q^{2h} theta_s Lambda_j,   Lambda_j chi_s = q^{2h} chi_s Lambda_j  (h = h_{i(s), j})
inline void add_gauss_generators(Alphabet::Builder& b, int N, const GaussOptions& opt = {}) {
    RootData rd(N);
    auto roots = economic_roots(N);
    int S = static_cast<int>(roots.size());
    for (int s = 1; s <= S; ++s) b.add(theta(s)).add(chi(s));
    for (int j = 0; j < N; ++j) b.add(lambda_d(j), true);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) b.commute(lambda_d(j), lambda_d(k));
    for (int s = 1; s <= S; ++s) {
        for (int t = s + 1; t <= S; ++t) {
            int a = rd.cartan(roots[s - 1], roots[t - 1]);
            b.relate(theta(s), theta(t), -a);
            b.relate(chi(s), chi(t), -a);
        }
        for (int j = 0; j < N; ++j) {
            int two_h = rd.two_h(roots[s - 1], j);
            b.relate(lambda_d(j), theta(s), two_h);
            b.relate(lambda_d(j), chi(s), two_h);
        }
        if (opt.theta_chi == ThetaChi::Commute)
            for (int t = 1; t <= S; ++t) b.commute(theta(s), chi(t));
    }
}

// g = prod_{s ascending} (1 + theta_s T_{i(s)}) diag(Lambda) prod_{s descending} (1 + chi_s T_{-i(s)})
inline Matrix<NCPoly> gauss_matrix(const AlphabetPtr& alpha, int N) {
    auto roots = economic_roots(N);
    int S = static_cast<int>(roots.size());
    auto id = Matrix<NCPoly>::identity(N);
    auto lift1 = [](const Matrix<ScalarQ>& m) { return m.map([](const ScalarQ& s) { return NCPoly(s); }); };
    Matrix<NCPoly> upper = id;
    for (int s = 1; s <= S; ++s)
        upper = upper * (id + lift1(generator_matrix(N, GeneratorKind::Raise, roots[s - 1]))
                                  .scaled_left(NCPoly::generator(alpha, theta(s))));
    Matrix<NCPoly> diag(N, N);
    for (int j = 0; j < N; ++j) diag(j, j) = NCPoly::generator(alpha, lambda_d(j));
    Matrix<NCPoly> lower = id;
    for (int s = S; s >= 1; --s)
        lower = lower * (id + lift1(generator_matrix(N, GeneratorKind::Lower, roots[s - 1]))
                                  .scaled_left(NCPoly::generator(alpha, chi(s))));
    return upper * diag * lower;
}

struct GaussElement {
    int N;
    AlphabetPtr alphabet;
    Matrix<NCPoly> matrix;
};

inline GaussElement gauss_element(int N, const GaussOptions& opt = {}) {
    Alphabet::Builder b;
    add_gauss_generators(b, N, opt);
    auto alpha = b.build();
    return {N, alpha, gauss_matrix(alpha, N)};
}

}  // namespace qtau
