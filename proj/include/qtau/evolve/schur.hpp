#pragma once

#include <vector>

#include "qtau/ncalg/poly.hpp"

namespace qtau {

// P_k(t) from exp(sum_k t_k z^k) = sum_k P_k z^k; t[0] holds t_1.
inline std::vector<Poly> schur_polynomials(const std::vector<Poly>& t, int kmax) {
    std::vector<Poly> P(kmax + 1);
    P[0] = 1;
    for (int k = 1; k <= kmax; ++k) {
        Poly acc;
        for (int j = 1; j <= k && j <= static_cast<int>(t.size()); ++j)
            acc += Rational(j) * (t[j - 1] * P[k - j]);
        P[k] = Rational(1, k) * acc;
    }
    return P;
}

inline std::vector<Poly> time_symbols(int count, bool bar = false, int copy = 0) {
    std::vector<Poly> t;
    for (int k = 1; k <= count; ++k) t.push_back(Poly::variable(bar ? time_bar(k, copy) : time_var(k, copy)));
    return t;
}

}  // namespace qtau
