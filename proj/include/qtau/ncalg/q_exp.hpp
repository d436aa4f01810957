#pragma once

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/ncpoly.hpp"

namespace qtau {

enum class QBase { Q, QInverse };

inline ScalarQ q_factorial(int k, QBase base) {
    ScalarQ f = q_factorial(k);
    return base == QBase::Q ? f : f.inverted();
}

inline NCPoly divide_exact(const NCPoly& p, const ScalarQ& d) {
    NCPoly::Terms out;
    for (const auto& [w, c] : p.terms()) out.emplace(w, c.divide_exact(d));
    return NCPoly::from_terms(p.alphabet(), std::move(out));
}

// sum_{k<=order} x^k / [k]! with [k] = (1-q^{2k})/(1-q^2), or its q -> 1/q mirror.
inline Matrix<NCPoly> q_exp(const Matrix<NCPoly>& x, int order, QBase base = QBase::Q) {
    if (x.rows() != x.cols()) throw DimensionMismatch("q_exp needs a square matrix");
    auto result = Matrix<NCPoly>::identity(x.rows());
    auto power = Matrix<NCPoly>::identity(x.rows());
    for (int k = 1; k <= order; ++k) {
        power = power * x;
        ScalarQ f = q_factorial(k, base);
        result += power.map([&](const NCPoly& p) { return divide_exact(p, f); });
    }
    if (!(power * x).is_zero()) throw TruncationNotNilpotent("q_exp: x^(order+1) is nonzero");
    return result;
}

}  // namespace qtau
