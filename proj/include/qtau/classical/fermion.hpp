#pragma once

#include <algorithm>

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/rational.hpp"
#include "qtau/slnq/qwedge.hpp"

namespace qtau {

enum class FermionKind { Create, Annihilate };

// psi^+_i |J> = e_J ^ e_{i-1}, psi^-_i its transpose; modes i = 1..N on states 0..N-1.
// Returned matrix maps level n to level n +/- 1 in the sorted-tuple basis.
inline Matrix<Rational> fermion_matrix(int N, int i, FermionKind kind, int n) {
    if (i < 1 || i > N) throw IndexOutOfRange("fermion mode out of range");
    int mode = i - 1;
    int target = kind == FermionKind::Create ? n + 1 : n - 1;
    auto src = sorted_tuples(N, n);
    auto dst = sorted_tuples(N, target);
    Matrix<Rational> m(dst.size(), src.size());
    if (target < 0 || target > N) return m;
    auto sign = [&](const Tuple& without) {
        auto above = std::count_if(without.begin(), without.end(), [&](int j) { return j > mode; });
        return Rational(above % 2 ? -1 : 1);
    };
    if (kind == FermionKind::Create) {
        for (std::size_t c = 0; c < src.size(); ++c) {
            const Tuple& J = src[c];
            if (std::find(J.begin(), J.end(), mode) != J.end()) continue;
            Tuple K = J;
            K.insert(std::upper_bound(K.begin(), K.end(), mode), mode);
            std::size_t r = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), K) - dst.begin());
            m(r, c) = sign(J);
        }
    } else {
        for (std::size_t c = 0; c < src.size(); ++c) {
            const Tuple& J = src[c];
            if (std::find(J.begin(), J.end(), mode) == J.end()) continue;
            Tuple K = J;
            K.erase(std::find(K.begin(), K.end(), mode));
            std::size_t r = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), K) - dst.begin());
            m(r, c) = sign(K);
        }
    }
    return m;
}

}  // namespace qtau
