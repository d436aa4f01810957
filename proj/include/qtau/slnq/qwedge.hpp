#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/scalar_q.hpp"

namespace qtau {

using Tuple = std::vector<int>;

inline int inversions(const Tuple& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return inv;
}

inline std::vector<Tuple> permutations(int n) {
    Tuple p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Tuple> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Tuple> sorted_tuples(int N, int n) {
    std::vector<Tuple> out;
    if (n < 0 || n > N) return out;
    std::vector<bool> mask(N, false);
    std::fill(mask.begin(), mask.begin() + n, true);
    do {
        Tuple t;
        for (int k = 0; k < N; ++k)
            if (mask[k]) t.push_back(k);
        out.push_back(t);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t flat_index(const Tuple& t, int N) {
    std::size_t idx = 0;
    for (int k : t) idx = idx * N + k;
    return idx;
}

inline Tuple unflat_index(std::size_t idx, int N, int n) {
    Tuple t(n);
    for (int k = n; k-- > 0;) {
        t[k] = static_cast<int>(idx % N);
        idx /= N;
    }
    return t;
}

struct QWedge {
    int N = 0;
    int n = 0;
    std::vector<Tuple> basis;
    std::vector<std::map<Tuple, ScalarQ>> embedding;

    std::size_t dimension() const { return basis.size(); }

    std::size_t index_of(const Tuple& sorted) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), sorted);
        if (it == basis.end() || *it != sorted) throw IndexOutOfRange("tuple not in wedge basis");
        return static_cast<std::size_t>(it - basis.begin());
    }
};

// v_J = sum_P (-q)^{inv P} |j_P(1)> x ... x |j_P(n)>
inline QWedge q_antisymmetrize(int N, int n) {
    if (n < 0 || n > N) throw IndexOutOfRange("wedge level out of range");
    QWedge w;
    w.N = N;
    w.n = n;
    w.basis = sorted_tuples(N, n);
    auto perms = permutations(n);
    for (const auto& J : w.basis) {
        std::map<Tuple, ScalarQ> v;
        for (const auto& P : perms) {
            Tuple t(n);
            for (int m = 0; m < n; ++m) t[m] = J[P[m]];
            v[t] += minus_q_power(inversions(P));
        }
        w.embedding.push_back(std::move(v));
    }
    return w;
}

}  // namespace qtau
