#pragma once

#include <string>
#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/rational.hpp"

namespace qtau {

// SL(N) root data. Simple roots i = 1..N-1, states j = 0..N-1.
struct RootData {
    int N;

    explicit RootData(int n) : N(n) {
        if (n < 2) throw IndexOutOfRange("RootData needs N >= 2");
    }

    int rank() const { return N - 1; }

    int cartan(int i, int j) const {
        check_root(i);
        check_root(j);
        if (i == j) return 2;
        return (i - j == 1 || j - i == 1) ? -1 : 0;
    }

    // 2 h_{i,j}: eigenvalue of 2 H_i on |j>.
    int two_h(int i, int j) const {
        check_root(i);
        if (j < 0 || j >= N) throw IndexOutOfRange("state index out of range");
        if (j == i - 1) return 1;
        if (j == i) return -1;
        return 0;
    }

    Rational h(int i, int j) const { return rational(two_h(i, j), 2); }

    void check_root(int i) const {
        if (i < 1 || i > N - 1) throw IndexOutOfRange("root index " + std::to_string(i) + " out of range");
    }
};

// Simple-root labels i(s) of the ordered product: 1..r, 1..r-1, ..., 1.
inline std::vector<int> economic_roots(int N) {
    std::vector<int> roots;
    for (int top = N - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) roots.push_back(i);
    return roots;
}

}  // namespace qtau
