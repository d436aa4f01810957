#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qtau/ncalg/matrix.hpp"
#include "qtau/ncalg/ncpoly.hpp"
#include "qtau/ncalg/rational.hpp"

namespace qtau {

// mt19937_64 output is fixed by the standard; the range reduction below is done by hand so the
// draws do not depend on the library's distribution implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    // p / d with |p| <= spread, 1 <= d <= spread
    Rational small_rational(int spread) {
        if (spread <= 0) return 0;
        return rational(uniform(-spread, spread), uniform(1, spread));
    }

    Rational nonzero_rational(int spread) {
        if (spread <= 0) return 1;
        Rational r;
        do r = small_rational(spread);
        while (r == 0);
        return r;
    }

private:
    std::mt19937_64 gen_;
};

// (unipotent upper) (diagonal, product 1) (unipotent lower) with small rational entries.
inline Matrix<Rational> random_group_element(int N, std::uint64_t seed, int spread = 3) {
    if (N < 2) throw DimensionMismatch("random_group_element needs N >= 2");
    SeededRng rng(seed);
    auto upper = Matrix<Rational>::identity(N);
    auto lower = Matrix<Rational>::identity(N);
    Matrix<Rational> diag(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) upper(i, j) = rng.small_rational(spread);
    Rational prod = 1;
    for (int i = 0; i + 1 < N; ++i) {
        diag(i, i) = rng.nonzero_rational(spread);
        prod *= diag(i, i);
    }
    diag(N - 1, N - 1) = 1 / prod;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < i; ++j) lower(i, j) = rng.small_rational(spread);
    return upper * diag * lower;
}

// Random combination of short words in the given generators, coefficients small integers times
// powers of q.
inline NCPoly random_ncpoly(const AlphabetPtr& alpha, const std::vector<Symbol>& gens, SeededRng& rng,
                            int terms = 4, int max_len = 4) {
    NCPoly p;
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<Symbol, int>> raw;
        int len = static_cast<int>(rng.uniform(0, max_len));
        for (int k = 0; k < len; ++k) raw.emplace_back(gens[rng.uniform(0, static_cast<std::int64_t>(gens.size()) - 1)], 1);
        ScalarQ c = ScalarQ::monomial(static_cast<int>(rng.uniform(-2, 2)), rng.nonzero_rational(3));
        p += NCPoly::word(alpha, raw, c);
    }
    return p;
}

}  // namespace qtau
