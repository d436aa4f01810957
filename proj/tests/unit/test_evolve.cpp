#include <gtest/gtest.h>

#include <functional>

#include "qtau/evolve/evolution.hpp"
#include "qtau/evolve/factorize.hpp"
#include "qtau/evolve/schur.hpp"
#include "qtau/harness/random.hpp"
#include "qtau/quantum/setup.hpp"

using namespace qtau;

namespace {

Poly t(int k) { return Poly::variable(time_var(k)); }

// P_k as a sum over multiplicities m_j with sum j m_j = k of prod t_j^{m_j} / m_j!
Poly schur_by_partitions(int k, int tmax) {
    Poly total;
    std::vector<int> m(tmax + 1, 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j > tmax) {
            if (left != 0) return;
            Poly term = 1;
            for (int a = 1; a <= tmax; ++a)
                for (int e = 1; e <= m[a]; ++e) term = Rational(1, e) * (term * t(a));
            total += term;
            return;
        }
        for (m[j] = 0; j * m[j] <= left; ++m[j]) rec(j + 1, left - j * m[j]);
        m[j] = 0;
    };
    rec(1, k);
    return total;
}

Matrix<Rational> numeric_evolution_B(const std::vector<Rational>& tv, int N) {
    std::vector<Poly> tp(tv.begin(), tv.end());
    return evolution_B(tp, N).map([](const Poly& p) {
        return p.is_zero() ? Rational(0) : p.terms().begin()->second;
    });
}

}  // namespace

TEST(Schur, MatchesPartitionSum) {
    auto ts = time_symbols(5);
    auto P = schur_polynomials(ts, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(P[k], schur_by_partitions(k, 5)) << "k=" << k;
}

TEST(Schur, LowOrders) {
    auto P = schur_polynomials(time_symbols(3), 3);
    EXPECT_EQ(P[1], t(1));
    EXPECT_EQ(P[2], t(2) + Rational(1, 2) * (t(1) * t(1)));
    EXPECT_EQ(P[3], t(3) + t(1) * t(2) + Rational(1, 6) * (t(1) * t(1) * t(1)));
}

TEST(EvolutionB, SpecExamples) {
    auto U2 = evolution_B(time_symbols(1), 2);
    EXPECT_EQ(U2(0, 1), t(1));
    EXPECT_EQ(U2(1, 0), Poly());
    EXPECT_EQ(U2(0, 0), Poly(1));
    auto U3 = evolution_B(time_symbols(2), 3);
    EXPECT_EQ(U3(0, 2), t(2) + Rational(1, 2) * (t(1) * t(1)));
    EXPECT_EQ(evolution_B(std::vector<Poly>(3), 4), Matrix<Poly>::identity(4));
}

TEST(EvolutionB, RowsAreSchurAndToeplitz) {
    int N = 5;
    auto ts = time_symbols(N - 1);
    auto U = evolution_B(ts, N);
    auto P = schur_polynomials(ts, N - 1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) EXPECT_EQ(U(i, j), j >= i ? P[j - i] : Poly());
}

TEST(EvolutionB, OneParameterGroup) {
    int N = 4;
    auto a = time_symbols(N - 1), b = time_symbols(N - 1, true), s = a;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a[k] + b[k];
    EXPECT_EQ(evolution_B(a, N) * evolution_B(b, N), evolution_B(s, N));
}

TEST(EvolutionA, SpecExamples) {
    auto x = xi_symbols(2);
    auto U = evolution_A(x, 3);
    EXPECT_EQ(U(0, 1), x[0]);
    EXPECT_EQ(U(0, 2), x[0] * x[1]);
    EXPECT_EQ(U(1, 2), x[1]);
    EXPECT_EQ(U(2, 0), Poly());
    EXPECT_EQ(evolution_A(std::vector<Poly>(2), 3), Matrix<Poly>::identity(3));
}

TEST(EvolutionA, QuantumEntriesAreOrderedWords) {
    auto S = make_quantum_setup(4);
    auto U = S.U();
    auto Ub = S.Ubar();
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 4; ++k) {
            NCPoly w = k >= m ? NCPoly(1) : NCPoly();
            NCPoly wb = k >= m ? NCPoly(1) : NCPoly();
            for (int i = m + 1; i <= k; ++i) w = w * S.xi_gen(i);
            for (int i = k; i >= m + 1; --i) wb = wb * S.xibar_gen(i);
            EXPECT_EQ(U(m, k), w);
            EXPECT_EQ(Ub(k, m), wb);
        }
}

TEST(EvolutionC, EmptyAndMiwa) {
    EXPECT_EQ(evolution_C({}, 3), Matrix<Poly>::identity(3));
    for (int N : {2, 3, 4}) {
        std::vector<Poly> lam{Poly::variable(miwa(1)), Poly::variable(miwa(2))};
        EXPECT_EQ(evolution_C(lam, N), evolution_B(miwa_times(lam, N), N)) << "N=" << N;
    }
}

TEST(Factorize, SpecExamples) {
    auto f = factorize_simple_roots(numeric_evolution_B({Rational(3, 4)}, 2));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].xi, Rational(3, 4));
    for (const auto& e : factorize_simple_roots(Matrix<Rational>::identity(4))) EXPECT_EQ(e.xi, 0);
    EXPECT_EQ(factorize_simple_roots(Matrix<Rational>::identity(4)).size(), 6u);
}

TEST(Factorize, RoundTripOnRandomTimes) {
    SeededRng rng(21);
    int generic = 0;
    for (int N = 2; N <= 5; ++N)
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> tv;
            for (int k = 1; k < N; ++k) tv.push_back(rng.nonzero_rational(5));
            auto U = numeric_evolution_B(tv, N);
            if (generic_for_factorization(U)) {
                ++generic;
                EXPECT_EQ(rebuild_simple_roots(factorize_simple_roots(U), N), U) << "N=" << N;
            } else {
                // a vanishing corner minor is the only way the solve can fail
                try {
                    EXPECT_EQ(rebuild_simple_roots(factorize_simple_roots(U), N), U);
                } catch (const SingularFactorization&) {
                }
            }
        }
    EXPECT_GT(generic, 150);
}

TEST(Factorize, SingularOnlyWhenCornerMinorVanishes) {
    // t = (-1, 1/2): P_1^2 - P_2 = 0
    auto U = numeric_evolution_B({-1, Rational(1, 2), Rational(1, 5)}, 4);
    EXPECT_FALSE(generic_for_factorization(U));
    EXPECT_THROW(factorize_simple_roots(U), SingularFactorization);
}

TEST(Factorize, RejectsNonUnipotent) {
    auto m = Matrix<Rational>::identity(3);
    m(1, 0) = 1;
    EXPECT_THROW(factorize_simple_roots(m), NotUnipotent);
    m = Matrix<Rational>::identity(3);
    m(2, 2) = 2;
    EXPECT_THROW(factorize_simple_roots(m), NotUnipotent);
}
