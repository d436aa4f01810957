#include <gtest/gtest.h>

#include "qtau/slnq/coproduct.hpp"
#include "qtau/slnq/gauss.hpp"
#include "qtau/slnq/qwedge.hpp"

using namespace qtau;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }

Matrix<ScalarQ> unit(int N, int i, int j) {
    Matrix<ScalarQ> m(N, N);
    m(i, j) = 1;
    return m;
}

// Applies a matrix on F_1^{x n} to the q-wedge vector v_J and re-expands in the v_K.
std::map<Tuple, ScalarQ> act(const Matrix<ScalarQ>& op, const QWedge& w, std::size_t J) {
    std::vector<ScalarQ> in(op.cols());
    for (const auto& [t, c] : w.embedding[J]) in[flat_index(t, w.N)] = c;
    std::vector<ScalarQ> out(op.rows());
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
            if (!op(r, c).is_zero() && !in[c].is_zero()) out[r] += op(r, c) * in[c];
    std::map<Tuple, ScalarQ> res;
    for (std::size_t r = 0; r < out.size(); ++r)
        if (!out[r].is_zero()) res[unflat_index(r, w.N, w.n)] = out[r];
    return res;
}

}  // namespace

TEST(RootData, CartanAndWeights) {
    RootData rd(4);
    EXPECT_EQ(rd.cartan(1, 1), 2);
    EXPECT_EQ(rd.cartan(1, 2), -1);
    EXPECT_EQ(rd.cartan(1, 3), 0);
    EXPECT_EQ(rd.two_h(2, 1), 1);
    EXPECT_EQ(rd.two_h(2, 2), -1);
    EXPECT_EQ(rd.two_h(2, 0), 0);
    EXPECT_EQ(economic_roots(3), (std::vector<int>{1, 2, 1}));
}

TEST(Generators, SpecExamples) {
    EXPECT_EQ(generator_matrix(2, GeneratorKind::Raise, 1), unit(2, 0, 1));
    Matrix<ScalarQ> h(2, 2);
    h(0, 0) = Rational(1, 2);
    h(1, 1) = Rational(-1, 2);
    EXPECT_EQ(generator_matrix(2, GeneratorKind::Cartan, 1), h);
    EXPECT_EQ(generator_matrix(4, GeneratorKind::RaiseHeight, 2), unit(4, 0, 2) + unit(4, 1, 3));
    EXPECT_EQ(generator_matrix(3, GeneratorKind::Lower, 2), unit(3, 2, 1));
    EXPECT_THROW(generator_matrix(3, GeneratorKind::Raise, 3), IndexOutOfRange);
}

TEST(QWedge, SpecExamples) {
    auto w = q_antisymmetrize(2, 2);
    ASSERT_EQ(w.dimension(), 1u);
    std::map<Tuple, ScalarQ> v{{{0, 1}, 1}, {{1, 0}, -q(1)}};
    EXPECT_EQ(w.embedding[0], v);
    auto w3 = q_antisymmetrize(3, 3);
    ASSERT_EQ(w3.embedding[0].size(), 6u);
    EXPECT_EQ(w3.embedding[0].at({2, 1, 0}), -q(3));
    EXPECT_EQ(w3.embedding[0].at({1, 2, 0}), q(2));
    EXPECT_EQ(q_antisymmetrize(4, 2).dimension(), 6u);
}

TEST(QWedge, InversionCounts) {
    EXPECT_EQ(inversions({0, 1, 2}), 0);
    EXPECT_EQ(inversions({2, 1, 0}), 3);
    EXPECT_EQ(inversions({1, 0, 3, 2}), 2);
    EXPECT_EQ(permutations(4).size(), 24u);
    int total = 0;
    for (const auto& p : permutations(4)) total += inversions(p);
    EXPECT_EQ(total, 24 * 6 / 2);
}

TEST(Coproduct, SpecExampleN2) {
    auto d = coproduct_power(2, GeneratorKind::Raise, 1, 2);
    Matrix<ScalarQ> K(2, 2);
    K(0, 0) = q(-1);
    K(1, 1) = q(1);
    EXPECT_EQ(d, kron(unit(2, 0, 1), K) + kron(Matrix<ScalarQ>::identity(2), unit(2, 0, 1)));
}

TEST(Coproduct, ClassicalLimitIsPrimitive) {
    for (int N : {2, 3})
        for (int i = 1; i < N; ++i) {
            auto d = coproduct_power(N, GeneratorKind::Raise, i, 2).map([](const ScalarQ& s) { return ScalarQ(s.at_one()); });
            auto T = generator_matrix(N, GeneratorKind::Raise, i);
            auto I = Matrix<ScalarQ>::identity(N);
            EXPECT_EQ(d, kron(T, I) + kron(I, T));
        }
}

TEST(Coproduct, PreservesQWedgeSubspace) {
    for (int N : {2, 3, 4})
        for (int n = 2; n <= std::min(N, 3); ++n) {
            auto w = q_antisymmetrize(N, n);
            for (int i = 1; i < N; ++i)
                for (GeneratorKind kind : {GeneratorKind::Raise, GeneratorKind::Lower}) {
                    auto op = coproduct_power(N, kind, i, n);
                    for (std::size_t J = 0; J < w.dimension(); ++J) {
                        auto image = act(op, w, J);
                        // coefficient at a sorted tuple K is the v_K coordinate
                        std::map<Tuple, ScalarQ> rest = image;
                        for (std::size_t K = 0; K < w.dimension(); ++K) {
                            auto it = image.find(w.basis[K]);
                            if (it == image.end()) continue;
                            ScalarQ c = it->second;
                            for (const auto& [t, v] : w.embedding[K]) rest[t] -= c * v;
                        }
                        for (const auto& [t, v] : rest) EXPECT_TRUE(v.is_zero()) << "N=" << N << " n=" << n << " i=" << i;
                    }
                }
        }
}

TEST(Gauss, SpecExampleN2) {
    auto g = gauss_element(2);
    auto G = [&](Symbol s) { return NCPoly::generator(g.alphabet, s); };
    EXPECT_EQ(g.matrix(0, 0), G(lambda_d(0)) + G(theta(1)) * G(lambda_d(1)) * G(chi(1)));
    EXPECT_EQ(g.matrix(0, 1), G(theta(1)) * G(lambda_d(1)));
    EXPECT_EQ(g.matrix(1, 0), G(lambda_d(1)) * G(chi(1)));
    EXPECT_EQ(g.matrix(1, 1), G(lambda_d(1)));
}

TEST(Gauss, TrivialSpecialization) {
    auto g = gauss_element(3);
    auto at = g.matrix.map([](const NCPoly& p) {
        std::map<Symbol, Rational> v;
        for (int s = 1; s <= 3; ++s) v[theta(s)] = 0, v[chi(s)] = 0;
        for (int j = 0; j < 3; ++j) v[lambda_d(j)] = 1;
        return p.evaluate(v).specialize_q(1);
    });
    EXPECT_EQ(at, Matrix<NCPoly>::identity(3));
}

TEST(Gauss, RelationsAreConsistent) {
    auto g = gauss_element(3);
    auto G = [&](Symbol s) { return NCPoly::generator(g.alphabet, s); };
    // Lambda_j theta_s = q^{2h} theta_s Lambda_j with the root of theta_1 = alpha_1: 2h_{1,0} = 1
    EXPECT_EQ(G(lambda_d(0)) * G(theta(1)), q(1) * (G(theta(1)) * G(lambda_d(0))));
    EXPECT_EQ(G(lambda_d(1)) * G(theta(1)), q(-1) * (G(theta(1)) * G(lambda_d(1))));
    EXPECT_EQ(G(lambda_d(2)) * G(theta(1)), G(theta(1)) * G(lambda_d(2)));
    // theta_1 theta_2 with roots alpha_1, alpha_2: q^{-a_12} = q
    EXPECT_EQ(G(theta(1)) * G(theta(2)), q(1) * (G(theta(2)) * G(theta(1))));
}

TEST(TensorAction, NumericIsKronecker) {
    Matrix<NCPoly> g(2, 2);
    g(0, 0) = 2;
    g(0, 1) = 3;
    g(1, 0) = 5;
    g(1, 1) = 8;
    EXPECT_EQ(tensor_action(g, 2), kron(g, g));
    EXPECT_EQ(tensor_action(Matrix<NCPoly>::identity(3), 2), Matrix<NCPoly>::identity(9));
}

TEST(TensorAction, GaussEntryIsOrderedWord) {
    auto g = gauss_element(2);
    auto t = tensor_action(g.matrix, 2);
    // ((0,1),(0,1)) -> g_00 g_11
    EXPECT_EQ(t(flat_index({0, 1}, 2), flat_index({0, 1}, 2)), g.matrix(0, 0) * g.matrix(1, 1));
    EXPECT_EQ(t(flat_index({1, 0}, 2), flat_index({0, 1}, 2)), g.matrix(1, 0) * g.matrix(0, 1));
}
