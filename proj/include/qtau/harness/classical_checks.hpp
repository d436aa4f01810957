#pragma once

#include <string>
#include <vector>

#include "qtau/classical/baker.hpp"
#include "qtau/evolve/factorize.hpp"
#include "qtau/harness/random.hpp"
#include "qtau/harness/scenario.hpp"

namespace qtau {

namespace classical_check {

inline Matrix<Poly> group_element(const Scenario& sc) {
    return sc.symbolic_g ? symbolic_g(sc.N) : lift_rational(random_group_element(sc.N, sc.seed));
}

inline std::string lv(int n) { return "(n=" + std::to_string(n) + ")"; }
inline std::string lv(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

inline std::vector<CheckRecord> det(const Scenario& sc) {
    auto g = group_element(sc);
    auto ev = make_evolutions(sc.param, sc.N);
    std::vector<CheckRecord> out;
    std::string p(1, parametrization_name(sc.param));
    for (int n : scenario_levels(sc, 1, sc.N))
        out.push_back(residual_record("det: tau_direct = tau_det, param " + p + " " + lv(n),
                                      tau_direct(ev, g, n) - tau_det(ev, g, n)));
    return out;
}

inline std::vector<CheckRecord> schur(const Scenario& sc) {
    auto g = group_element(sc);
    auto ev = make_evolutions(Parametrization::B, sc.N);
    auto t = time_symbols(sc.N - 1), tb = time_symbols(sc.N - 1, true);
    std::vector<CheckRecord> out;
    for (int n : scenario_levels(sc, 1, sc.N))
        out.push_back(residual_record("schur: Cauchy-Binet expansion = tau_det " + lv(n),
                                      tau_schur_expand(t, tb, g, n) - tau_det(ev, g, n)));
    return out;
}

inline std::vector<CheckRecord> shift(const Scenario& sc) {
    auto g = group_element(sc);
    auto ev = make_evolutions(Parametrization::B, sc.N);
    Poly tau1 = tau1_shift(ev, g, 0, 0);
    std::vector<CheckRecord> out;
    for (int m = 0; m < sc.N; ++m)
        for (int mb = 0; mb < sc.N; ++mb) {
            Poly d = tau1;
            for (int k = 0; k < m; ++k) d = d.derivative(time_var(1));
            for (int k = 0; k < mb; ++k) d = d.derivative(time_bar(1));
            out.push_back(residual_record("shift: <m|UgUbar|mbar> = d^m d'^mbar tau_1 " + lv(m, mb),
                                          tau1_shift(ev, g, m, mb) - d));
        }
    return out;
}

inline std::vector<CheckRecord> param_a(const Scenario& sc) {
    auto g = group_element(sc);
    auto ev = make_evolutions(Parametrization::A, sc.N);
    std::vector<CheckRecord> out;
    for (int m = 0; m < sc.N; ++m)
        for (int mb = 0; mb < sc.N; ++mb)
            out.push_back(residual_record("param-a: tau1^{m mbar} derivative form " + lv(m, mb),
                                          tau_A_derivative_residual(g, m, mb)));
    for (int n : scenario_levels(sc, 1, sc.N))
        out.push_back(residual_record("param-a: bordered determinant = tau_direct " + lv(n),
                                      tau_A_det(g, n - 1) - tau_direct(ev, g, n)));
    for (int n : scenario_levels(sc, 1, sc.N)) {
        Poly t = tau_direct(ev, g, n);
        Poly excess;
        for (int i = 1; i <= sc.N - 1; ++i) {
            if (t.degree_in(xi(i)) > n) excess += Poly::variable(xi(i));
            if (t.degree_in(xibar(i)) > n) excess += Poly::variable(xibar(i));
        }
        out.push_back(residual_record("param-a: degree <= n in each time " + lv(n), excess));
    }
    return out;
}

inline std::vector<CheckRecord> hirota(const Scenario& sc) {
    auto g = group_element(sc);
    std::vector<CheckRecord> out;
    for (int n : scenario_levels(sc, 1, sc.N - 1))
        out.push_back(residual_record("hirota: first Toda equation, sign " + std::to_string(kHirotaSign) + " " + lv(n),
                                      hirota_residual(g, n)));
    return out;
}

inline std::vector<CheckRecord> bilinear(const Scenario& sc) {
    auto g = group_element(sc);
    std::vector<CheckRecord> out;
    for (int n = 0; n + 1 <= sc.N; ++n)
        for (int m = 1; m <= sc.N; ++m) {
            auto [lhs, rhs] = bilinear_check(sc.param, g, n, m);
            out.push_back(residual_record("bilinear: fermion sums " + lv(n, m), lhs - rhs));
        }
    auto gn = random_group_element(sc.N, sc.seed);
    for (int n = 0; n + 1 <= sc.N; ++n)
        for (int m = 1; m <= sc.N; ++m)
            out.push_back(count_record("bilinear: Gamma commutes with g x g " + lv(n, m),
                                       gamma_invariance_defect(gn, n, m), "entries differ"));
    return out;
}

inline std::vector<CheckRecord> car(const Scenario& sc) {
    int N = sc.N;
    std::vector<CheckRecord> out;
    auto f = [&](int i, FermionKind k, int n) { return fermion_matrix(N, i, k, n); };
    for (int n = 0; n <= N; ++n) {
        std::size_t defect = 0;
        std::string where;
        int dim = static_cast<int>(sorted_tuples(N, n).size());
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                auto pp = f(i, FermionKind::Create, n + 1) * f(j, FermionKind::Create, n) +
                          f(j, FermionKind::Create, n + 1) * f(i, FermionKind::Create, n);
                auto mm = f(i, FermionKind::Annihilate, n - 1) * f(j, FermionKind::Annihilate, n) +
                          f(j, FermionKind::Annihilate, n - 1) * f(i, FermionKind::Annihilate, n);
                auto pm = f(i, FermionKind::Create, n - 1) * f(j, FermionKind::Annihilate, n) +
                          f(j, FermionKind::Annihilate, n + 1) * f(i, FermionKind::Create, n);
                if (i == j) pm -= Matrix<Rational>::identity(dim);
                for (const auto* m : {&pp, &mm, &pm})
                    if (m->rows() && m->cols() && !m->is_zero()) {
                        if (defect++ == 0) where = "modes " + lv(i, j);
                    }
            }
        out.push_back(count_record("car: anticommutators on level " + std::to_string(n), defect, where));
    }
    return out;
}

inline std::vector<CheckRecord> baker(const Scenario& sc) {
    auto g = group_element(sc);
    std::vector<CheckRecord> out;
    for (bool printed : {true, false})
        for (int n = 1; n <= sc.N; ++n)
            for (auto& r : exbaa_checks(g, n, printed))
                out.push_back(residual_record(std::string(printed ? "baker: " : "baker (sign-corrected): ") + r.label,
                                              r.residual));
    return out;
}

inline std::vector<CheckRecord> bia(const Scenario& sc) {
    auto g = group_element(sc);
    std::vector<CheckRecord> out;
    for (auto& r : bia_checks(g)) out.push_back(residual_record("bia: " + r.label, r.residual));
    return out;
}

inline Matrix<Rational> constant_matrix(const Matrix<Poly>& m) {
    return m.map([](const Poly& p) {
        auto it = p.terms().find(Monomial{});
        if (p.term_count() > (it == p.terms().end() ? 0u : 1u)) throw Error("matrix entry is not constant");
        return it == p.terms().end() ? Rational(0) : it->second;
    });
}

inline std::vector<CheckRecord> evolve(const Scenario& sc) {
    int N = sc.N;
    SeededRng rng(sc.seed);
    std::vector<CheckRecord> out;
    std::vector<Poly> lam;
    for (int a = 0; a < 3; ++a) lam.push_back(rng.small_rational(4));
    auto diff = evolution_C(lam, N) - evolution_B(miwa_times(lam, N), N);
    Poly r;
    for (std::size_t i = 0; i < diff.rows(); ++i)
        for (std::size_t j = 0; j < diff.cols(); ++j) r += diff(i, j);
    out.push_back(residual_record("evolve: Miwa product = B-evolution at Miwa times", r));
    auto t = time_symbols(N - 1);
    auto U = evolution_B(t, N);
    auto P = schur_polynomials(t, N - 1);
    Poly row;
    for (int k = 0; k < N; ++k) row += U(0, k) - P[k];
    out.push_back(residual_record("evolve: <0|U(t) = sum_k P_k <k|", row));
    auto UA = evolution_A(xi_symbols(N - 1), N);
    Poly rowA;
    for (int k = 0; k < N; ++k) rowA += UA(0, k) - Poly::from_monomial(s_monomial(k, false));
    out.push_back(residual_record("evolve: <0|U(xi) = sum_k s_k <k|", rowA));
    return out;
}

// Leading coefficients xi_ij / t_1 of the simple-root factorization (t_1 = 1, higher times 0;
// xi_ij is homogeneous of weight one, so this is exact).
inline std::vector<SimpleRootFactor> leading_factorization(int N) {
    std::vector<Poly> t(N - 1);
    t[0] = 1;
    return factorize_simple_roots(constant_matrix(evolution_B(t, N)));
}

inline std::vector<CheckRecord> factorize(const Scenario& sc) {
    int N = sc.N;
    SeededRng rng(sc.seed);
    // redraw until no corner minor vanishes; such points are measure zero
    Matrix<Rational> U;
    do {
        std::vector<Poly> t;
        for (int k = 1; k <= N - 1; ++k) t.push_back(rng.nonzero_rational(5));
        U = constant_matrix(evolution_B(t, N));
    } while (!generic_for_factorization(U));
    std::vector<CheckRecord> out;
    try {
        auto f = factorize_simple_roots(U);
        auto back = rebuild_simple_roots(f, N) - U;
        std::size_t bad = 0;
        for (std::size_t i = 0; i < back.rows(); ++i)
            for (std::size_t j = 0; j < back.cols(); ++j) bad += back(i, j) != 0;
        out.push_back(count_record("factorize: rebuild reproduces B-evolution", bad, "entries differ"));
    } catch (const SingularFactorization& e) {
        out.push_back(count_record("factorize: rebuild reproduces B-evolution", 1, e.what()));
    }
    std::size_t mismatch = 0;
    std::string first;
    for (const auto& f : leading_factorization(N)) {
        Rational expect(1, N + f.i - f.j);
        if (f.xi != expect && mismatch++ == 0)
            first = "xi_" + std::to_string(f.i) + std::to_string(f.j) + " = " + f.xi.get_str() + " t1, formula " +
                    expect.get_str() + " t1";
    }
    out.push_back(count_record("factorize: leading xi_ij = t1/(N+i-j)", mismatch, first));
    return out;
}

}  // namespace classical_check

}  // namespace qtau
