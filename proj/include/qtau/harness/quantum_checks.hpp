#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtau/classical/baker.hpp"
#include "qtau/harness/random.hpp"
#include "qtau/harness/scenario.hpp"
#include "qtau/quantum/qbaker.hpp"

namespace qtau {

namespace quantum_check {

inline std::string lv(int n) { return "(n=" + std::to_string(n) + ")"; }
inline std::string lv(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// (Phi^{+,R}, Phi^{-,L}) is the placement under which the relations hold with this q-wedge basis;
// (Phi^{+,L}, Phi^{-,R}) is the displayed one.
inline constexpr std::pair<Placement, Placement> kPlacements[] = {{Placement::R, Placement::L},
                                                                  {Placement::L, Placement::R}};

inline std::vector<int> levels(const Scenario& sc) { return scenario_levels(sc, 1, std::min(sc.N, 3)); }

inline std::vector<CheckRecord> qtau1_check(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N);
    std::vector<CheckRecord> out;
    for (int m = 0; m < sc.N; ++m)
        for (int mb = 0; mb < sc.N; ++mb) {
            // s_m^{-1} s_k and sbar_kbar sbar_mbar^{-1} written out as words.
            NCPoly sum;
            for (int k = m; k < sc.N; ++k)
                for (int kb = mb; kb < sc.N; ++kb) {
                    std::vector<std::pair<Symbol, int>> left, right;
                    for (int i = m + 1; i <= k; ++i) left.emplace_back(xi(i), 1);
                    for (int i = kb; i >= mb + 1; --i) right.emplace_back(xibar(i), 1);
                    sum += NCPoly::word(S.alpha, left) * S.g(k, kb) * NCPoly::word(S.alpha, right);
                }
            NCPoly direct = qtau1(S, m, mb);
            out.push_back(residual_record("qtau1: matrix element = s-sum " + lv(m, mb), direct - sum));
            NCPoly diff = qtau1_difference_form(S, m, mb);
            out.push_back(residual_record("qtau1: difference form " + lv(m, mb), direct - diff));
            int e = (m >= 2 ? 1 : 0) - (mb >= 2 ? 1 : 0);
            out.push_back(residual_record("qtau1: difference form with factor q^{[m>=2]-[mbar>=2]} " + lv(m, mb),
                                          ScalarQ::q_power(e) * direct - diff));
        }
    return out;
}

// Value of p at rational points for every generator and q.
inline Rational specialize_all(const NCPoly& p, const std::map<Symbol, Rational>& values, const Rational& q) {
    return p.evaluate(values).specialize_q(q).constant_term().at_one();
}

// Ratio a/b of two q = 1 limits, read off at the first monomial of b; zero when b vanishes.
inline Rational classical_ratio(const NCPoly& a, const NCPoly& b) {
    Poly pa = a.specialize_q(1).commutative(), pb = b.specialize_q(1).commutative();
    if (pb.is_zero()) return 0;
    const auto& [m, c] = *pb.terms().begin();
    auto it = pa.terms().find(m);
    return it == pa.terms().end() ? Rational(0) : Rational(it->second / c);
}

inline std::vector<CheckRecord> detq(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N);
    SeededRng rng(sc.seed);
    std::vector<CheckRecord> out;
    auto is_time = [](Symbol s) { return s.sector() == Sector::Xi || s.sector() == Sector::XiBar; };
    for (int n : scenario_levels(sc, 1, std::min(sc.N, 3))) {
        NCPoly direct = qtau_direct(S, n);
        NCPoly qd = qtau_qdet(S, n);
        // c(n,q) at one generic q from three random specializations of the generators.
        Rational q(2, 3);
        std::vector<Rational> ratios;
        for (int trial = 0; trial < 3; ++trial) {
            std::map<Symbol, Rational> values;
            for (Symbol s : S.alpha->symbols()) values[s] = rng.nonzero_rational(5);
            Rational a = specialize_all(direct, values, q), b = specialize_all(qd, values, q);
            ratios.push_back(b == 0 ? Rational(0) : Rational(a / b));
        }
        bool constant = ratios[0] == ratios[1] && ratios[1] == ratios[2] && ratios[0] != 0;
        out.push_back(count_record("detq: direct / qdet independent of the specialization " + lv(n),
                                   constant ? 0 : 1,
                                   "ratios " + ratios[0].get_str() + ", " + ratios[1].get_str() + ", " +
                                       ratios[2].get_str()));
        out.push_back(residual_record("detq: qtau_direct = c(n,q) qtau_qdet with c = 1 " + lv(n), direct - qd));
        Rational c1 = classical_ratio(direct, qd);
        out.push_back(count_record("detq: c(n,1) = n! " + lv(n), c1 == factorial(n) ? 0 : 1,
                                   "measured c(n,1) = " + c1.get_str() + ", n! = " + factorial(n).get_str()));
        QWedgeData W(S);
        out.push_back(residual_record("detq: qtau_direct = [n]_q! x wedge-normalized tau " + lv(n),
                                      direct - q_factorial(n) * W.tau(n)));
        if (n == sc.N)
            out.push_back(residual_record("detq: top level is time independent " + lv(n), qd - qd.drop(is_time)));
    }
    return out;
}

// One term c * tau_1^{m mbar}(twisted times) * tau_1^{m' mbar'}(twisted times) of the tau_2 expansion;
// a twist (s, k) replaces s by q^k s.
struct Tau2Term {
    ScalarQ coeff;
    int m, mbar;
    std::vector<std::pair<Symbol, int>> left;
    int m2, mbar2;
    std::vector<std::pair<Symbol, int>> right;
};

inline std::vector<Tau2Term> tau2_expansion() {
    Symbol x1 = xi(1), x2 = xi(2), b1 = xibar(1), b2 = xibar(2);
    return {
        {1, 0, 0, {{x1, 1}, {x2, -1}}, 1, 1, {{b1, 1}}},
        {ScalarQ::monomial(1, -1), 0, 1, {{x1, 1}, {x2, -1}}, 1, 0, {{b1, -1}, {b2, 1}}},
        {ScalarQ::monomial(1, -1), 1, 0, {{x1, -1}}, 0, 1, {{b1, 1}}},
        {ScalarQ::q_power(2), 1, 1, {{x1, -1}}, 0, 0, {{b1, -1}, {b2, 1}}},
    };
}

inline std::string twist_string(const std::vector<std::pair<Symbol, int>>& tw) {
    std::string s;
    for (const auto& [sym, k] : tw) {
        if (!s.empty()) s += ", ";
        s += sym.name() + " -> q^" + std::to_string(k) + " " + sym.name();
    }
    return s;
}

inline std::string tau2_term_string(const Tau2Term& t) {
    return "(" + t.coeff.to_string() + ") tau1^{" + std::to_string(t.m) + std::to_string(t.mbar) + "}[" +
           twist_string(t.left) + "] tau1^{" + std::to_string(t.m2) + std::to_string(t.mbar2) + "}[" +
           twist_string(t.right) + "]";
}

inline NCPoly tau2_printed(const QuantumSetup& S) {
    auto T = qtau1_matrix(S);
    NCPoly sum;
    for (const auto& t : tau2_expansion())
        sum += t.coeff * (T(t.m, t.mbar).twist(t.left) * T(t.m2, t.mbar2).twist(t.right));
    return sum;
}

inline std::vector<CheckRecord> tau2(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N);
    NCPoly qd = qtau_qdet(S, 2);
    std::vector<CheckRecord> out;
    out.push_back(residual_record("tau2: four-term expansion with displayed twists = qtau_qdet(2)", tau2_printed(S) - qd));
    out.push_back(residual_record("tau2: compact cD form = qtau_qdet(2)", tau2_compact_expanded(S) - qd));
    out.push_back(residual_record("tau2: invariant DD form = qtau_qdet(2)", tau2_compact(S) - qd));
    out.push_back(residual_record("tau2: invariant DD form with displayed twist sign = qtau_qdet(2)",
                                  tau2_compact(S, 0, TwistSign::Displayed) - qd));
    return out;
}

inline TensorPoly random_tensor(const QuantumSetup& S, SeededRng& rng, bool bar) {
    auto gens = bar ? S.xibars() : S.xis();
    return TensorPoly::pure(random_ncpoly(S.alpha, gens, rng), random_ncpoly(S.alpha, gens, rng)) +
           TensorPoly::pure(random_ncpoly(S.alpha, gens, rng), random_ncpoly(S.alpha, gens, rng));
}

inline std::vector<CheckRecord> dd_comm(const Scenario& sc, int samples = 50) {
    auto S = make_quantum_setup(sc.N);
    SeededRng rng(sc.seed);
    RootData rd(sc.N);
    std::vector<CheckRecord> out;
    std::vector<TensorPoly> xs, xbs;
    for (int k = 0; k < samples; ++k) {
        xs.push_back(random_tensor(S, rng, false));
        xbs.push_back(random_tensor(S, rng, true));
    }
    auto run = [&](const std::string& name, auto lhs, auto rhs, const std::vector<TensorPoly>& inputs) {
        std::string w;
        std::size_t bad = 0;
        for (const auto& t : inputs) {
            TensorPoly d = lhs(t) - rhs(t);
            if (!d.is_zero() && bad++ == 0) w = d.to_string();
        }
        out.push_back(count_record(name, bad, w));
    };
    for (TwistSign sign : {TwistSign::Consistent, TwistSign::Displayed}) {
        DiffContext ctx{sc.N, 0, sign};
        std::string tag = sign == TwistSign::Consistent ? "" : " [displayed twist sign]";
        for (int i = 1; i <= sc.N - 1; ++i)
            for (int j = 1; j <= sc.N - 1; ++j) {
                ScalarQ f = ScalarQ::q_power(rd.cartan(i, j));
                run("dd-comm: DL_i DR_j = q^{a_ij} DR_j DL_i" + tag + " " + lv(i, j),
                    [&](const TensorPoly& t) {
                        return qdiff_apply({DiffKind::DL, i}, qdiff_apply({DiffKind::DR, j}, t, ctx), ctx);
                    },
                    [&](const TensorPoly& t) {
                        return f * qdiff_apply({DiffKind::DR, j}, qdiff_apply({DiffKind::DL, i}, t, ctx), ctx);
                    },
                    xs);
                if (sign == TwistSign::Consistent)
                    run("dd-comm: DBarL_i DBarR_j = q^{a_ij} DBarR_j DBarL_i " + lv(i, j),
                        [&](const TensorPoly& t) {
                            return qdiff_apply({DiffKind::DBarL, i}, qdiff_apply({DiffKind::DBarR, j}, t, ctx), ctx);
                        },
                        [&](const TensorPoly& t) {
                            return f * qdiff_apply({DiffKind::DBarR, j}, qdiff_apply({DiffKind::DBarL, i}, t, ctx), ctx);
                        },
                        xbs);
            }
    }
    ScalarQ q = ScalarQ::q_power(1);
    run("dd-comm: cD_1^L cD_1^R = q cD_1^R cD_1^L",
        [&](const TensorPoly& t) { return compact_apply(CompactOp::L, compact_apply(CompactOp::R, t)); },
        [&](const TensorPoly& t) { return q * compact_apply(CompactOp::R, compact_apply(CompactOp::L, t)); }, xs);
    run("dd-comm: cDbar_1^L cDbar_1^R = q cDbar_1^R cDbar_1^L",
        [&](const TensorPoly& t) { return compact_apply(CompactOp::BarL, compact_apply(CompactOp::BarR, t)); },
        [&](const TensorPoly& t) { return q * compact_apply(CompactOp::BarR, compact_apply(CompactOp::BarL, t)); }, xbs);
    // D_i M_i^k = q^k M_i^k D_i on single polynomials
    std::size_t bad = 0;
    std::string w;
    for (int k = 0; k < samples; ++k) {
        NCPoly p = random_ncpoly(S.alpha, S.xis(), rng);
        for (int i = 1; i <= sc.N - 1; ++i) {
            NCPoly d = d_xi(m_twist(p, i, 1), i) - ScalarQ::q_power(1) * m_twist(d_xi(p, i), i, 1);
            if (!d.is_zero() && bad++ == 0) w = d.to_string();
        }
    }
    out.push_back(count_record("dd-comm: D_i M_i = q M_i D_i", bad, w));
    return out;
}

inline std::vector<CheckRecord> gamma_check(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N);
    QWedgeData W(S);
    std::vector<CheckRecord> out;
    for (auto [p, m] : kPlacements)
        for (int n = 0; n + 1 <= sc.N; ++n)
            for (int l = 1; l <= sc.N; ++l) {
                auto r = gamma_q_check(S, W, n, l, p, m);
                std::string tag = std::string("[Phi+") + placement_name(p) + " x Phi-" + placement_name(m) + "]";
                out.push_back(count_record("gamma: " + tag + " commutes with g x g " + lv(n, l), r.defect, r.witness));
            }
    return out;
}

inline std::vector<CheckRecord> baker(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N);
    QBaker B(S);
    std::vector<CheckRecord> out;
    for (bool printed : {true, false})
        for (int n = 1; n <= sc.N; ++n)
            for (auto& r : qbaker_checks(B, n, printed))
                out.push_back(residual_record(std::string(printed ? "baker: " : "baker (fitted q-powers): ") + r.label,
                                              r.residual));
    return out;
}

inline std::vector<CheckRecord> bia(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N, 2);
    std::vector<CheckRecord> out;
    for (auto [p, m] : kPlacements)
        for (auto& r : qbia_checks(S, p, m)) out.push_back(residual_record("bia: " + r.label, r.residual));
    return out;
}

inline Matrix<Poly> classical_gauss(const QuantumSetup& S) {
    return S.g.map([](const NCPoly& p) { return p.specialize_q(1).commutative(); });
}

inline std::vector<CheckRecord> classical_limit(const Scenario& sc) {
    auto S = make_quantum_setup(sc.N, 2);
    auto gc = classical_gauss(S);
    auto ev = make_evolutions(Parametrization::A, sc.N);
    auto at1 = [](const NCPoly& p) { return p.specialize_q(1).commutative(); };
    std::vector<CheckRecord> out;
    for (int m = 0; m < sc.N; ++m)
        for (int mb = 0; mb < sc.N; ++mb)
            out.push_back(residual_record("classical-limit: qtau1 " + lv(m, mb),
                                          at1(qtau1(S, m, mb)) - tau1_shift(ev, gc, m, mb)));
    QWedgeData W(S);
    for (int n : levels(sc)) {
        Poly cl = tau_direct(ev, gc, n);
        out.push_back(residual_record("classical-limit: qtau_qdet = n! tau_det " + lv(n),
                                      at1(qtau_qdet(S, n)) - factorial(n) * tau_det(ev, gc, n)));
        out.push_back(residual_record("classical-limit: qtau_direct = n! tau_direct " + lv(n),
                                      at1(qtau_direct(S, n)) - factorial(n) * cl));
        out.push_back(residual_record("classical-limit: wedge tau = tau_direct " + lv(n), at1(W.tau(n)) - cl));
        Poly tc = at1(W.tau(n));
        Poly dd;
        for (int i = 1; i <= sc.N - 1; ++i) dd += at1(d_xi(W.tau(n), i)) - tc.derivative(xi(i));
        out.push_back(residual_record("classical-limit: D_i tau = d tau / d xi_i " + lv(n), dd));
    }
    out.push_back(residual_record("classical-limit: tau2 compact = 2 tau_det(2)",
                                  at1(tau2_compact(S)) - Rational(2) * tau_det(ev, gc, 2)));
    WedgeData cw(ev, gc);
    for (Placement p : {Placement::R, Placement::L}) {
        QBaker B(S, 0, p, p);
        Poly r;
        for (int n = 0; n <= sc.N; ++n)
            for (int i = 1; i <= sc.N; ++i)
                for (FermionKind k : {FermionKind::Create, FermionKind::Annihilate}) {
                    r += at1(B.psi(i, k, n)) - cw.psi(i, k, n);
                    r += at1(B.psi_bar(i, k, n)) - cw.psi_bar(i, k, n);
                }
        out.push_back(residual_record(std::string("classical-limit: Baker-Akhiezer functions [") + placement_name(p) + "]", r));
    }
    for (int n = 0; n + 1 <= sc.N; ++n)
        for (int l = 1; l <= sc.N; ++l) {
            auto G = gamma_q(sc.N, n, l, Placement::R, Placement::L);
            std::size_t bad = 0;
            Matrix<Rational> cl;
            for (int i = 1; i <= sc.N; ++i) {
                auto k = kron(fermion_matrix(sc.N, i, FermionKind::Create, n), fermion_matrix(sc.N, i, FermionKind::Annihilate, l));
                if (i == 1) cl = k;
                else cl += k;
            }
            for (std::size_t a = 0; a < G.rows(); ++a)
                for (std::size_t b = 0; b < G.cols(); ++b)
                    if (G(a, b).specialize_q(1).constant_term().at_one() != cl(a, b)) ++bad;
            out.push_back(count_record("classical-limit: Gamma_q = Gamma " + lv(n, l), bad, "entries differ"));
        }
    return out;
}

}  // namespace quantum_check

}  // namespace qtau
