#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtau/quantum/qtau.hpp"

namespace qtau {

enum class DiffKind { D, DBar, DL, DR, DBarL, DBarR, M, MBar };

// index: simple root i. power: exponent of a twist M_i / Mbar_i (kind M, MBar only).
struct DifferenceOp {
    DiffKind kind;
    int index = 1;
    int power = 1;
    int copy = 0;
};

// M_i^{k}: xi_i -> q^k xi_i.
inline NCPoly m_twist(const NCPoly& p, int i, int k, int copy = 0) { return p.twist({{xi(i, copy), k}}); }
inline NCPoly mbar_twist(const NCPoly& p, int i, int k, int copy = 0) { return p.twist({{xibar(i, copy), k}}); }

namespace detail {

inline NCPoly weight_by_degree(const NCPoly& p, Symbol s, bool inverse) {
    const auto& alpha = p.alphabet();
    NCPoly::Terms out;
    if (!alpha) return {};
    auto id = alpha->find(s);
    if (!id) return {};
    for (const auto& [w, c] : p.terms()) {
        int e = 0;
        for (const auto& l : w)
            if (l.gen == *id) e += l.exp;
        if (e == 0) continue;
        ScalarQ f = q_integer(e);
        out.emplace(w, c * (inverse ? f.inverted() : f));
    }
    return NCPoly::from_terms(alpha, std::move(out));
}

}  // namespace detail

// D_i f = (1/xi_i) (M_i^{2} - 1)/(q^2 - 1) f, division from the left.
inline NCPoly d_xi(const NCPoly& p, int i, int copy = 0) {
    return detail::weight_by_degree(p, xi(i, copy), false).side_divide(xi(i, copy), Side::Left);
}

// Dbar_i f = [(Mbar_i^{-2} - 1)/(q^{-2} - 1) f] (1/xibar_i), division from the right.
inline NCPoly d_xibar(const NCPoly& p, int i, int copy = 0) {
    return detail::weight_by_degree(p, xibar(i, copy), true).side_divide(xibar(i, copy), Side::Right);
}

// Element of A x A kept as a sum of pure tensors of normal-ordered words.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;

    TensorPoly() = default;
    explicit TensorPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

    static TensorPoly pure(const NCPoly& a, const NCPoly& b) {
        TensorPoly t(a.alphabet() ? a.alphabet() : b.alphabet());
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
        return t;
    }

    const std::map<Key, ScalarQ>& terms() const { return terms_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Word& a, const Word& b, const ScalarQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(Key{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        if (!alpha_) alpha_ = o.alpha_;
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        if (!alpha_) alpha_ = o.alpha_;
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const ScalarQ& s, const TensorPoly& a) {
        TensorPoly r(a.alpha_);
        for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

    // Applies f to the left factor and h to the right factor of every pure tensor.
    template <class F, class H>
    TensorPoly apply(F f, H h) const {
        TensorPoly r(alpha_);
        for (const auto& [k, c] : terms_) {
            NCPoly a = f(monomial(k.first));
            if (a.is_zero()) continue;
            NCPoly b = h(monomial(k.second));
            for (const auto& [wa, ca] : a.terms())
                for (const auto& [wb, cb] : b.terms()) r.add_term(wa, wb, c * ca * cb);
        }
        return r;
    }

    // mu(a x b) = a b
    NCPoly multiply() const {
        NCPoly sum;
        for (const auto& [k, c] : terms_) sum += c * (monomial(k.first) * monomial(k.second));
        return sum;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*[" + monomial(k.first).to_string() + " # " +
                   monomial(k.second).to_string() + "]";
        }
        return out;
    }

private:
    NCPoly monomial(const Word& w) const {
        NCPoly::Terms t;
        t.emplace(w, ScalarQ(1));
        return NCPoly::from_terms(alpha_, std::move(t));
    }

    AlphabetPtr alpha_;
    std::map<Key, ScalarQ> terms_;
};

// Sign of the Cartan exponent in the twist factor of DR_i (and DBarL_i). The displayed definition
// prod_j M_j^{-a_ij} x D_i gives DL_i DR_j = q^{-a_ij} DR_j DL_i; the commutation relation
// q^{+a_ij} and the compact tau_2 form both need +a_ij.
enum class TwistSign { Displayed, Consistent };

struct DiffContext {
    int N = 2;
    int copy = 0;
    TwistSign dr_sign = TwistSign::Consistent;
};

inline NCPoly qdiff_apply(const DifferenceOp& op, const NCPoly& p) {
    switch (op.kind) {
        case DiffKind::D: return d_xi(p, op.index, op.copy);
        case DiffKind::DBar: return d_xibar(p, op.index, op.copy);
        case DiffKind::M: return m_twist(p, op.index, op.power, op.copy);
        case DiffKind::MBar: return mbar_twist(p, op.index, op.power, op.copy);
        default: throw DimensionMismatch("qdiff_apply: tensor operator applied to a single polynomial");
    }
}

inline TensorPoly qdiff_apply(const DifferenceOp& op, const TensorPoly& t, const DiffContext& ctx) {
    RootData rd(ctx.N);
    int i = op.index;
    int c = ctx.copy;
    auto id = [](const NCPoly& p) { return p; };
    auto cartan_twist = [&](const NCPoly& p, bool bar, int sign) {
        std::vector<std::pair<Symbol, int>> rules;
        for (int j = 1; j <= ctx.N - 1; ++j)
            if (int a = rd.cartan(i, j)) rules.emplace_back(bar ? xibar(j, c) : xi(j, c), sign * a);
        return p.twist(rules);
    };
    int s = ctx.dr_sign == TwistSign::Consistent ? 1 : -1;
    switch (op.kind) {
        case DiffKind::DL: return t.apply([&](const NCPoly& p) { return d_xi(p, i, c); }, id);
        case DiffKind::DR:
            return t.apply([&](const NCPoly& p) { return cartan_twist(p, false, s); },
                           [&](const NCPoly& p) { return d_xi(p, i, c); });
        case DiffKind::DBarL:
            return t.apply([&](const NCPoly& p) { return d_xibar(p, i, c); },
                           [&](const NCPoly& p) { return cartan_twist(p, true, -1); });
        case DiffKind::DBarR: return t.apply(id, [&](const NCPoly& p) { return d_xibar(p, i, c); });
        case DiffKind::M: return t.apply([&](const NCPoly& p) { return m_twist(p, i, op.power, c); }, id);
        case DiffKind::MBar: return t.apply(id, [&](const NCPoly& p) { return mbar_twist(p, i, op.power, c); });
        default: return t.apply([&](const NCPoly& p) { return qdiff_apply(op, p); }, id);
    }
}

// Operators of the first-root compact form:
//   cD^L = M_1^- D_1 x I,  cD^R = M_1^+ M_2^- x D_1,  cDbar^L = Dbar_1 x Mbar_1^- Mbar_2^+,  cDbar^R = I x Mbar_1^+ Dbar_1.
enum class CompactOp { L, R, BarL, BarR };

inline TensorPoly compact_apply(CompactOp op, const TensorPoly& t, int copy = 0) {
    auto id = [](const NCPoly& p) { return p; };
    switch (op) {
        case CompactOp::L: return t.apply([&](const NCPoly& p) { return m_twist(d_xi(p, 1, copy), 1, -1, copy); }, id);
        case CompactOp::R:
            return t.apply([&](const NCPoly& p) { return p.twist({{xi(1, copy), 1}, {xi(2, copy), -1}}); },
                           [&](const NCPoly& p) { return d_xi(p, 1, copy); });
        case CompactOp::BarL:
            return t.apply([&](const NCPoly& p) { return d_xibar(p, 1, copy); },
                           [&](const NCPoly& p) { return p.twist({{xibar(1, copy), -1}, {xibar(2, copy), 1}}); });
        case CompactOp::BarR: return t.apply(id, [&](const NCPoly& p) { return mbar_twist(d_xibar(p, 1, copy), 1, 1, copy); });
    }
    return t;
}

// Difference form s_{m-1}^{-1} (D_m Dbar_mbar tau_1) sbar_{mbar-1}^{-1}.
inline NCPoly qtau1_difference_form(const QuantumSetup& S, int m, int mbar, int copy = 0) {
    NCPoly t = qtau1(S, 0, 0, copy);
    if (m > 0) {
        t = d_xi(t, m, copy);
        for (int k = 1; k <= m - 1; ++k) t = t.side_divide(xi(k, copy), Side::Left);
    }
    if (mbar > 0) {
        t = d_xibar(t, mbar, copy);
        for (int k = 1; k <= mbar - 1; ++k) t = t.side_divide(xibar(k, copy), Side::Right);
    }
    return t;
}

// (M_1^- x Mbar_1^+) (DR_1 - q DL_1)(DBarR_1 - q DBarL_1) tau_1 x tau_1, multiplied out.
inline NCPoly tau2_compact(const QuantumSetup& S, int copy = 0, TwistSign sign = TwistSign::Consistent) {
    if (S.N < 2) throw DimensionMismatch("tau2_compact needs N >= 2");
    DiffContext ctx{S.N, copy, sign};
    NCPoly t1 = qtau1(S, 0, 0, copy);
    TensorPoly t = TensorPoly::pure(t1, t1);
    ScalarQ q = ScalarQ::q_power(1);
    auto bar = qdiff_apply({DiffKind::DBarR, 1}, t, ctx) - q * qdiff_apply({DiffKind::DBarL, 1}, t, ctx);
    auto both = qdiff_apply({DiffKind::DR, 1}, bar, ctx) - q * qdiff_apply({DiffKind::DL, 1}, bar, ctx);
    both = qdiff_apply({DiffKind::M, 1, -1}, both, ctx);
    both = qdiff_apply({DiffKind::MBar, 1, 1}, both, ctx);
    return both.multiply();
}

// The expanded four-term form with the compact operators cD.
inline NCPoly tau2_compact_expanded(const QuantumSetup& S, int copy = 0) {
    NCPoly t1 = qtau1(S, 0, 0, copy);
    TensorPoly t = TensorPoly::pure(t1, t1);
    ScalarQ q = ScalarQ::q_power(1);
    auto bar = compact_apply(CompactOp::BarR, t, copy) - q * compact_apply(CompactOp::BarL, t, copy);
    auto both = compact_apply(CompactOp::R, bar, copy) - q * compact_apply(CompactOp::L, bar, copy);
    return both.multiply();
}

}  // namespace qtau
