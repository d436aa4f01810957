#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/rational.hpp"
#include "qtau/ncalg/symbol.hpp"

namespace qtau {

// Commutative monomial: sorted (symbol, exponent) pairs, exponents nonzero.
using Monomial = std::vector<std::pair<Symbol, int>>;

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            r.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            r.push_back(*j++);
        } else {
            int e = i->second + j->second;
            if (e != 0) r.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

inline int monomial_degree(const Monomial& m, Symbol s) {
    for (const auto& [v, e] : m)
        if (v == s) return e;
    return 0;
}

inline std::string monomial_string(const Monomial& m) {
    std::string out;
    for (const auto& [v, e] : m) {
        if (!out.empty()) out += "*";
        out += v.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// Commutative polynomial over Q (Laurent exponents allowed).
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long c) { if (c != 0) terms_[{}] = c; }
    Poly(const Rational& c) { if (c != 0) terms_[{}] = c; }

    static Poly variable(Symbol s, int exp = 1) {
        Poly p;
        p.terms_[exp == 0 ? Monomial{} : Monomial{{s, exp}}] = 1;
        return p;
    }
    static Poly from_monomial(const Monomial& m, const Rational& c = 1) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(Symbol s) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = monomial_degree(m, s);
            if (e == 0) continue;
            Monomial mm = monomial_mul(m, {{s, -1}});
            r.add_term(mm, c * e);
        }
        return r;
    }

    int degree_in(Symbol s) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, monomial_degree(t.first, s));
        return d;
    }

    // Exact division by a monomial; every resulting exponent must stay non-negative.
    Poly divide_monomial(const Monomial& m) const {
        Monomial inv;
        for (const auto& [v, e] : m) inv.emplace_back(v, -e);
        Poly r;
        for (const auto& [mono, c] : terms_) {
            Monomial q = monomial_mul(mono, inv);
            for (const auto& [v, e] : q)
                if (e < 0) throw NotDivisible("polynomial not divisible by " + monomial_string(m));
            r.add_term(q, c);
        }
        return r;
    }

    Poly substitute(Symbol s, const Poly& value) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = monomial_degree(m, s);
            if (e == 0) {
                r.add_term(m, c);
                continue;
            }
            if (e < 0) throw NotDivisible("cannot substitute into negative power of " + s.name());
            Monomial rest = monomial_mul(m, {{s, -e}});
            Poly piece = from_monomial(rest, c);
            for (int k = 0; k < e; ++k) piece = piece * value;
            r += piece;
        }
        return r;
    }

    Poly substitute(const std::map<Symbol, Rational>& values) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Rational coef = c;
            Monomial rest;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) {
                    rest.emplace_back(v, e);
                    continue;
                }
                Rational base = e >= 0 ? it->second : Rational(1) / it->second;
                for (int k = 0; k < std::abs(e); ++k) coef *= base;
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Rational mag = abs(c);
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (m.empty()) {
                out += mag.get_str();
            } else {
                if (mag != 1) out += mag.get_str() + "*";
                out += monomial_string(m);
            }
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace qtau
