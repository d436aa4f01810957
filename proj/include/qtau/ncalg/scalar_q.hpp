#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/rational.hpp"

namespace qtau {

// Laurent polynomial in q with exact rational coefficients.
class ScalarQ {
public:
    using Term = std::pair<int, Rational>;

    ScalarQ() = default;
    ScalarQ(long c) { if (c != 0) terms_.emplace_back(0, Rational(c)); }
    ScalarQ(const Rational& c) { if (c != 0) terms_.emplace_back(0, c); }

    static ScalarQ monomial(int exp, const Rational& c = 1) {
        ScalarQ s;
        if (c != 0) s.terms_.emplace_back(exp, c);
        return s;
    }
    static ScalarQ q_power(int k) { return monomial(k, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

    ScalarQ& operator+=(const ScalarQ& o) { return *this = merge(*this, o, 1); }
    ScalarQ& operator-=(const ScalarQ& o) { return *this = merge(*this, o, -1); }
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }

    friend ScalarQ operator+(const ScalarQ& a, const ScalarQ& b) { return merge(a, b, 1); }
    friend ScalarQ operator-(const ScalarQ& a, const ScalarQ& b) { return merge(a, b, -1); }
    friend ScalarQ operator-(const ScalarQ& a) {
        ScalarQ r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
        if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
        std::map<int, Rational> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
        ScalarQ r;
        for (auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, std::move(c));
        return r;
    }

    // Multiplies by c q^k.
    ScalarQ scaled(int k, const Rational& c = 1) const {
        ScalarQ r;
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [e, v] : terms_) r.terms_.emplace_back(e + k, v * c);
        return r;
    }
    ScalarQ shifted(int k) const { return scaled(k, 1); }

    // q -> q^{-1}
    ScalarQ inverted() const {
        ScalarQ r;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
        return r;
    }

    Rational evaluate(const Rational& q) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational p = 1;
            Rational base = e >= 0 ? q : Rational(1) / q;
            for (int k = 0; k < std::abs(e); ++k) p *= base;
            sum += c * p;
        }
        return sum;
    }
    Rational at_one() const {
        Rational sum = 0;
        for (const auto& t : terms_) sum += t.second;
        return sum;
    }

    // Exact Laurent division; throws InexactDivision when the quotient is not a Laurent polynomial.
    ScalarQ divide_exact(const ScalarQ& d) const {
        if (d.is_zero()) throw InexactDivision("division by zero ScalarQ");
        if (is_zero()) return {};
        std::vector<Rational> num(max_exp() - min_exp() + 1), den(d.max_exp() - d.min_exp() + 1);
        for (const auto& [e, c] : terms_) num[e - min_exp()] = c;
        for (const auto& [e, c] : d.terms_) den[e - d.min_exp()] = c;
        if (den.size() > num.size()) throw InexactDivision("inexact ScalarQ division");
        std::vector<Rational> quo(num.size() - den.size() + 1);
        for (std::size_t i = quo.size(); i-- > 0;) {
            Rational c = num[i + den.size() - 1] / den.back();
            quo[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
        }
        for (const auto& r : num)
            if (r != 0) throw InexactDivision("inexact ScalarQ division");
        ScalarQ r;
        int base = min_exp() - d.min_exp();
        for (std::size_t i = 0; i < quo.size(); ++i)
            if (quo[i] != 0) r.terms_.emplace_back(base + static_cast<int>(i), quo[i]);
        return r;
    }

    friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = abs(c);
            bool neg = c < 0;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            bool unit = mag == 1;
            if (!unit || e == 0) out += mag.get_str();
            if (e != 0) {
                if (!unit) out += "*";
                out += "q";
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    static ScalarQ merge(const ScalarQ& a, const ScalarQ& b, int sign) {
        ScalarQ r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                r.terms_.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
                ++j;
            } else {
                Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
                if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

// [k]_q = (1 - q^{2k}) / (1 - q^2)
inline ScalarQ q_integer(int k) {
    ScalarQ r;
    if (k >= 0) {
        for (int e = 0; e < k; ++e) r += ScalarQ::q_power(2 * e);
    } else {
        for (int e = k; e < 0; ++e) r -= ScalarQ::q_power(2 * e);
    }
    return r;
}

inline ScalarQ q_factorial(int k) {
    ScalarQ r = 1;
    for (int j = 2; j <= k; ++j) r *= q_integer(j);
    return r;
}

inline ScalarQ minus_q_power(int k) { return ScalarQ::monomial(k, (k % 2 == 0) ? 1 : -1); }

}  // namespace qtau
