#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtau/ncalg/alphabet.hpp"
#include "qtau/ncalg/poly.hpp"
#include "qtau/ncalg/scalar_q.hpp"

namespace qtau {

struct Letter {
    std::uint16_t gen;
    std::int16_t exp;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

enum class Side { Left, Right };

// Lexicographic normal form in the partially commutative monoid: repeatedly emit the smallest
// letter that can reach the front. Returns the accumulated q-exponent; w is rewritten in place.
inline int canonicalize(const Alphabet& alpha, Word& w) {
    int qexp = 0;
    bool again = true;
    std::vector<int> blocked;
    std::vector<char> used;
    while (again) {
        again = false;
        Word rest;
        rest.reserve(w.size());
        for (const auto& l : w)
            if (l.exp != 0) rest.push_back(l);
        const std::size_t L = rest.size();
        blocked.assign(L, 0);
        used.assign(L, 0);
        for (std::size_t p = 0; p < L; ++p)
            for (std::size_t r = 0; r < p; ++r)
                if (rest[r].gen != rest[p].gen && !alpha.related(rest[r].gen, rest[p].gen)) ++blocked[p];
        Word out;
        out.reserve(L);
        for (std::size_t step = 0; step < L; ++step) {
            std::size_t best = L;
            for (std::size_t p = 0; p < L; ++p)
                if (!used[p] && blocked[p] == 0 && (best == L || rest[p].gen < rest[best].gen)) best = p;
            const Letter pick = rest[best];
            for (std::size_t r = 0; r < best; ++r)
                if (!used[r] && rest[r].gen != pick.gen)
                    qexp += alpha.exponent(rest[r].gen, pick.gen) * rest[r].exp * pick.exp;
            used[best] = 1;
            for (std::size_t r = best + 1; r < L; ++r)
                if (!used[r] && rest[r].gen != pick.gen && !alpha.related(pick.gen, rest[r].gen)) --blocked[r];
            if (!out.empty() && out.back().gen == pick.gen) {
                out.back().exp = static_cast<std::int16_t>(out.back().exp + pick.exp);
                if (out.back().exp == 0) {
                    out.pop_back();
                    again = true;
                }
            } else {
                out.push_back(pick);
            }
        }
        w = std::move(out);
    }
    return qexp;
}

class NCPoly {
public:
    using Terms = std::map<Word, ScalarQ>;

    NCPoly() = default;
    NCPoly(long c) : NCPoly(ScalarQ(c)) {}
    NCPoly(const Rational& c) : NCPoly(ScalarQ(c)) {}
    NCPoly(const ScalarQ& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }

    static NCPoly generator(AlphabetPtr alpha, Symbol s, int exp = 1) {
        return word(std::move(alpha), {{s, exp}});
    }

    // normal_order of a raw generator sequence.
    static NCPoly word(AlphabetPtr alpha, const std::vector<std::pair<Symbol, int>>& raw,
                       const ScalarQ& coef = 1) {
        Word w;
        for (const auto& [s, e] : raw) {
            int id = alpha->id(s);
            if (e < 0 && !alpha->invertible(id)) throw NotDivisible("negative power of non-invertible " + s.name());
            w.push_back({static_cast<std::uint16_t>(id), static_cast<std::int16_t>(e)});
        }
        NCPoly p;
        p.alpha_ = std::move(alpha);
        int k = canonicalize(*p.alpha_, w);
        p.add_term(w, coef.shifted(k));
        return p;
    }

    static NCPoly from_terms(AlphabetPtr alpha, Terms terms) {
        NCPoly p;
        p.alpha_ = std::move(alpha);
        for (auto& [w, c] : terms)
            if (!c.is_zero()) p.terms_.emplace(w, std::move(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    ScalarQ constant_term() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? ScalarQ{} : it->second;
    }

    void add_term(const Word& w, const ScalarQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        adopt(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        adopt(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(const NCPoly& a) {
        NCPoly r;
        r.alpha_ = a.alpha_;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend NCPoly operator*(const ScalarQ& s, const NCPoly& a) {
        NCPoly r;
        r.alpha_ = a.alpha_;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.terms_) {
            ScalarQ v = s * c;
            if (!v.is_zero()) r.terms_.emplace(w, std::move(v));
        }
        return r;
    }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        r.alpha_ = a.alpha_ ? a.alpha_ : b.alpha_;
        if (a.alpha_ && b.alpha_ && a.alpha_ != b.alpha_) throw Error("nc_mul: alphabets differ");
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w;
                w.reserve(wa.size() + wb.size());
                w.insert(w.end(), wa.begin(), wa.end());
                w.insert(w.end(), wb.begin(), wb.end());
                int k = (wa.empty() || wb.empty()) ? 0 : canonicalize(*r.alpha_, w);
                r.add_term(w, (ca * cb).shifted(k));
            }
        }
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    int degree_in(Symbol s) const {
        if (!alpha_) return 0;
        auto id = alpha_->find(s);
        if (!id) return 0;
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, word_degree(t.first, *id));
        return d;
    }

    // Multiplies each term by q^{k * (exponent of s in the word)} for every (s, k) in rules.
    NCPoly twist(const std::vector<std::pair<Symbol, int>>& rules) const {
        if (!alpha_) return *this;
        std::vector<std::pair<int, int>> ids;
        for (const auto& [s, k] : rules) {
            auto id = alpha_->find(s);
            if (id && k != 0) ids.emplace_back(*id, k);
        }
        if (ids.empty()) return *this;
        NCPoly r;
        r.alpha_ = alpha_;
        for (const auto& [w, c] : terms_) {
            int e = 0;
            for (const auto& [id, k] : ids) e += k * word_degree(w, id);
            r.terms_.emplace(w, c.shifted(e));
        }
        return r;
    }

    NCPoly side_divide(Symbol s, Side side) const {
        NCPoly r;
        r.alpha_ = alpha_;
        if (is_zero()) return r;
        if (!alpha_) throw NotDivisible("constant not divisible by " + s.name());
        int g = alpha_->id(s);
        for (const auto& [w, c] : terms_) {
            Word out = w;
            int qexp = 0;
            std::ptrdiff_t pos = -1;
            if (side == Side::Left) {
                for (std::size_t p = 0; p < w.size(); ++p)
                    if (w[p].gen == g && w[p].exp > 0) { pos = static_cast<std::ptrdiff_t>(p); break; }
            } else {
                for (std::size_t p = w.size(); p-- > 0;)
                    if (w[p].gen == g && w[p].exp > 0) { pos = static_cast<std::ptrdiff_t>(p); break; }
            }
            if (pos < 0) {
                if (!alpha_->invertible(g))
                    throw NotDivisible("term " + word_string(w) + " lacks " + s.name());
                Letter inv{static_cast<std::uint16_t>(g), -1};
                if (side == Side::Left) out.insert(out.begin(), inv);
                else out.push_back(inv);
            } else if (side == Side::Left) {
                for (std::ptrdiff_t p = 0; p < pos; ++p) {
                    if (!alpha_->related(w[p].gen, g))
                        throw OrderingObstruction(s.name() + " cannot cross " + alpha_->symbol(w[p].gen).name());
                    qexp += alpha_->exponent(w[p].gen, g) * w[p].exp;
                }
                out[pos].exp = static_cast<std::int16_t>(out[pos].exp - 1);
            } else {
                for (std::size_t p = pos + 1; p < w.size(); ++p) {
                    if (!alpha_->related(g, w[p].gen))
                        throw OrderingObstruction(s.name() + " cannot cross " + alpha_->symbol(w[p].gen).name());
                    qexp += alpha_->exponent(g, w[p].gen) * w[p].exp;
                }
                out[pos].exp = static_cast<std::int16_t>(out[pos].exp - 1);
            }
            qexp += canonicalize(*alpha_, out);
            r.add_term(out, c.shifted(qexp));
        }
        return r;
    }

    // Sets every generator matching pred to zero.
    NCPoly drop(const std::function<bool(Symbol)>& pred) const {
        NCPoly r;
        r.alpha_ = alpha_;
        for (const auto& [w, c] : terms_) {
            bool keep = true;
            for (const auto& l : w)
                if (pred(alpha_->symbol(l.gen))) { keep = false; break; }
            if (keep) r.terms_.emplace(w, c);
        }
        return r;
    }

    // Substitutes a number for every generator matching the map (q-independent values only).
    NCPoly evaluate(const std::map<Symbol, Rational>& values) const {
        NCPoly r;
        r.alpha_ = alpha_;
        for (const auto& [w, c] : terms_) {
            Rational coef = 1;
            Word rest;
            for (const auto& l : w) {
                auto it = values.find(alpha_->symbol(l.gen));
                if (it == values.end()) {
                    rest.push_back(l);
                    continue;
                }
                Rational base = l.exp > 0 ? it->second : Rational(1) / it->second;
                for (int k = 0; k < std::abs(static_cast<int>(l.exp)); ++k) coef *= base;
            }
            int qexp = canonicalize(*alpha_, rest);
            r.add_term(rest, c.scaled(qexp, coef));
        }
        return r;
    }

    NCPoly specialize_q(const Rational& value) const {
        NCPoly r;
        r.alpha_ = alpha_;
        for (const auto& [w, c] : terms_) r.add_term(w, ScalarQ(c.evaluate(value)));
        return r;
    }

    // q = 1 limit as a commutative polynomial.
    Poly commutative() const {
        Poly p;
        for (const auto& [w, c] : terms_) {
            Monomial m;
            for (const auto& l : w) m = monomial_mul(m, {{alpha_->symbol(l.gen), l.exp}});
            p.add_term(m, c.at_one());
        }
        return p;
    }

    std::string word_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        for (const auto& l : w) {
            if (!out.empty()) out += "*";
            out += alpha_ ? alpha_->symbol(l.gen).name() : "?";
            if (l.exp != 1) out += "^" + std::to_string(l.exp);
        }
        return out;
    }

    std::string term_string(const Word& w, const ScalarQ& c) const {
        std::string coef = c.to_string();
        if (w.empty()) return coef;
        if (coef == "1") return word_string(w);
        return "(" + coef + ")*" + word_string(w);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += term_string(w, c);
        }
        return out;
    }

private:
    static int word_degree(const Word& w, int id) {
        int d = 0;
        for (const auto& l : w)
            if (l.gen == id) d += l.exp;
        return d;
    }

    void adopt(const NCPoly& o) {
        if (!alpha_) alpha_ = o.alpha_;
        else if (o.alpha_ && o.alpha_ != alpha_) throw Error("alphabets differ");
    }

    Terms terms_;
    AlphabetPtr alpha_;
};

inline NCPoly normal_order(AlphabetPtr alpha, const std::vector<std::pair<Symbol, int>>& raw) {
    return NCPoly::word(std::move(alpha), raw);
}

inline NCPoly twist(const NCPoly& p, Symbol gen, int sign, int power) { return p.twist({{gen, sign * power}}); }

inline NCPoly side_divide(const NCPoly& p, Symbol gen, Side side) { return p.side_divide(gen, side); }

inline ScalarQ specialize_q(const ScalarQ& s, const Rational& value) { return ScalarQ(s.evaluate(value)); }

inline NCPoly specialize_q(const NCPoly& p, const Rational& value) { return p.specialize_q(value); }

}  // namespace qtau
