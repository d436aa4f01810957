#pragma once

#include <algorithm>
#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtau/ncalg/errors.hpp"
#include "qtau/ncalg/symbol.hpp"

namespace qtau {

// Generators in canonical priority order plus pairwise q-commutation data.
// relation(a, b) = c means x_a x_b = q^c x_b x_a; absent means no relation.
class Alphabet {
public:
    class Builder {
    public:
        Builder& add(Symbol s, bool invertible = false) {
            for (const auto& g : gens_)
                if (g.first == s) return *this;
            gens_.emplace_back(s, invertible);
            return *this;
        }
        Builder& relate(Symbol a, Symbol b, int c) {
            rels_.push_back({a, b, c});
            return *this;
        }
        Builder& commute(Symbol a, Symbol b) { return relate(a, b, 0); }

        std::shared_ptr<const Alphabet> build() const {
            auto alpha = std::shared_ptr<Alphabet>(new Alphabet());
            auto gens = gens_;
            std::sort(gens.begin(), gens.end());
            for (const auto& [s, inv] : gens) {
                alpha->symbols_.push_back(s);
                alpha->invertible_.push_back(inv);
            }
            std::size_t n = gens.size();
            alpha->rel_.assign(n * n, kNone);
            for (std::size_t a = 0; a < n; ++a) alpha->rel_[a * n + a] = 0;
            for (const auto& r : rels_) {
                int a = alpha->id(r.a);
                int b = alpha->id(r.b);
                if (a == b) continue;
                alpha->rel_[a * n + b] = r.c;
                alpha->rel_[b * n + a] = -r.c;
            }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    Sector sa = alpha->symbols_[a].sector();
                    bool quasi = sa == Sector::Xi || sa == Sector::XiBar || sa == Sector::Lambda;
                    if (quasi && sa == alpha->symbols_[b].sector() && alpha->rel_[a * n + b] == kNone)
                        throw Error("alphabet: missing relation in quasi-commutative sector between " +
                                    alpha->symbols_[a].name() + " and " + alpha->symbols_[b].name());
                }
            return alpha;
        }

    private:
        struct Rel {
            Symbol a, b;
            int c;
        };
        std::vector<std::pair<Symbol, bool>> gens_;
        std::vector<Rel> rels_;
    };

    static constexpr int kNone = INT_MIN;

    std::size_t size() const { return symbols_.size(); }
    Symbol symbol(int id) const { return symbols_.at(id); }
    bool invertible(int id) const { return invertible_.at(id); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    std::optional<int> find(Symbol s) const {
        auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
        if (it == symbols_.end() || *it != s) return std::nullopt;
        return static_cast<int>(it - symbols_.begin());
    }
    int id(Symbol s) const {
        auto f = find(s);
        if (!f) throw IndexOutOfRange("alphabet has no generator " + s.name());
        return *f;
    }

    bool related(int a, int b) const { return rel_[a * symbols_.size() + b] != kNone; }
    int exponent(int a, int b) const { return rel_[a * symbols_.size() + b]; }
    std::optional<int> relation(int a, int b) const {
        int c = rel_[a * symbols_.size() + b];
        if (c == kNone) return std::nullopt;
        return c;
    }

private:
    Alphabet() = default;
    std::vector<Symbol> symbols_;
    std::vector<bool> invertible_;
    std::vector<int> rel_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace qtau
