#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "qtau/classical/tau.hpp"
#include "qtau/ncalg/ncpoly.hpp"

namespace qtau {

enum class Suite { Classical, Quantum };

inline std::string suite_name(Suite s) { return s == Suite::Classical ? "classical" : "quantum"; }

struct Scenario {
    Suite suite = Suite::Classical;
    int N = 3;
    std::vector<int> levels;  // empty: every level the suite allows
    Parametrization param = Parametrization::B;
    std::vector<std::string> checks;  // empty: the whole registry
    std::uint64_t seed = 42;
    bool symbolic_g = false;
    bool unsafe_large = false;
};

enum class Status { Pass, Fail, Error };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

struct CheckRecord {
    std::string name;
    Status status = Status::Pass;
    std::size_t residual_terms = 0;
    std::optional<std::string> witness;
    std::int64_t runtime_ms = 0;
};

inline std::string clip(std::string s, std::size_t limit = 240) {
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

inline std::string first_term(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto& [m, c] = *p.terms().begin();
    return clip(c.get_str() + "*" + monomial_string(m));
}

inline std::string first_term(const NCPoly& p) {
    if (p.is_zero()) return "0";
    const auto& [w, c] = *p.terms().begin();
    return clip(p.term_string(w, c));
}

template <class P>
CheckRecord residual_record(std::string name, const P& residual) {
    CheckRecord r;
    r.name = std::move(name);
    r.residual_terms = residual.term_count();
    r.status = residual.is_zero() ? Status::Pass : Status::Fail;
    if (!residual.is_zero()) r.witness = first_term(residual);
    return r;
}

inline CheckRecord count_record(std::string name, std::size_t defect, const std::string& witness) {
    CheckRecord r;
    r.name = std::move(name);
    r.residual_terms = defect;
    r.status = defect == 0 ? Status::Pass : Status::Fail;
    if (defect) r.witness = clip(witness);
    return r;
}

inline int default_max_n(Suite s) { return s == Suite::Classical ? 4 : 3; }

// QTAU_MAX_N overrides the per-suite cap.
inline int max_n(Suite s) {
    if (const char* env = std::getenv("QTAU_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return static_cast<int>(v);
        throw ConfigError(std::string("QTAU_MAX_N is not an integer >= 2: ") + env);
    }
    return default_max_n(s);
}

inline std::vector<int> scenario_levels(const Scenario& sc, int lo, int hi) {
    std::vector<int> out;
    if (sc.levels.empty()) {
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    for (int n : sc.levels)
        if (n >= lo && n <= hi) out.push_back(n);
    return out;
}

inline void validate(const Scenario& sc) {
    if (sc.N < 2) throw ConfigError("N must be at least 2");
    if (!sc.unsafe_large && sc.N > max_n(sc.suite))
        throw ConfigError("N = " + std::to_string(sc.N) + " exceeds the " + suite_name(sc.suite) + " cap of " +
                          std::to_string(max_n(sc.suite)) + " (use --unsafe-large or QTAU_MAX_N)");
    for (int n : sc.levels) {
        if (n < 0 || n > sc.N) throw ConfigError("level " + std::to_string(n) + " outside 0.." + std::to_string(sc.N));
        if (sc.suite == Suite::Quantum && !sc.unsafe_large && n > 3)
            throw ConfigError("quantum levels are capped at 3 (use --unsafe-large)");
    }
}

}  // namespace qtau
