#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qtau/harness/classical_checks.hpp"
#include "qtau/harness/quantum_checks.hpp"
#include "qtau/harness/scenario.hpp"

namespace qtau {

using CheckFn = std::function<std::vector<CheckRecord>(const Scenario&)>;

struct RegisteredCheck {
    std::string name;
    std::string summary;
    CheckFn fn;
};

inline const std::vector<RegisteredCheck>& classical_registry() {
    static const std::vector<RegisteredCheck> r = {
        {"det", "tau_direct = tau_det on every level", classical_check::det},
        {"schur", "Cauchy-Binet Schur expansion = tau_det", classical_check::schur},
        {"shift", "tau_1 matrix elements as time derivatives", classical_check::shift},
        {"param-a", "parametrization A: derivative form, bordered determinant, degree bound", classical_check::param_a},
        {"hirota", "first Toda equation with the global sign", classical_check::hirota},
        {"bilinear", "fermion bilinear identity and Gamma invariance", classical_check::bilinear},
        {"car", "canonical anticommutation relations on wedge bases", classical_check::car},
        {"baker", "Baker-Akhiezer relations, displayed and sign-corrected", classical_check::baker},
        {"bia", "bilinear identity in parametrization A", classical_check::bia},
        {"evolve", "Miwa, Schur and s_k rows of the evolution operators", classical_check::evolve},
        {"factorize", "simple-root factorization round trip and leading coefficients", classical_check::factorize},
    };
    return r;
}

inline const std::vector<RegisteredCheck>& quantum_registry() {
    static const std::vector<RegisteredCheck> r = {
        {"qtau1", "tau_1 matrix elements and their difference form", quantum_check::qtau1_check},
        {"detq", "direct q-wedge tau against the q-determinant-like sum", quantum_check::detq},
        {"tau2", "four-term tau_2 expansion and the DD form", quantum_check::tau2},
        {"dd-comm", "commutation of the difference operators on random inputs",
         [](const Scenario& sc) { return quantum_check::dd_comm(sc); }},
        {"gamma", "Gamma_q commutes with g x g", quantum_check::gamma_check},
        {"baker", "quantum Baker-Akhiezer relations", quantum_check::baker},
        {"bia", "quantum bilinear identity with two time copies", quantum_check::bia},
        {"classical-limit", "q = 1 specializations against the classical functions", quantum_check::classical_limit},
    };
    return r;
}

inline const std::vector<RegisteredCheck>& registry(Suite s) {
    return s == Suite::Classical ? classical_registry() : quantum_registry();
}

inline std::vector<const RegisteredCheck*> resolve_checks(const Scenario& sc) {
    const auto& reg = registry(sc.suite);
    std::vector<const RegisteredCheck*> out;
    if (sc.checks.empty()) {
        for (const auto& c : reg) out.push_back(&c);
        return out;
    }
    for (const auto& name : sc.checks) {
        auto it = std::find_if(reg.begin(), reg.end(), [&](const RegisteredCheck& c) { return c.name == name; });
        if (it == reg.end()) throw ConfigError("unknown " + suite_name(sc.suite) + " check: " + name);
        out.push_back(&*it);
    }
    return out;
}

struct Report {
    Scenario scenario;
    std::vector<CheckRecord> checks;

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
    }
    bool all_pass() const { return count(Status::Pass) == checks.size(); }
};

inline std::vector<CheckRecord> run_check(const RegisteredCheck& c, const Scenario& sc) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRecord> out;
    try {
        out = c.fn(sc);
    } catch (const std::exception& e) {
        CheckRecord r;
        r.name = c.name;
        r.status = Status::Error;
        r.witness = clip(e.what());
        out = {r};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    // Records carry the runtime of the check that produced them.
    for (auto& r : out) r.runtime_ms = ms;
    return out;
}

// Runs every resolved check; record order follows the registry regardless of jobs.
inline Report run_suite(const Scenario& sc, int jobs = 1) {
    validate(sc);
    auto checks = resolve_checks(sc);
    std::vector<std::vector<CheckRecord>> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < checks.size();) results[k] = run_check(*checks[k], sc);
    };
    int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(checks.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Report rep{sc, {}};
    for (auto& v : results)
        for (auto& r : v) rep.checks.push_back(std::move(r));
    return rep;
}

}  // namespace qtau
