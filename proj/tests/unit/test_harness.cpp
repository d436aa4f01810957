#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "qtau/classical/wedge.hpp"
#include "qtau/harness/report.hpp"

using namespace qtau;

namespace {

std::set<std::string> names(const std::vector<RegisteredCheck>& reg) {
    std::set<std::string> s;
    for (const auto& c : reg) s.insert(c.name);
    return s;
}

Scenario classical(int N, std::vector<std::string> checks = {}) {
    Scenario sc;
    sc.N = N;
    sc.checks = std::move(checks);
    return sc;
}

}  // namespace

TEST(Random, SeededAndUnimodular) {
    EXPECT_EQ(random_group_element(3, 9), random_group_element(3, 9));
    EXPECT_NE(random_group_element(3, 9), random_group_element(3, 10));
    EXPECT_EQ(random_group_element(4, 9, 0), Matrix<Rational>::identity(4));
    for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(det_leibniz(random_group_element(4, s)), 1);
    SeededRng a(5), b(5);
    for (int k = 0; k < 20; ++k) EXPECT_EQ(a.small_rational(7), b.small_rational(7));
}

TEST(Random, RationalsAreCanonical) {
    SeededRng r(1);
    for (int k = 0; k < 200; ++k) {
        Rational x = r.small_rational(6);
        Rational y = x;
        y.canonicalize();
        EXPECT_EQ(x.get_str(), y.get_str());
    }
}

TEST(Scenario, Validation) {
    EXPECT_THROW(validate(classical(1)), ConfigError);
    EXPECT_THROW(validate(classical(5)), ConfigError);
    Scenario big = classical(5);
    big.unsafe_large = true;
    EXPECT_NO_THROW(validate(big));
    Scenario q;
    q.suite = Suite::Quantum;
    q.N = 4;
    EXPECT_THROW(validate(q), ConfigError);
    Scenario lv = classical(3);
    lv.levels = {4};
    EXPECT_THROW(validate(lv), ConfigError);
}

TEST(Scenario, EnvironmentCap) {
    setenv("QTAU_MAX_N", "5", 1);
    EXPECT_NO_THROW(validate(classical(5)));
    setenv("QTAU_MAX_N", "five", 1);
    EXPECT_THROW(validate(classical(3)), ConfigError);
    unsetenv("QTAU_MAX_N");
}

TEST(Registry, ExhaustiveAndUnique) {
    std::set<std::string> cl{"det", "schur", "shift", "param-a", "hirota", "bilinear",
                             "car", "baker", "bia",   "evolve",  "factorize"};
    std::set<std::string> qu{"qtau1", "detq", "tau2", "dd-comm", "gamma", "baker", "bia", "classical-limit"};
    EXPECT_EQ(names(classical_registry()), cl);
    EXPECT_EQ(names(quantum_registry()), qu);
    EXPECT_EQ(classical_registry().size(), cl.size());
    EXPECT_EQ(quantum_registry().size(), qu.size());
    // the default suite runs the whole registry
    EXPECT_EQ(resolve_checks(classical(3)).size(), cl.size());
}

TEST(Registry, UnknownCheckNamesTheOffender) {
    try {
        run_suite(classical(3, {"det", "nope"}));
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("nope"), std::string::npos);
    }
}

TEST(Registry, EveryCheckRunsWithoutErrors) {
    for (Suite s : {Suite::Classical, Suite::Quantum}) {
        Scenario sc;
        sc.suite = s;
        sc.N = 2;
        auto rep = run_suite(sc, 4);
        EXPECT_EQ(rep.count(Status::Error), 0u);
        std::set<std::string> seen;
        for (const auto& r : rep.checks) seen.insert(r.name.substr(0, r.name.find_first_of(" :")));
        EXPECT_EQ(seen, names(registry(s)));
    }
}

TEST(Report, JsonSchemaAndPassingExitCode) {
    auto rep = run_suite(classical(3, {"det", "schur", "hirota"}));
    EXPECT_EQ(exit_code(rep), 0);
    auto j = report_json(rep);
    EXPECT_EQ(j["schema"], "qtau-report/1");
    EXPECT_EQ(j["scenario"]["N"], 3);
    EXPECT_EQ(j["scenario"]["suite"], "classical");
    ASSERT_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        EXPECT_EQ(c["status"], "pass");
        EXPECT_TRUE(c["witness"].is_null());
        EXPECT_TRUE(c["runtime_ms"].is_number_integer());
        EXPECT_EQ(c["residual_terms"], 0);
    }
    EXPECT_EQ(j["summary"]["pass"], rep.checks.size());
    EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Report, FailingCheckHasWitness) {
    Scenario sc = classical(3, {"baker"});
    auto rep = run_suite(sc);
    EXPECT_EQ(exit_code(rep), 1);
    auto j = report_json(rep);
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["status"] == "fail") {
            found = true;
            EXPECT_TRUE(c["witness"].is_string());
            EXPECT_GT(c["residual_terms"].get<int>(), 0);
        }
    EXPECT_TRUE(found);
}

TEST(Report, DeterministicModuloRuntime) {
    Scenario sc = classical(3);
    sc.seed = 7;
    auto a = report_json(run_suite(sc, 1), false).dump();
    auto b = report_json(run_suite(sc, 4), false).dump();
    EXPECT_EQ(a, b);
}

TEST(Report, EmitToFileAndBadPath) {
    auto rep = run_suite(classical(2, {"det"}));
    auto path = std::filesystem::temp_directory_path() / "qtau_report_test.json";
    emit_report(rep, ReportFormat::Json, path.string());
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["schema"], "qtau-report/1");
    std::filesystem::remove(path);
    EXPECT_THROW(emit_report(rep, ReportFormat::Text, "/nonexistent-dir/r.txt"), IoError);
    EXPECT_NE(report_text(rep).find("[pass] det:"), std::string::npos);
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(Checks, ClassicalSuiteRecordsAtN3) {
    auto rep = run_suite(classical(3));
    for (const auto& r : rep.checks) {
        bool printed = r.name.rfind("baker: ", 0) == 0;
        if (!printed) {
            EXPECT_EQ(r.status, Status::Pass) << r.name;
        }
    }
}
