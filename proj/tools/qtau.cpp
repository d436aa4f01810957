#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtau/harness/report.hpp"

using namespace qtau;

namespace {

Parametrization parse_param(const std::string& s) {
    if (s == "A") return Parametrization::A;
    if (s == "B") return Parametrization::B;
    if (s == "C") return Parametrization::C;
    throw ConfigError("unknown parametrization: " + s);
}

struct VerifyArgs {
    int N = 3;
    std::vector<int> levels;
    std::string param = "B";
    std::vector<std::string> checks;
    std::uint64_t seed = 42;
    bool symbolic_g = false;
    bool unsafe_large = false;
    std::string out;
    std::string format = "json";
    int jobs = 1;
};

void add_verify_options(CLI::App* cmd, VerifyArgs& a, bool classical) {
    cmd->add_option("--N", a.N, "rank of SL(N)")->capture_default_str();
    cmd->add_option("--levels", a.levels, "fundamental levels n")->delimiter(',');
    if (classical) {
        cmd->add_option("--param", a.param, "evolution parametrization")
            ->check(CLI::IsMember({"A", "B", "C"}))
            ->capture_default_str();
        cmd->add_flag("--symbolic-g", a.symbolic_g, "use a fully symbolic group element");
    }
    cmd->add_option("--checks", a.checks, "subset of registered checks")->delimiter(',');
    cmd->add_option("--seed", a.seed, "seed for random group elements and inputs")->capture_default_str();
    cmd->add_option("--out", a.out, "report path (stdout when omitted)");
    cmd->add_option("--format", a.format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    cmd->add_option("--jobs", a.jobs, "checks run concurrently")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--unsafe-large", a.unsafe_large, "lift the desk-scale caps on N and n");
}

int verify(Suite suite, const VerifyArgs& a) {
    Scenario sc;
    sc.suite = suite;
    sc.N = a.N;
    sc.levels = a.levels;
    sc.param = parse_param(a.param);
    sc.checks = a.checks;
    sc.seed = a.seed;
    sc.symbolic_g = a.symbolic_g;
    sc.unsafe_large = a.unsafe_large;
    auto fmt = parse_format(a.format);
    Report rep = run_suite(sc, a.jobs);
    emit_report(rep, fmt, a.out);
    if (!a.out.empty())
        std::cerr << "pass " << rep.count(Status::Pass) << ", fail " << rep.count(Status::Fail) << ", error "
                  << rep.count(Status::Error) << " -> " << a.out << "\n";
    return exit_code(rep);
}

int demo_tau2(int N) {
    if (N < 2 || N > max_n(Suite::Quantum)) throw ConfigError("demo tau2 needs 2 <= N <= " + std::to_string(max_n(Suite::Quantum)));
    auto S = make_quantum_setup(N);
    std::cout << "tau_2 for SL_q(" << N << ") as a sum of products of twisted tau_1 matrix elements:\n";
    for (const auto& t : quantum_check::tau2_expansion()) std::cout << "  + " << quantum_check::tau2_term_string(t) << "\n";
    NCPoly lhs = quantum_check::tau2_printed(S);
    NCPoly qd = qtau_qdet(S, 2);
    std::cout << "expansion: " << lhs.term_count() << " terms\n";
    std::cout << "q-determinant sum: " << qd.term_count() << " terms\n";
    std::cout << "difference: " << (lhs - qd).term_count() << " terms\n";
    if (N == 2) std::cout << "tau_2 = " << qd.to_string() << "\n";
    return (lhs - qd).is_zero() ? 0 : 1;
}

void list_checks() {
    for (Suite s : {Suite::Classical, Suite::Quantum}) {
        std::cout << suite_name(s) << ":\n";
        for (const auto& c : registry(s)) std::cout << "  " << c.name << "  " << c.summary << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for classical and quantum tau-functions of SL(N)"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "run a check suite");
    verify_cmd->require_subcommand(1);
    VerifyArgs cl, qu;
    qu.N = 2;
    auto* vc = verify_cmd->add_subcommand("classical", "classical suite");
    add_verify_options(vc, cl, true);
    auto* vq = verify_cmd->add_subcommand("quantum", "quantum suite");
    add_verify_options(vq, qu, false);

    auto* demo_cmd = app.add_subcommand("demo", "worked examples");
    demo_cmd->require_subcommand(1);
    int demo_n = 3;
    auto* dt = demo_cmd->add_subcommand("tau2", "tau_2 expansion with twisted times");
    dt->add_option("--N", demo_n, "rank")->capture_default_str();

    auto* list_cmd = app.add_subcommand("list-checks", "list registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigExit;
    }

    try {
        if (vc->parsed()) return verify(Suite::Classical, cl);
        if (vq->parsed()) return verify(Suite::Quantum, qu);
        if (dt->parsed()) return demo_tau2(demo_n);
        if (list_cmd->parsed()) {
            list_checks();
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigExit;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kConfigExit;
    }
    return 0;
}
