#include "dsphere/errors.hpp"
#include "dsphere/expr.hpp"
#include "dsphere/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace dsphere;

namespace {

// exit codes: 0 all checks pass, 1 some check failed, 2 bad configuration or input
int runVerify(const SuiteConfig& cfg, const std::string& format, bool timing) {
    Report report = runSuites(cfg);
    std::cout << (format == "json" ? report.json(timing) : report.text(timing));
    return report.allPassed() ? 0 : 1;
}

int runEval(const std::string& text, const PhiSpec& phi) {
    try {
        std::cout << formatValue(evalExpr(text, phi)) << "\n";
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n" << text << "\n" << std::string(e.position, ' ') << "^\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus on the dynamical noncommutative 4-sphere"};
    app.require_subcommand(1);

    std::string phiText = "formal";
    app.add_option("--phi", phiText, "phi: formal, const:<q> or poly:<c0>,<c1>,...")->capture_default_str();

    SuiteConfig cfg;
    std::string format = "text";
    bool timing = false;
    int truncation = 0;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> choices = suiteNames();
    choices.push_back("all");
    verify->add_option("--suite", cfg.suites, "suites to run (repeatable)")
        ->check(CLI::IsMember(choices))
        ->delimiter(',');
    verify->add_option("--phi", phiText, "phi: formal, const:<q> or poly:<c0>,<c1>,...");
    verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    auto* trunc = verify->add_option("--truncation", truncation,
                                     "degree cap for ideal membership (>= 4; default from DSPHERE_TRUNCATION)");
    verify->add_flag("--fail-fast", cfg.failFast, "stop at the first failing check");
    verify->add_flag("--timing", timing, "include elapsed times (makes reports nondeterministic)");

    std::string exprText;
    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", exprText, "expression, e.g. \"integrate(t^2 * omega)\"")->required();
    eval->add_option("--phi", phiText, "phi: formal, const:<q> or poly:<c0>,<c1>,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        PhiSpec phi = PhiSpec::parse(phiText);
        if (*verify) {
            cfg.phi = phi;
            if (trunc->count()) cfg.truncation = truncation;
            validate(cfg);
            return runVerify(cfg, format, timing);
        }
        return runEval(exprText, phi);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
