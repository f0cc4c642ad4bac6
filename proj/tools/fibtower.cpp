// fibtower: command-line front end for the Fibonacci tower engine.
//
// Exit codes: 0 ok, 1 mathematical mismatch, 2 usage, 3 resource budget.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fibtower/errors.hpp"
#include "fibtower/fib.hpp"
#include "fibtower/modfib.hpp"
#include "fibtower/oracle.hpp"
#include "fibtower/report.hpp"
#include "fibtower/sweep.hpp"
#include "fibtower/tower.hpp"
#include "fibtower/verify.hpp"

namespace {

using namespace fibtower;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural natural_arg(const std::string& text, const char* what) {
    auto v = parse_natural(text);
    if (!v) throw UsageError(std::string(what) + " must be a nonnegative decimal integer: '" + text + "'");
    return *v;
}

std::uint64_t u64_arg(const std::string& text, const char* what) {
    auto v = to_u64(natural_arg(text, what));
    if (!v) throw UsageError(std::string(what) + " does not fit in 64 bits");
    return *v;
}

std::uint64_t oracle_budget_from_env() {
    const char* env = std::getenv("FIBTOWER_MAX_INDEX");
    if (env == nullptr || *env == '\0') return kDefaultOracleMaxIndex;
    return u64_arg(env, "FIBTOWER_MAX_INDEX");
}

Range range_arg(const std::string& text, const char* what) {
    auto r = parse_range(text);
    if (!r) throw UsageError(std::string(what) + " must look like A..B: '" + text + "'");
    if (r->empty()) throw UsageError(std::string(what) + " range " + text + " is empty");
    return *r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact F_n-adic valuations and unit residues of iterated Fibonacci towers"};
    app.require_subcommand(1);

    std::string seed_text = std::to_string(kDefaultRhoSeed);
    std::string factor_budget_text = std::to_string(kDefaultFactorBudget);
    app.add_option("--seed", seed_text, "Pollard rho seed");
    app.add_option("--factor-budget", factor_budget_text, "rho iterations per factorization");

    auto* fib_cmd = app.add_subcommand("fib", "print F_i");
    std::string fib_index;
    std::string fib_budget = std::to_string(kDefaultFibBudget);
    fib_cmd->add_option("i", fib_index)->required();
    fib_cmd->add_option("--budget", fib_budget, "largest index computed exactly");

    auto* fibmod_cmd = app.add_subcommand("fibmod", "print F_i mod M");
    std::string fibmod_index, fibmod_modulus;
    fibmod_cmd->add_option("i", fibmod_index)->required();
    fibmod_cmd->add_option("M", fibmod_modulus)->required();

    auto* pisano_cmd = app.add_subcommand("pisano", "print the Pisano period pi(M)");
    std::string pisano_modulus;
    std::string method = "auto";
    pisano_cmd->add_option("M", pisano_modulus)->required();
    pisano_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "factored", "auto"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "valuation and unit residue of G(k,n,m)");
    std::string ak, an, am;
    bool as_json = false;
    analyze_cmd->add_option("k", ak)->required();
    analyze_cmd->add_option("n", an)->required();
    analyze_cmd->add_option("m", am)->required();
    analyze_cmd->add_flag("--json", as_json);

    auto* sweep_cmd = app.add_subcommand("sweep", "analyze every point of a (k, n, m) grid");
    std::string sk = "2..6", sn = "3..25", sm = "1..3";
    int jobs = 0;
    std::string out_path;
    std::string format = "json";
    bool skip_chain_verify = false;
    sweep_cmd->add_option("--k", sk, "A..B");
    sweep_cmd->add_option("--n", sn, "A..B");
    sweep_cmd->add_option("--m", sm, "A..B");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = runtime default)");
    sweep_cmd->add_option("--out", out_path, "report path (default stdout)");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_flag("--no-chain-verify", skip_chain_verify);

    auto* verify_cmd = app.add_subcommand("verify", "run the identity/lemma/oracle property suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"identities", "lemmas", "oracle", "pisano", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        AnalysisOptions options;
        options.factor.seed = u64_arg(seed_text, "--seed");
        options.factor.budget = u64_arg(factor_budget_text, "--factor-budget");

        if (fib_cmd->parsed()) {
            std::cout << to_decimal(fib(natural_arg(fib_index, "i"), u64_arg(fib_budget, "--budget")))
                      << '\n';
            return kExitOk;
        }

        if (fibmod_cmd->parsed()) {
            const Natural M = natural_arg(fibmod_modulus, "M");
            if (M < 1) throw UsageError("M must be >= 1");
            std::cout << to_decimal(fib_mod(natural_arg(fibmod_index, "i"), M)) << '\n';
            return kExitOk;
        }

        if (pisano_cmd->parsed()) {
            const Natural M = natural_arg(pisano_modulus, "M");
            if (M < 1) throw UsageError("M must be >= 1");
            const auto small = to_u64(M);
            if (method == "brute") {
                if (!small) throw UsageError("brute method needs M < 2^64");
                std::cout << pisano_period_brute(*small) << '\n';
                return kExitOk;
            }
            const Natural factored = pisano_period(factorize(M, options.factor), options.factor).value();
            if (method == "auto" && small && *small < kBruteAutoLimit) {
                const auto brute = pisano_period_brute(*small);
                if (from_u64(brute) != factored) {
                    std::cerr << "pisano: brute " << brute << " != factored " << to_decimal(factored)
                              << '\n';
                    return kExitMismatch;
                }
            }
            std::cout << to_decimal(factored) << '\n';
            return kExitOk;
        }

        if (analyze_cmd->parsed()) {
            const TowerSpec spec{u64_arg(ak, "k"), u64_arg(an, "n"), u64_arg(am, "m")};
            if (!spec.valid()) throw UsageError("k, n, m must all be >= 1");
            const auto report = analyze(spec, options);
            if (as_json) {
                std::cout << to_json(report).dump(2) << '\n';
            } else {
                std::cout << render_text(report);
            }
            return report.consistent() ? kExitOk : kExitMismatch;
        }

        if (sweep_cmd->parsed()) {
            const SweepGrid grid{range_arg(sk, "--k"), range_arg(sn, "--n"), range_arg(sm, "--m")};
            if (grid.k.lo < 1 || grid.n.lo < 1 || grid.m.lo < 1) {
                throw UsageError("k, n, m ranges must start at >= 1");
            }
            if (jobs < 0) throw UsageError("--jobs must be >= 0");
            options.verify_chain = !skip_chain_verify;
            const auto report = run_sweep(grid, jobs, options);
            const std::string text = format == "csv" ? render_csv(report) : render_json(report);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw UsageError("cannot open " + out_path);
                out << text;
            }
            std::cerr << "rows " << report.rows.size() << ": ok "
                      << report.count(RowStatus::Ok) << ", mismatch "
                      << report.count(RowStatus::Mismatch) << ", budget_exceeded "
                      << report.count(RowStatus::BudgetExceeded) << '\n';
            return report.count(RowStatus::Mismatch) == 0 ? kExitOk : kExitMismatch;
        }

        if (verify_cmd->parsed()) {
            const auto max_index = oracle_budget_from_env();
            bool ok = true;
            auto run = [&](const SuiteResult& result) {
                std::cout << render_suite(result);
                ok = ok && result.passed();
            };
            if (suite == "identities" || suite == "all") run(run_identity_suite());
            if (suite == "lemmas" || suite == "all") run(run_lemma_suite(options));
            if (suite == "oracle" || suite == "all") run(run_oracle_suite(max_index, options));
            if (suite == "pisano" || suite == "all") run(run_pisano_suite());
            return ok ? kExitOk : kExitMismatch;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const FactorBudgetExceeded& e) {
        std::cerr << "factor budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitBudget;
    }
    return kExitUsage;
}
