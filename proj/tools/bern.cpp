// Command-line front end: exact Bernoulli numbers/polynomials by three
// independent engines, identity verification sweeps, and an engine benchmark.

#include "bern/output.hpp"
#include "bern/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

long long ns_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

int run_compute(long long n, const std::string& method, const std::string& format, bool polynomial) {
    std::vector<bern::Method> methods;
    if (method == "all")
        methods.assign(std::begin(bern::kAllMethods), std::end(bern::kAllMethods));
    else
        methods.push_back(*bern::parse_method(method));

    const bool json = format == "json";
    std::vector<bern::OutputRecord> records;
    for (bern::Method m : methods) {
        const auto start = Clock::now();
        bern::BernoulliResult result = bern::bernoulli_result(n, m, polynomial);
        records.push_back(bern::make_record(result, ns_since(start)));
    }

    bool agree = true;
    for (const auto& rec : records) agree = agree && rec.value == records.front().value;

    for (const auto& rec : records) {
        if (json)
            std::cout << bern::to_json_line(rec) << '\n';
        else if (records.size() == 1)
            std::cout << rec.value << '\n';
        else
            std::cout << bern::to_text_line(rec) << '\n';
    }
    if (records.size() > 1) {
        if (json)
            std::cout << nlohmann::ordered_json{{"verdict", agree ? "agree" : "disagree"}}.dump() << '\n';
        else
            std::cout << (agree ? "agree" : "disagree") << '\n';
    }
    return agree ? 0 : 1;
}

int run_verify(long long max_n, std::uint64_t seed) {
    const std::vector<bern::SuiteResult> suites = bern::run_verification({max_n, seed});

    nlohmann::ordered_json report;
    report["max_n"] = max_n;
    report["seed"] = seed;
    bool ok = true;
    auto& list = report["suites"] = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
        nlohmann::ordered_json entry;
        entry["name"] = s.name;
        entry["cases"] = s.cases;
        entry["failures"] = s.failures;
        if (!s.ok()) entry["first_counterexample"] = s.first_failure;
        list.push_back(std::move(entry));
        ok = ok && s.ok();
    }
    report["ok"] = ok;
    std::cout << report.dump() << '\n';
    return ok ? 0 : 1;
}

int run_bench(long long max_n, int repetitions) {
    bern::write_bench_csv(std::cout, bern::run_bench(max_n, repetitions));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli numbers and polynomials by three independent methods"};
    app.require_subcommand(1);

    const std::vector<std::string> method_choices = {"recurrence", "stirling", "determinant", "all"};
    const std::vector<std::string> format_choices = {"text", "json"};

    long long n = 0;
    std::string method = "recurrence";
    std::string format = "text";

    auto add_compute = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("n", n, "index")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--method", method, "engine to run")->check(CLI::IsMember(method_choices));
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember(format_choices));
        return cmd;
    };
    CLI::App* number = add_compute("number", "Compute the Bernoulli number B_n");
    CLI::App* poly = add_compute("poly", "Compute the Bernoulli polynomial B_n(u) as a coefficient list");

    long long max_n = 16;
    std::uint64_t seed = bern::kDefaultSeed;
    CLI::App* verify = app.add_subcommand("verify", "Run the cross-engine and identity suites");
    verify->add_option("--max-n", max_n, "sweep bound")->required()->check(CLI::PositiveNumber);
    CLI::Option* seed_opt = verify->add_option("--seed", seed, "seed for randomized suites");

    long long bench_max_n = 1;
    int repetitions = 3;
    CLI::App* bench = app.add_subcommand("bench", "Benchmark the three number engines (CSV)");
    bench->add_option("--max-n", bench_max_n, "largest index")->required()->check(CLI::PositiveNumber);
    bench->add_option("-r,--repetitions", repetitions, "samples per engine")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (number->parsed()) return run_compute(n, method, format, false);
        if (poly->parsed()) return run_compute(n, method, format, true);
        if (verify->parsed()) {
            if (seed_opt->count() == 0) {
                if (const char* env = std::getenv("BERN_SEED")) {
                    char* end = nullptr;
                    const unsigned long long v = std::strtoull(env, &end, 10);
                    if (end == env || *end != '\0') {
                        std::cerr << "bern: BERN_SEED is not an unsigned integer: " << env << '\n';
                        return 2;
                    }
                    seed = v;
                }
            }
            return run_verify(max_n, seed);
        }
        if (bench->parsed()) return run_bench(bench_max_n, repetitions);
    } catch (const std::exception& e) {
        std::cerr << "bern: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
