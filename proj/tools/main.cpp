#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ssum/errors.hpp"
#include "ssum/field.hpp"
#include "ssum/instance_io.hpp"
#include "ssum/oracle.hpp"
#include "ssum/subset_sum.hpp"

namespace {

using ssum::u64;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;

// Configuration problems detected after flag parsing (bad prime, unreadable
// input file); reported like usage errors.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input = "-";
    u64 target = 0;
    u64 prime = 0;
    bool has_prime = false;
    u64 seed = 0;
    bool has_seed = false;
    unsigned repeats = 1;
    bool as_json = false;
    std::size_t bench_n = 100;
    unsigned trials = 3;
    std::string algo = "both";
};

u64 fresh_seed() {
    std::random_device rd;
    return (static_cast<u64>(rd()) << 32) ^ rd();
}

ssum::Instance read_instance(const Options& opt) {
    if (opt.input == "-") return ssum::parse_instance(std::cin, opt.target);
    std::ifstream in(opt.input);
    if (!in) throw ConfigError("cannot open input file '" + opt.input + "'");
    return ssum::parse_instance(in, opt.target);
}

// Every report carries the same keys; unused ones stay null/empty so that
// identical (input, flags, seed) runs are byte-identical. timings_ms is null
// except for bench, whose output is the measurement itself.
json base_report(const Options& opt, std::size_t n_items) {
    json j;
    j["answer"] = nullptr;
    j["counts"] = json::array();
    j["primes"] = json::array();
    j["seed"] = opt.seed;
    j["repeats"] = opt.repeats;
    j["timings_ms"] = nullptr;
    j["n"] = n_items;
    j["t"] = opt.target;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_decide(const Options& opt) {
    const ssum::Instance inst = read_instance(opt);
    const ssum::Decision d = ssum::decide(inst, opt.seed, opt.repeats);
    if (opt.as_json) {
        json j = base_report(opt, inst.items.size());
        j["answer"] = d.yes ? "YES" : "NO";
        for (const auto& r : d.rounds) {
            j["counts"].push_back(r.count_mod_p);
            j["primes"].push_back(r.prime);
        }
        emit(j);
    } else {
        std::cout << (d.yes ? "YES" : "NO") << '\n';
        std::cout << "seed=" << d.seed << " repeats=" << d.repeats << '\n';
        for (std::size_t i = 0; i < d.rounds.size(); ++i)
            std::cout << "round " << i + 1 << ": p=" << d.rounds[i].prime
                      << " count_mod_p=" << d.rounds[i].count_mod_p << '\n';
    }
    return 0;
}

// Shared prologue of count/coeffs/knapsack: resolve the working prime.
u64 working_prime(const Options& opt, const ssum::Instance& inst) {
    if (opt.has_prime) {
        if (!ssum::is_prime(opt.prime) || opt.prime <= opt.target)
            throw ConfigError("p must be a prime greater than t");
        return opt.prime;
    }
    return ssum::sample_working_prime(inst.items.size(), inst.target, ssum::splitmix64(opt.seed));
}

enum class CountKind { Exact, Coeffs, Knapsack };

int run_count(const Options& opt, CountKind kind) {
    const ssum::Instance inst = read_instance(opt);
    const u64 p = working_prime(opt, inst);
    const ssum::PrimeField field(p, inst.target);
    const ssum::ModPoly coeffs = ssum::coefficients_mod_p(inst, field);
    json j = base_report(opt, inst.items.size());
    j["primes"].push_back(p);
    switch (kind) {
        case CountKind::Exact: {
            const u64 c = coeffs.coeffs[inst.target];
            if (opt.as_json) {
                j["counts"].push_back(c);
                emit(j);
            } else {
                std::cout << "count_mod_p=" << c << '\n';
            }
            break;
        }
        case CountKind::Coeffs: {
            if (opt.as_json) {
                j["counts"] = coeffs.coeffs;
                emit(j);
            } else {
                std::cout << "coeffs:";
                for (u64 c : coeffs.coeffs) std::cout << ' ' << c;
                std::cout << '\n';
            }
            break;
        }
        case CountKind::Knapsack: {
            u64 acc = 0;
            for (u64 c : coeffs.coeffs) acc = field.add(acc, c);
            if (opt.as_json) {
                j["counts"].push_back(acc);
                emit(j);
            } else {
                std::cout << "knapsack_count_mod_p=" << acc << '\n';
            }
            break;
        }
    }
    if (!opt.as_json) std::cout << "p=" << p << " seed=" << opt.seed << '\n';
    return 0;
}

int run_bench(const Options& opt) {
    if (opt.target == 0) throw ConfigError("bench needs a positive target");
    const bool run_gen = opt.algo != "dp";
    const bool run_dp = opt.algo != "genfunc";
    std::vector<u64> primes;
    std::vector<double> gen_ms, dp_ms;
    for (unsigned trial = 0; trial < opt.trials; ++trial) {
        std::mt19937_64 rng(ssum::splitmix64(opt.seed + trial));
        auto draw = [&rng](u64 span) {  // uniform in [0, span)
            const u64 zone = (0 - span) % span;
            u64 r = rng();
            while (r < zone) r = rng();
            return (r - zone) % span;
        };
        ssum::Instance inst;
        inst.target = opt.target;
        inst.items.resize(opt.bench_n);
        for (auto& s : inst.items) s = 1 + draw(opt.target);
        const u64 p = ssum::sample_working_prime(opt.bench_n, opt.target, rng());
        const ssum::PrimeField field(p, opt.target);
        primes.push_back(p);

        ssum::ModPoly via_gen, via_dp;
        using clock = std::chrono::steady_clock;
        if (run_gen) {
            const auto t0 = clock::now();
            via_gen = ssum::coefficients_mod_p(inst, field);
            gen_ms.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        }
        if (run_dp) {
            const auto t0 = clock::now();
            via_dp = ssum::dp_count_mod_p(inst, field);
            dp_ms.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        }
        if (run_gen && run_dp && via_gen.coeffs != via_dp.coeffs) {
            std::cerr << "MISMATCH in trial " << trial + 1 << " (p=" << p
                      << "): generating-function and DP coefficients disagree\n";
            return kExitInternal;
        }
        if (!opt.as_json) {
            std::cout << "trial " << trial + 1 << ": p=" << p;
            if (run_gen) std::cout << " genfunc_ms=" << gen_ms.back();
            if (run_dp) std::cout << " dp_ms=" << dp_ms.back();
            if (run_gen && run_dp) std::cout << " agree=yes";
            std::cout << '\n';
        }
    }
    if (opt.as_json) {
        Options o = opt;
        o.repeats = opt.trials;
        json j = base_report(o, opt.bench_n);
        j["primes"] = primes;
        j["timings_ms"] = json::object();
        if (run_gen) j["timings_ms"]["genfunc"] = gen_ms;
        if (run_dp) j["timings_ms"]["dp"] = dp_ms;
        emit(j);
    } else {
        auto total = [](const std::vector<double>& v) {
            double s = 0;
            for (double x : v) s += x;
            return s;
        };
        std::cout << "total:";
        if (run_gen) std::cout << " genfunc_ms=" << total(gen_ms);
        if (run_dp) std::cout << " dp_ms=" << total(dp_ms);
        std::cout << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"SubsetSum decision and counting via prime-field generating functions"};
    app.require_subcommand(1);

    std::vector<CLI::Option*> seed_opts, prime_opts;
    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("-i,--input", opt.input,
                            "instance file (whitespace-separated items), or - for stdin");
        cmd->add_option("-t,--target", opt.target, "target sum")->required();
        cmd->add_flag("--json", opt.as_json, "emit a JSON report");
        seed_opts.push_back(
            cmd->add_option("--seed", opt.seed, "RNG seed (fresh from the OS when omitted)"));
    };
    auto add_prime = [&](CLI::App* cmd) {
        prime_opts.push_back(
            cmd->add_option("-p,--prime", opt.prime, "working prime (sampled when omitted)"));
    };

    CLI::App* c_decide = app.add_subcommand("decide", "one-sided randomized YES/NO decision");
    add_common(c_decide, true);
    c_decide->add_option("--repeats", opt.repeats, "independent rounds (NO error rate decays per round)")
        ->check(CLI::PositiveNumber);

    CLI::App* c_count = app.add_subcommand("count", "number of subsets hitting the target, mod p");
    add_common(c_count, true);
    add_prime(c_count);

    CLI::App* c_coeffs = app.add_subcommand("coeffs", "all subset-sum counts up to the target, mod p");
    add_common(c_coeffs, true);
    add_prime(c_coeffs);

    CLI::App* c_knapsack =
        app.add_subcommand("knapsack", "number of subsets with sum at most the target, mod p");
    add_common(c_knapsack, true);
    add_prime(c_knapsack);

    CLI::App* c_bench = app.add_subcommand("bench", "generated-instance timing comparison");
    add_common(c_bench, false);
    c_bench->add_option("--n", opt.bench_n, "items per generated instance")->check(CLI::PositiveNumber);
    c_bench->add_option("--trials", opt.trials, "number of generated instances")
        ->check(CLI::PositiveNumber);
    c_bench->add_option("--algo", opt.algo, "genfunc, dp, or both")
        ->check(CLI::IsMember({"genfunc", "dp", "both"}));

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

    for (const CLI::Option* o : seed_opts) opt.has_seed |= o->count() > 0;
    for (const CLI::Option* o : prime_opts) opt.has_prime |= o->count() > 0;
    if (!opt.has_seed) opt.seed = fresh_seed();

    try {
        if (app.got_subcommand(c_decide)) return run_decide(opt);
        if (app.got_subcommand(c_count)) return run_count(opt, CountKind::Exact);
        if (app.got_subcommand(c_coeffs)) return run_count(opt, CountKind::Coeffs);
        if (app.got_subcommand(c_knapsack)) return run_count(opt, CountKind::Knapsack);
        if (app.got_subcommand(c_bench)) return run_bench(opt);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const ssum::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
