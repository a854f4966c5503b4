#include "strrecon/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "strrecon/average.hpp"
#include "strrecon/basic.hpp"
#include "strrecon/oracle.hpp"
#include "strrecon/verify.hpp"

namespace strrecon {

Algo parse_algo(const std::string& text) {
    if (text == "basic") return Algo::Basic;
    if (text == "average") return Algo::Average;
    if (text == "randomized") return Algo::Randomized;
    throw std::invalid_argument("unknown algorithm '" + text + "'");
}

std::string_view to_string(Algo a) {
    switch (a) {
        case Algo::Basic: return "basic";
        case Algo::Average: return "average";
        case Algo::Randomized: return "randomized";
    }
    return "?";
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Single: return "single";
        case Mode::Exhaustive: return "exhaustive";
        case Mode::MonteCarlo: return "montecarlo";
        case Mode::Verify: return "verify";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    return Rng::split(master, trial);
}

std::size_t effective_threads(std::size_t requested) {
    std::size_t threads = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("STRRECON_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap > 0) {
            threads = std::min<std::size_t>(threads, cap);
        }
    }
    return threads;
}

TrialRow run_trial(const ExperimentConfig& cfg, const BitString& hidden, std::uint64_t trial,
                   std::uint64_t seed) {
    TrialRow row;
    row.trial = trial;
    row.seed = seed;
    row.digest = hidden.hash();
    const bool verify = cfg.mode == Mode::Verify;
    Oracle oracle(hidden, OracleOptions{verify, cfg.whitebox});
    const std::size_t n = hidden.size();

    BitString result;
    try {
        switch (cfg.algo) {
            case Algo::Basic: {
                row.d = max_zero_run(hidden);
                row.branch = "basic";
                result = basic(oracle, BitString::zeros(row.d), BitString::zeros(row.d + 1), n);
                break;
            }
            case Algo::Average: {
                AverageRun run = reconstruct_average_run(oracle, n);
                row.branch = "average";
                row.d = run.d;
                row.seed_queries = run.seed_queries;
                result = std::move(run.result);
                break;
            }
            case Algo::Randomized: {
                Rng rng(Rng::split(seed, 0));
                Outcome out = double_seed(oracle, n, derive_params(n, cfg.delta, cfg.overrides), rng);
                row.branch = std::string(to_string(out.branch));
                row.d = out.params.d;
                row.seed_queries = out.queries_by_phase.count("seed") ? out.queries_by_phase.at("seed") : 0;
                row.easy_kind = std::string(to_string(out.easy_kind));
                row.second_seed_exit = std::string(to_string(out.second_seed_exit));
                row.overlap_beyond_scan = out.overlap_beyond_scan;
                row.rounds = out.rounds;
                row.samples = out.samples;
                row.r0 = out.params.r0;
                result = std::move(out.result);
                break;
            }
        }
        row.correct = result == hidden;
        if (!row.correct) {
            row.failure = "wrong result '" + result.to_string() + "' for '" + hidden.to_string() + "'";
        }
    } catch (const std::logic_error& e) {
        row.correct = false;
        row.failure = e.what();
    }
    row.queries = oracle.total_queries();

    if (verify && row.failure.empty()) {
        const Verdict v = check_run(oracle.transcript(), result, hidden);
        row.verified = true;
        row.forced = v.forced;
        if (!v.ok) {
            row.correct = false;
            row.failure = "check_run clause " + std::string(1, v.failed_clause) + ": " + v.message;
        }
    }
    return row;
}

void aggregate(RunReport& r) {
    const auto& cfg = r.config;
    r.queries_sum = 0;
    r.exceed_count = 0;
    r.incorrect = 0;
    r.verified = 0;
    r.forced = 0;
    r.overlap_beyond_scan = 0;
    r.branches.clear();
    r.second_seed_exits.clear();
    r.first_failure.clear();
    std::uint64_t seed_sum = 0;
    std::vector<std::uint64_t> sorted;
    sorted.reserve(r.rows.size());
    for (const auto& row : r.rows) {
        r.queries_sum += row.queries;
        seed_sum += row.seed_queries;
        sorted.push_back(row.queries);
        if (cfg.bound && static_cast<long double>(row.queries) >
                             static_cast<long double>(cfg.n) + static_cast<long double>(*cfg.bound)) {
            ++r.exceed_count;
        }
        if (!row.correct) {
            ++r.incorrect;
            if (r.first_failure.empty()) {
                r.first_failure = "trial " + std::to_string(row.trial) + ": " + row.failure;
            }
        }
        ++r.branches[row.branch];
        if (!row.second_seed_exit.empty() && row.second_seed_exit != "None") {
            ++r.second_seed_exits[row.second_seed_exit];
        }
        r.overlap_beyond_scan += row.overlap_beyond_scan ? 1 : 0;
        r.verified += row.verified ? 1 : 0;
        r.forced += row.forced ? 1 : 0;
    }
    std::sort(sorted.begin(), sorted.end());
    const auto count = static_cast<double>(sorted.size());
    auto rank = [&](double q) {
        // Nearest-rank quantile.
        const auto idx = static_cast<std::size_t>(std::max(1.0, std::ceil(q * count))) - 1;
        return sorted[std::min(idx, sorted.size() - 1)];
    };
    if (sorted.empty()) {
        r.mean = r.seed_mean = r.exceed_fraction = 0.0;
        r.min = r.max = r.p50 = r.p90 = r.p99 = 0;
    } else {
        r.mean = static_cast<double>(r.queries_sum) / count;
        r.seed_mean = static_cast<double>(seed_sum) / count;
        r.min = sorted.front();
        r.max = sorted.back();
        r.p50 = rank(0.5);
        r.p90 = rank(0.9);
        r.p99 = rank(0.99);
        r.exceed_fraction = static_cast<double>(r.exceed_count) / count;
    }
    r.bound_violated = cfg.bound.has_value() && r.exceed_fraction > cfg.max_exceed_fraction;
    r.exit_code = r.incorrect > 0 ? 3 : r.bound_violated ? 2 : 0;
}

RunReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.n == 0) {
        throw std::invalid_argument("run_experiment: n must be positive");
    }
    const bool enumerate = cfg.mode == Mode::Exhaustive || cfg.mode == Mode::Verify;
    if (enumerate && cfg.n > ExperimentConfig::kExhaustiveCap) {
        throw std::invalid_argument("exhaustive runs are capped at n = 24");
    }
    const std::uint64_t trials = enumerate ? (std::uint64_t{1} << cfg.n)
                                 : cfg.mode == Mode::Single ? 1
                                                            : cfg.trials;

    RunReport report;
    report.config = cfg;
    report.rows.resize(trials);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
            const std::uint64_t seed = trial_seed(cfg.seed, t);
            const BitString hidden = enumerate ? BitString::from_uint(t, cfg.n) : gen_string(cfg.family, cfg.n, seed);
            report.rows[t] = run_trial(cfg, hidden, t, seed);
        }
    };
    const std::size_t threads = std::min<std::uint64_t>(effective_threads(cfg.threads), std::max<std::uint64_t>(trials, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    aggregate(report);
    return report;
}

void write_csv(std::ostream& out, const RunReport& report) {
    const auto& cfg = report.config;
    const bool enumerate = cfg.mode == Mode::Exhaustive || cfg.mode == Mode::Verify;
    const std::string family = enumerate ? "exhaustive" : cfg.family.to_string();
    // Family names may contain commas.
    const std::string family_field = family.find(',') == std::string::npos ? family : "\"" + family + "\"";
    out << "n,trial,family,algo,branch,queries,correct,seed\n";
    for (const auto& row : report.rows) {
        out << cfg.n << ',' << row.trial << ',' << family_field << ',' << to_string(cfg.algo) << ','
            << row.branch << ',' << row.queries << ',' << (row.correct ? "true" : "false") << ','
            << row.seed << '\n';
    }
}

void write_summary_json(std::ostream& out, const RunReport& r) {
    const auto& cfg = r.config;
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["algo"] = to_string(cfg.algo);
    j["mode"] = to_string(cfg.mode);
    j["n"] = cfg.n;
    j["trials"] = r.rows.size();
    j["family"] = (cfg.mode == Mode::Exhaustive || cfg.mode == Mode::Verify) ? "exhaustive" : cfg.family.to_string();
    j["seed"] = cfg.seed;
    j["delta"] = cfg.delta;
    nlohmann::ordered_json overrides = nlohmann::ordered_json::object();
    if (cfg.overrides.c1) overrides["C1"] = *cfg.overrides.c1;
    if (cfg.overrides.c2) overrides["C2"] = *cfg.overrides.c2;
    if (cfg.overrides.q) overrides["q"] = *cfg.overrides.q;
    if (cfg.overrides.q_fraction) overrides["q_fraction"] = *cfg.overrides.q_fraction;
    if (cfg.overrides.r0) overrides["r0"] = *cfg.overrides.r0;
    j["overrides"] = overrides;
    j["whitebox"] = cfg.whitebox;
    j["queries"] = {{"sum", r.queries_sum}, {"mean", r.mean}, {"min", r.min}, {"max", r.max},
                    {"p50", r.p50},         {"p90", r.p90},   {"p99", r.p99}};
    j["seed_mean"] = r.seed_mean;
    if (cfg.bound) {
        j["bound"] = {{"threshold", static_cast<double>(cfg.n) + static_cast<double>(*cfg.bound)},
                      {"exceed_count", r.exceed_count},
                      {"exceed_fraction", r.exceed_fraction},
                      {"max_exceed_fraction", cfg.max_exceed_fraction},
                      {"violated", r.bound_violated}};
    }
    j["branches"] = r.branches;
    j["second_seed_exits"] = r.second_seed_exits;
    j["overlap_beyond_scan"] = r.overlap_beyond_scan;
    if (cfg.mode == Mode::Verify) {
        j["verify"] = {{"checked", r.verified}, {"forced", r.forced}};
    }
    j["incorrect"] = r.incorrect;
    j["failed"] = r.exit_code != 0;
    j["exit_code"] = r.exit_code;
    if (!r.first_failure.empty()) {
        j["first_failure"] = r.first_failure;
    }
    out << j.dump(2) << '\n';
}

}  // namespace strrecon
