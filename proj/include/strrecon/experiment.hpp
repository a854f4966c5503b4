#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/corpus.hpp"
#include "strrecon/randomized.hpp"

namespace strrecon {

enum class Algo { Basic, Average, Randomized };
/// Verify is exhaustive enumeration with a transcript check on every run.
enum class Mode { Single, Exhaustive, MonteCarlo, Verify };

Algo parse_algo(const std::string& text);
std::string_view to_string(Algo a);
std::string_view to_string(Mode m);

struct ExperimentConfig {
    static constexpr std::size_t kExhaustiveCap = 24;

    Algo algo = Algo::Randomized;
    Mode mode = Mode::Single;
    std::size_t n = 0;
    std::size_t trials = 1;
    Family family;
    double delta = 1.0;
    ParamOverrides overrides;
    std::uint64_t seed = 0;
    /// Checks every committed fact against the hidden string.
    bool whitebox = false;
    /// Queries above n + bound count as exceedances.
    std::optional<long> bound;
    /// Largest tolerated fraction of exceedances before the bound is
    /// reported as violated.
    double max_exceed_fraction = 0.0;
    /// Worker threads; 0 = hardware concurrency. STRRECON_THREADS caps it.
    std::size_t threads = 0;
};

struct TrialRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;     // per-trial seed (corpus and algorithm streams derive from it)
    std::uint64_t digest = 0;   // hash of the hidden string
    std::string branch;
    std::uint64_t queries = 0;
    bool correct = false;

    // Extra diagnostics, not part of the CSV.
    std::size_t d = 0;
    std::uint64_t seed_queries = 0;
    std::string easy_kind;
    std::string second_seed_exit;
    bool overlap_beyond_scan = false;
    std::uint64_t rounds = 0;
    std::uint64_t samples = 0;
    double r0 = 0.0;
    bool verified = false;       // check_run ran
    bool forced = false;         // final candidate set was a singleton
    std::string failure;
};

struct RunReport {
    ExperimentConfig config;
    std::vector<TrialRow> rows;

    double mean = 0.0;
    std::uint64_t queries_sum = 0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::uint64_t p50 = 0;
    std::uint64_t p90 = 0;
    std::uint64_t p99 = 0;
    double seed_mean = 0.0;
    std::uint64_t exceed_count = 0;
    double exceed_fraction = 0.0;
    std::uint64_t incorrect = 0;
    std::map<std::string, std::uint64_t> branches;
    std::map<std::string, std::uint64_t> second_seed_exits;
    std::uint64_t overlap_beyond_scan = 0;
    std::uint64_t verified = 0;
    std::uint64_t forced = 0;
    std::string first_failure;

    bool bound_violated = false;
    /// 0 pass, 2 bound violated, 3 wrong result or failed check.
    int exit_code = 0;
};

/// Seed of trial i: Rng::split(master, i).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Runs one algorithm on one hidden string. The randomized algorithm draws
/// from Rng(Rng::split(seed, 0)).
TrialRow run_trial(const ExperimentConfig& cfg, const BitString& hidden, std::uint64_t trial,
                   std::uint64_t seed);

RunReport run_experiment(const ExperimentConfig& cfg);

/// Recomputes the aggregates of `report` from its rows.
void aggregate(RunReport& report);

void write_csv(std::ostream& out, const RunReport& report);
void write_summary_json(std::ostream& out, const RunReport& report);

/// Worker count after applying STRRECON_THREADS.
std::size_t effective_threads(std::size_t requested);

}  // namespace strrecon
