#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"
#include "strrecon/rng.hpp"

namespace strrecon {

/// Caller-supplied replacements for the derived constants. Any override of
/// C1 or C2 below the guarantee thresholds marks the run guarantee-void.
struct ParamOverrides {
    std::optional<std::uint64_t> c1;
    std::optional<std::uint64_t> c2;
    /// Main-loop target length, either absolute or as a fraction of n.
    std::optional<std::size_t> q;
    std::optional<double> q_fraction;
    /// Fixed sampling probability in (0, 1] instead of d1 / (2q).
    std::optional<double> r0;
};

struct Params {
    static constexpr std::uint64_t kGuaranteeC1 = 20;
    static constexpr std::uint64_t kGuaranteeC2 = 40;

    std::size_t n = 0;
    double delta = 1.0;
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    std::size_t q = 0;   // main-loop target length, ceil(0.01 n) by default
    std::size_t d = 0;   // longest zero run, once known
    std::size_t d1 = 0;  // queries spent finding it
    std::size_t ell = 0;  // d + 2 d1
    double r0 = 0.0;      // per-position sampling probability d1 / (2q), clamped to (0, 1]
    std::uint64_t rng_seed = 0;
    bool guarantee_void = false;
    std::optional<double> r0_override;

    /// Fills d, d1 and the quantities derived from them.
    void set_seed(std::size_t seed_length, std::size_t seed_cost);
};

/// C2 = ceil(2^13 ln(3/delta)), C1 = ceil(C2/2), q = ceil(0.01 n), each
/// unless overridden.
Params derive_params(std::size_t n, double delta, const ParamOverrides& overrides = {});

struct RunSearch {
    std::size_t d = 0;
    std::uint64_t queries = 0;
};

/// Bisection on zero-run length between a known present 0^lo and a known
/// absent 0^hi.
RunSearch bs_run_search(Oracle& oracle, std::size_t lo, std::size_t hi);

enum class EasyKind { None, RandomProbe, CheapSeed, OnesRun, AllOnes };

struct EasyDone {
    BitString result;
    EasyKind kind = EasyKind::None;
    std::uint64_t probes = 0;  // random X strings drawn (RandomProbe only)
};
struct EasySeed {
    std::size_t d = 0;
    std::size_t d1 = 0;
};
using EasyResult = std::variant<EasyDone, EasySeed>;

/// Tries the cheap finishes: a long zero run plus a random nonsubstring, a
/// cheap seed search, or a long run of ones. Otherwise returns the seed
/// (d, d1) for the main loop. Requires floor(log2 n) > C1.
EasyResult try_easycase(Oracle& oracle, std::size_t n, const Params& params, Rng& rng);

enum class Branch {
    EasyCase,     // finished inside the easy-case gate
    Exception,    // main loop ran into the right end first
    SecondSeed,   // a sampled double-child position
    BasicFinish,  // main loop reached length q
    Fallback,     // constants too large for this n; seed + basic
};

/// How a second-seed run finished.
enum class SecondSeedExit {
    None,
    LeftHit,      // the extension of S ran into the first seed
    DisjointFill,  // extending I reached the left end before meeting S
    QueryRepair,   // the extended I turned out to be past the left end
    Overlap,       // overlap scan found the union
    ScanFallthrough,  // no overlap in the scanned range; finished from S alone
};

std::string_view to_string(Branch b);
std::string_view to_string(SecondSeedExit e);
std::string_view to_string(EasyKind k);

struct Outcome {
    BitString result;
    Branch branch = Branch::Fallback;
    EasyKind easy_kind = EasyKind::None;
    SecondSeedExit second_seed_exit = SecondSeedExit::None;
    std::uint64_t queries = 0;
    std::map<std::string, std::uint64_t> queries_by_phase;
    Params params;
    std::uint64_t rounds = 0;           // sampling draws in extension loops
    std::uint64_t samples = 0;          // draws below r0
    std::uint64_t labels = 0;           // single-child entries recorded
    std::uint64_t free_extensions = 0;  // label-driven extensions
    /// A structural overlap longer than the scanned range existed at the
    /// end of a second-seed run.
    bool overlap_beyond_scan = false;
};

/// {result, branch, queries_total, queries_by_phase, params, rng_seed, ...}
std::string to_json(const Outcome& outcome);

/// Full randomized reconstruction. Always returns the hidden string.
Outcome double_seed(Oracle& oracle, std::size_t n, Params params, Rng& rng);

/// Extends I by t and one more symbol when possible. If I·t (or I) is the
/// right end, pads with zeros until the last d+1 symbols are 0^(d+1).
BitString two_extension(Oracle& oracle, const BitString& working, bool next, std::size_t d, Rng& rng);

/// t·I, no query.
BitString two_extension_left(const BitString& working, bool previous);

/// Finishes from the first-seed extension `working` = 0^d·1·Z and a second
/// seed S with sibling(S) = suffix_|S|(working) that does not occur in
/// `working`.
BitString second_seed(Oracle& oracle, const BitString& working, const BitString& seed2,
                      std::size_t d, std::size_t n);

/// Handles a main loop that overshot the right end: `working` = I'·0^(d+1)
/// with I'·0^m a suffix of the hidden string. Extends leftward with the
/// mirrored sampling machinery and returns the hidden string.
BitString exception(Oracle& oracle, const BitString& working, const Params& params, Rng& rng);

}  // namespace strrecon
