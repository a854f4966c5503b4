#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

/// Non-negative rational with 64-bit parts, kept reduced.
struct ExactRational {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    static ExactRational of(std::uint64_t num, std::uint64_t den);
    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    friend bool operator==(const ExactRational&, const ExactRational&) = default;
};

/// floor(log2 n) for n >= 1.
std::size_t floor_log2(std::uint64_t n);

struct ZeroRunSearch {
    std::size_t d = 0;     // longest zero run
    std::uint64_t cost = 0;  // queries spent
};

/// Linear search for the longest zero run starting at 0^floor(log2 n):
/// up one step at a time while the answers are yes, or down one step at a
/// time until a yes. 0^0 is never asked.
ZeroRunSearch find_max_zero_run(Oracle& oracle, std::size_t n);

struct AverageRun {
    BitString result;
    std::size_t d = 0;
    std::uint64_t seed_queries = 0;
    std::uint64_t basic_queries = 0;
};

/// Deterministic average-case reconstruction: find the longest zero run d,
/// then basic(0^d, 0^(d+1)). Queries are tagged "seed" and "basic".
AverageRun reconstruct_average_run(Oracle& oracle, std::size_t n);
BitString reconstruct_average(Oracle& oracle, std::size_t n);

/// Number of length-n strings whose longest zero run is exactly i.
std::uint64_t count_max_run_exact(std::size_t n, std::size_t i);

/// Number of length-n strings whose zero runs are all at most `bound`
/// (none for bound < 0).
std::uint64_t count_runs_at_most(std::size_t n, long bound);

struct TailBounds {
    double alpha = 0;  // bound on #strings containing 0^l
    double beta = 0;   // stated bound on #strings without 0^(l+1); not a true bound
    double beta_blocks = 0;  // (1 - 2^-(l+1))^floor(n/(l+1)) · 2^n, from disjoint blocks
};

/// alpha(l) = (n-l+1)·2^(n-l) and beta(l) = (1 - 2^-(l+1))^(n-l+1) · 2^n.
/// beta undercounts: the n-l+1 windows overlap, so they are not independent
/// (n=4, l=1: 8 strings avoid 00, beta = 5.1). beta_blocks uses only the
/// floor(n/(l+1)) disjoint windows and does hold.
TailBounds tail_bounds(std::size_t n, std::size_t l);

struct RunLengthRow {
    std::size_t d = 0;
    std::uint64_t strings = 0;     // f(d)
    std::uint64_t seed_cost = 0;
    std::uint64_t basic_cost = 0;  // n - d + (d + 1) + 1
};

struct AverageStats {
    std::size_t n = 0;
    std::vector<std::uint64_t> f;  // indexed 0..n
    std::vector<RunLengthRow> rows;
    ExactRational exact_mean;
    ExactRational seed_mean;
    std::vector<double> alpha;  // indexed 1..n (entry 0 unused)
    std::vector<double> beta;
    std::vector<double> beta_blocks;
};

/// Exact expected query count of reconstruct_average over uniform strings
/// of length n (2 <= n <= 40). Seed costs are measured by running the
/// search against a string realising each run length.
AverageStats average_stats(std::size_t n);
ExactRational expected_queries(std::size_t n);

}  // namespace strrecon
