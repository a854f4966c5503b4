#include "strrecon/average.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "strrecon/basic.hpp"

namespace strrecon {

ExactRational ExactRational::of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw std::invalid_argument("ExactRational: zero denominator");
    }
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? ExactRational{0, 1} : ExactRational{num / g, den / g};
}

std::size_t floor_log2(std::uint64_t n) {
    if (n == 0) {
        throw ContractViolation("floor_log2: zero");
    }
    return static_cast<std::size_t>(std::bit_width(n) - 1);
}

ZeroRunSearch find_max_zero_run(Oracle& oracle, std::size_t n) {
    if (n < 2) {
        throw ContractViolation("find_max_zero_run: n must be at least 2");
    }
    const std::uint64_t before = oracle.total_queries();
    const std::size_t start = floor_log2(n);
    std::size_t d = 0;
    if (oracle.query(BitString::zeros(start))) {
        d = start;
        while (oracle.query(BitString::zeros(d + 1))) {
            ++d;
        }
    } else {
        for (std::size_t k = start - 1; k >= 1; --k) {
            if (oracle.query(BitString::zeros(k))) {
                d = k;
                break;
            }
        }
    }
    return ZeroRunSearch{d, oracle.total_queries() - before};
}

AverageRun reconstruct_average_run(Oracle& oracle, std::size_t n) {
    AverageRun run;
    if (n == 1) {
        oracle.set_phase("seed");
        run.result = oracle.query(BitString::ones(1)) ? BitString::ones(1) : BitString::zeros(1);
        run.d = run.result.back() ? 0 : 1;
        run.seed_queries = 1;
        return run;
    }
    oracle.set_phase("seed");
    const ZeroRunSearch seed = find_max_zero_run(oracle, n);
    run.d = seed.d;
    run.seed_queries = seed.cost;

    oracle.set_phase("basic");
    const std::uint64_t before = oracle.total_queries();
    run.result = basic(oracle, BitString::zeros(seed.d), BitString::zeros(seed.d + 1), n);
    run.basic_queries = oracle.total_queries() - before;
    return run;
}

BitString reconstruct_average(Oracle& oracle, std::size_t n) {
    return reconstruct_average_run(oracle, n).result;
}

std::uint64_t count_runs_at_most(std::size_t n, long bound) {
    if (bound < 0) {
        return 0;
    }
    const auto limit = static_cast<std::size_t>(bound);
    // g[m]: length-m strings with every zero run <= limit. Classify by the
    // trailing zero run r: either r = m, or the string is (valid)·1·0^r.
    std::vector<std::uint64_t> g(n + 1, 0);
    g[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        std::uint64_t total = g[m - 1];  // ends in 1
        for (std::size_t r = 1; r <= limit && r <= m; ++r) {
            total += r == m ? 1 : g[m - r - 1];
        }
        g[m] = total;
    }
    return g[n];
}

std::uint64_t count_max_run_exact(std::size_t n, std::size_t i) {
    if (i > n) {
        throw ContractViolation("count_max_run_exact: run length exceeds n");
    }
    if (n > 62) {
        throw ContractViolation("count_max_run_exact: n too large for 64-bit counts");
    }
    return count_runs_at_most(n, static_cast<long>(i)) - count_runs_at_most(n, static_cast<long>(i) - 1);
}

TailBounds tail_bounds(std::size_t n, std::size_t l) {
    if (l < 1 || l > n) {
        throw ContractViolation("tail_bounds: need 1 <= l <= n");
    }
    const double nn = static_cast<double>(n);
    const double ll = static_cast<double>(l);
    TailBounds b;
    b.alpha = (nn - ll + 1.0) * std::ldexp(1.0, static_cast<int>(n - l));
    b.beta = std::pow(1.0 - std::ldexp(1.0, -static_cast<int>(l + 1)), nn - ll + 1.0) *
             std::ldexp(1.0, static_cast<int>(n));
    b.beta_blocks = std::pow(1.0 - std::ldexp(1.0, -static_cast<int>(l + 1)), static_cast<double>(n / (l + 1))) *
                    std::ldexp(1.0, static_cast<int>(n));
    return b;
}

AverageStats average_stats(std::size_t n) {
    if (n < 2 || n > 40) {
        throw ContractViolation("average_stats: need 2 <= n <= 40");
    }
    AverageStats stats;
    stats.n = n;
    stats.f.resize(n + 1);
    stats.alpha.assign(n + 1, 0.0);
    stats.beta.assign(n + 1, 0.0);
    stats.beta_blocks.assign(n + 1, 0.0);

    std::uint64_t weighted_total = 0;
    std::uint64_t weighted_seed = 0;
    for (std::size_t d = 0; d <= n; ++d) {
        stats.f[d] = count_max_run_exact(n, d);
        // 0^d 1^(n-d) realises longest run d; the seed search only sees
        // answers about zero runs, so its cost depends on d alone.
        Oracle probe(BitString::zeros(d).concat(BitString::ones(n - d)));
        RunLengthRow row;
        row.d = d;
        row.strings = stats.f[d];
        row.seed_cost = find_max_zero_run(probe, n).cost;
        row.basic_cost = n - d + (d + 1) + 1;
        weighted_seed += row.strings * row.seed_cost;
        weighted_total += row.strings * (row.seed_cost + row.basic_cost);
        stats.rows.push_back(row);
    }
    const std::uint64_t space = std::uint64_t{1} << n;
    stats.exact_mean = ExactRational::of(weighted_total, space);
    stats.seed_mean = ExactRational::of(weighted_seed, space);
    for (std::size_t l = 1; l <= n; ++l) {
        const TailBounds b = tail_bounds(n, l);
        stats.alpha[l] = b.alpha;
        stats.beta[l] = b.beta;
        stats.beta_blocks[l] = b.beta_blocks;
    }
    return stats;
}

ExactRational expected_queries(std::size_t n) { return average_stats(n).exact_mean; }

}  // namespace strrecon
