#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "strrecon/average.hpp"
#include "support.hpp"

using strrecon::BitString;
using strrecon::Oracle;

namespace {

BitString B(const std::string& s) { return BitString::parse(s); }

// f(i) by enumeration.
std::vector<std::uint64_t> brute_f(std::size_t n) {
    std::vector<std::uint64_t> f(n + 1, 0);
    for (const auto& s : support::all_strings(n)) {
        ++f[support::naive_max_zero_run(s)];
    }
    return f;
}

}  // namespace

TEST(FloorLog2, SmallValues) {
    EXPECT_EQ(strrecon::floor_log2(1), 0U);
    EXPECT_EQ(strrecon::floor_log2(2), 1U);
    EXPECT_EQ(strrecon::floor_log2(3), 1U);
    EXPECT_EQ(strrecon::floor_log2(16), 4U);
    EXPECT_EQ(strrecon::floor_log2(4095), 11U);
}

TEST(FindMaxZeroRun, Examples) {
    const std::string run4 = "1000010101010101";
    Oracle a(B(run4));
    auto r = strrecon::find_max_zero_run(a, 16);
    EXPECT_EQ(r.d, 4U);
    EXPECT_EQ(r.cost, 2U);

    Oracle b(B("1000001010101010"));
    r = strrecon::find_max_zero_run(b, 16);
    EXPECT_EQ(r.d, 5U);
    EXPECT_EQ(r.cost, 3U);

    Oracle c(B(support::ones(16)));
    r = strrecon::find_max_zero_run(c, 16);
    EXPECT_EQ(r.d, 0U);
    EXPECT_EQ(r.cost, 4U);
}

TEST(FindMaxZeroRun, FindsLongestRunWithLinearCost) {
    for (std::size_t n = 2; n <= 12; ++n) {
        const std::size_t L = strrecon::floor_log2(n);
        for (const auto& hidden : support::all_strings(n)) {
            Oracle o(B(hidden));
            const auto r = strrecon::find_max_zero_run(o, n);
            const std::size_t d = support::naive_max_zero_run(hidden);
            ASSERT_EQ(r.d, d) << hidden;
            ASSERT_EQ(r.cost, o.total_queries());
            // One probe per step from 0^L, plus the closing answer.
            const std::size_t expect = d >= L ? d - L + 2 : (d == 0 ? L : L - d + 1);
            ASSERT_EQ(r.cost, expect) << hidden;
        }
    }
}

TEST(ReconstructAverage, Examples) {
    Oracle a(B(support::ones(16)));
    auto run = strrecon::reconstruct_average_run(a, 16);
    EXPECT_EQ(run.result, B(support::ones(16)));
    EXPECT_EQ(run.seed_queries, 4U);
    EXPECT_LE(run.basic_queries, 18U);

    Oracle b(B(support::zeros(16)));
    run = strrecon::reconstruct_average_run(b, 16);
    EXPECT_EQ(run.result, B(support::zeros(16)));
    EXPECT_EQ(run.d, 16U);
}

TEST(ReconstructAverage, CorrectOnEveryStringUpTo14) {
    for (std::size_t n = 1; n <= 14; ++n) {
        for (const auto& hidden : support::all_strings(n)) {
            Oracle o(B(hidden), strrecon::OracleOptions{false, true});
            const auto run = strrecon::reconstruct_average_run(o, n);
            ASSERT_EQ(run.result, B(hidden));
            ASSERT_EQ(run.seed_queries + run.basic_queries, o.total_queries());
            if (n >= 2) {
                ASSERT_EQ(o.phase_count("seed"), run.seed_queries);
            }
        }
    }
}

TEST(ReconstructAverage, SingleSymbolTakesOneQuery) {
    for (const char* h : {"0", "1"}) {
        Oracle o(B(h));
        EXPECT_EQ(strrecon::reconstruct_average(o, 1), B(h));
        EXPECT_EQ(o.total_queries(), 1U);
    }
}

TEST(CountMaxRun, SmallTable) {
    const std::vector<std::uint64_t> expect = {1, 4, 2, 1};
    for (std::size_t i = 0; i <= 3; ++i) {
        EXPECT_EQ(strrecon::count_max_run_exact(3, i), expect[i]);
    }
    EXPECT_THROW((void)strrecon::count_max_run_exact(3, 4), strrecon::ContractViolation);
}

TEST(CountMaxRun, MatchesEnumerationUpTo16) {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto f = brute_f(n);
        std::uint64_t total = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            ASSERT_EQ(strrecon::count_max_run_exact(n, i), f[i]) << "n=" << n << " i=" << i;
            total += f[i];
        }
        ASSERT_EQ(total, std::uint64_t{1} << n);
        EXPECT_EQ(strrecon::count_max_run_exact(n, n), 1U);
    }
}

TEST(CountRunsAtMost, BoundaryConventions) {
    EXPECT_EQ(strrecon::count_runs_at_most(5, 0), 1U);
    EXPECT_EQ(strrecon::count_runs_at_most(5, -1), 0U);
    EXPECT_EQ(strrecon::count_runs_at_most(5, 5), 32U);
    EXPECT_EQ(strrecon::count_runs_at_most(0, 0), 1U);
}

TEST(TailBounds, Examples) {
    EXPECT_DOUBLE_EQ(strrecon::tail_bounds(16, 16).alpha, 1.0);
    EXPECT_DOUBLE_EQ(strrecon::tail_bounds(16, 5).alpha, 12.0 * 2048.0);
    EXPECT_NEAR(strrecon::tail_bounds(16, 3).beta, std::pow(15.0 / 16.0, 14) * 65536.0, 1e-6);
}

TEST(TailBounds, PartialSumsRespectAlphaAndBlockBeta) {
    for (std::size_t n = 2; n <= 20; ++n) {
        for (std::size_t l = 1; l <= n; ++l) {
            const auto tb = strrecon::tail_bounds(n, l);
            std::uint64_t upper = 0;
            std::uint64_t lower = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                const auto fi = strrecon::count_max_run_exact(n, i);
                upper += i >= l ? fi : 0;
                lower += i <= l ? fi : 0;
            }
            EXPECT_LE(static_cast<double>(upper), tb.alpha) << n << " " << l;
            EXPECT_LE(static_cast<double>(lower), tb.beta_blocks) << n << " " << l;
        }
    }
}

TEST(TailBounds, StatedBetaIsNotAnUpperBound) {
    // Strings of length 4 without 00: 8 of them; beta(1) is about 5.1.
    const std::uint64_t no_double_zero = strrecon::count_runs_at_most(4, 1);
    EXPECT_EQ(no_double_zero, 8U);
    EXPECT_LT(strrecon::tail_bounds(4, 1).beta, static_cast<double>(no_double_zero) - 2.0);
    // At n = 16, l = 3 the stated value is about 26551 against 39647.
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i <= 3; ++i) {
        sum += strrecon::count_max_run_exact(16, i);
    }
    EXPECT_EQ(sum, 39647U);
    EXPECT_LT(strrecon::tail_bounds(16, 3).beta, static_cast<double>(sum));
}

TEST(ExpectedQueries, EqualsExhaustiveMeanExactly) {
    for (std::size_t n = 2; n <= 14; ++n) {
        std::uint64_t total = 0;
        for (const auto& hidden : support::all_strings(n)) {
            Oracle o(B(hidden));
            (void)strrecon::reconstruct_average(o, n);
            total += o.total_queries();
        }
        EXPECT_EQ(strrecon::expected_queries(n), strrecon::ExactRational::of(total, std::uint64_t{1} << n))
            << "n=" << n;
    }
}

TEST(AverageStats, Sixteen) {
    const auto stats = strrecon::average_stats(16);
    EXPECT_LE(stats.exact_mean.value(), 22.0);
    EXPECT_LE(stats.seed_mean.value(), 5.0);
    std::uint64_t sum = 0;
    for (auto v : stats.f) {
        sum += v;
    }
    EXPECT_EQ(sum, 65536U);
    EXPECT_THROW((void)strrecon::average_stats(1), strrecon::ContractViolation);
}

TEST(ExactRational, ReducesOnConstruction) {
    const auto r = strrecon::ExactRational::of(6, 4);
    EXPECT_EQ(r.numerator, 3U);
    EXPECT_EQ(r.denominator, 2U);
    EXPECT_DOUBLE_EQ(r.value(), 1.5);
}
