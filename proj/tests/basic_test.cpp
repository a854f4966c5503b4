#include <gtest/gtest.h>

#include <random>

#include "strrecon/basic.hpp"
#include "support.hpp"

using strrecon::BitString;
using strrecon::Oracle;

namespace {

BitString B(const std::string& s) { return BitString::parse(s); }

struct Probe {
    BitString result;
    std::uint64_t queries;
};

template <typename F>
Probe with_oracle(const std::string& hidden, F&& f) {
    Oracle o(B(hidden), strrecon::OracleOptions{false, true});
    BitString r = f(o);
    return {r, o.total_queries()};
}

}  // namespace

TEST(ExtendLeft, Examples) {
    auto p = with_oracle("1100", [](Oracle& o) { return strrecon::extend_left(o, B("10")); });
    EXPECT_EQ(p.result, B("110"));
    EXPECT_EQ(p.queries, 1U);
    EXPECT_EQ(with_oracle("1000", [](Oracle& o) { return strrecon::extend_left(o, B("00")); }).result, B("100"));
    p = with_oracle("0001", [](Oracle& o) { return strrecon::extend_left(o, B("00")); });
    EXPECT_EQ(p.result, B("000"));
    EXPECT_EQ(p.queries, 1U);
}

TEST(ExtendRight, Examples) {
    EXPECT_EQ(with_oracle("1100", [](Oracle& o) { return strrecon::extend_right(o, B("11")); }).result, B("110"));
    EXPECT_EQ(with_oracle("0110", [](Oracle& o) { return strrecon::extend_right(o, B("01")); }).result, B("011"));
    EXPECT_EQ(with_oracle("00", [](Oracle& o) { return strrecon::extend_right(o, B("0")); }).result, B("00"));
}

TEST(FindRightEnd, Examples) {
    auto p = with_oracle("1100", [](Oracle& o) { return strrecon::find_right_end(o, B("11000"), B("00")); });
    EXPECT_EQ(p.result, B("1100"));
    EXPECT_EQ(p.queries, 2U);
    p = with_oracle("111", [](Oracle& o) { return strrecon::find_right_end(o, B("1110"), B("0")); });
    EXPECT_EQ(p.result, B("111"));
    EXPECT_EQ(p.queries, 1U);
    p = with_oracle("0100", [](Oracle& o) { return strrecon::find_right_end(o, B("01000"), B("000")); });
    EXPECT_EQ(p.result, B("0100"));
    EXPECT_EQ(p.queries, 3U);
}

TEST(FindLeftEnd, Examples) {
    auto p = with_oracle("0110", [](Oracle& o) { return strrecon::find_left_end(o, B("00110"), 1); });
    EXPECT_EQ(p.result, B("0110"));
    EXPECT_EQ(p.queries, 3U);
    p = with_oracle("110", [](Oracle& o) { return strrecon::find_left_end(o, B("0110"), 0); });
    EXPECT_EQ(p.result, B("110"));
    EXPECT_EQ(p.queries, 2U);
    EXPECT_EQ(with_oracle("00101", [](Oracle& o) { return strrecon::find_left_end(o, B("000101"), 1); }).result,
              B("00101"));
}

TEST(Fill, Examples) {
    EXPECT_EQ(with_oracle("10011", [](Oracle& o) { return strrecon::fill(o, B(""), B("011"), 5); }).result,
              B("10011"));
    auto p = with_oracle("1010", [](Oracle& o) { return strrecon::fill(o, B("10"), B("10"), 4); });
    EXPECT_EQ(p.result, B("1010"));
    EXPECT_EQ(p.queries, 1U);
    p = with_oracle("0110", [](Oracle& o) { return strrecon::fill(o, B(""), B("0110"), 4); });
    EXPECT_EQ(p.result, B("0110"));
    EXPECT_EQ(p.queries, 0U);
}

TEST(Fill, ReconstructsFromAnyPrefixAndUniqueSuffix) {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const auto& hidden : support::all_strings(n)) {
            for (std::size_t h = 0; h <= n; ++h) {
                for (std::size_t t = 1; t <= n; ++t) {
                    if (hidden.find(hidden.substr(n - t)) != n - t) {
                        continue;  // suffix also occurs earlier
                    }
                    const auto p = with_oracle(hidden, [&](Oracle& o) {
                        return strrecon::fill(o, B(hidden.substr(0, h)), B(hidden.substr(n - t)), n);
                    });
                    ASSERT_EQ(p.result, B(hidden)) << hidden << " h=" << h << " t=" << t;
                    // Never worse than extending the suffix alone, plus the junction check.
                    ASSERT_LE(p.queries, n - t + 1);
                }
            }
        }
    }
}

TEST(Fill, RepeatedSuffixCanMisanchor) {
    // "0" also occurs at position 2 of "100", so query("10") = yes does not
    // mean "10" is a suffix.
    Oracle o(B("100"));
    EXPECT_EQ(strrecon::fill(o, B(""), B("0"), 3), B("010"));
}

TEST(Basic, Examples) {
    auto p = with_oracle("1100101000", [](Oracle& o) { return strrecon::basic(o, B("000"), B("0000"), 10); });
    EXPECT_EQ(p.result, B("1100101000"));
    EXPECT_LE(p.queries, 12U);
    p = with_oracle("1111", [](Oracle& o) { return strrecon::basic(o, B(""), B("0"), 4); });
    EXPECT_EQ(p.result, B("1111"));
    EXPECT_LE(p.queries, 6U);
    p = with_oracle("0000", [](Oracle& o) { return strrecon::basic(o, B("0000"), B("00000"), 4); });
    EXPECT_EQ(p.result, B("0000"));
    EXPECT_LE(p.queries, 6U);
}

TEST(Basic, ZeroRunSeedCostsExactlyNPlusTwo) {
    // S = 0^d, T = 0^(d+1): n - d + (d + 1) + 1.
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& hidden : support::all_strings(n)) {
            const std::size_t d = support::naive_max_zero_run(hidden);
            const auto p = with_oracle(hidden, [&](Oracle& o) {
                return strrecon::basic(o, B(support::zeros(d)), B(support::zeros(d + 1)), n);
            });
            ASSERT_EQ(p.result, B(hidden));
            ASSERT_EQ(p.queries, n + 2) << hidden;
        }
    }
}

TEST(Basic, BoundHoldsForArbitrarySeedAndStop) {
    std::mt19937_64 gen(21);
    for (int rep = 0; rep < 3000; ++rep) {
        const std::size_t n = 1 + gen() % 40;
        const std::string hidden = support::random_bits(gen, n);
        const std::size_t off = gen() % n;
        const std::string seed = hidden.substr(off, gen() % (n - off + 1));
        std::string stop;
        do {
            stop = support::random_bits(gen, 1 + gen() % 8);
        } while (support::naive_contains(hidden, stop));
        const auto p = with_oracle(hidden, [&](Oracle& o) { return strrecon::basic(o, B(seed), B(stop), n); });
        ASSERT_EQ(p.result, B(hidden)) << hidden << " S=" << seed << " T=" << stop;
        ASSERT_LE(p.queries, n - seed.size() + stop.size() + 1);
    }
}

TEST(Basic, ResumeSkipsKnownAbsentProbes) {
    std::mt19937_64 gen(22);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 2 + gen() % 30;
        const std::string hidden = support::random_bits(gen, n);
        const std::size_t d = support::naive_max_zero_run(hidden);
        const std::size_t off = gen() % n;
        const std::string seed = hidden.substr(off, 1 + gen() % (n - off));
        // Count leading probes seed·0^(i-1)·1 that are absent.
        std::size_t absent = 0;
        while (absent < d + 1 && !support::naive_contains(hidden, seed + support::zeros(absent) + "1")) {
            ++absent;
        }
        const std::size_t skip = absent == 0 ? 0 : gen() % (absent + 1);
        const auto full = with_oracle(hidden, [&](Oracle& o) {
            return strrecon::basic(o, B(seed), B(support::zeros(d + 1)), n);
        });
        const auto resumed = with_oracle(hidden, [&](Oracle& o) {
            return strrecon::basic_resume(o, B(seed), B(support::zeros(d + 1)), n, skip + 1);
        });
        ASSERT_EQ(resumed.result, B(hidden));
        ASSERT_EQ(resumed.queries + skip, full.queries);
    }
}

TEST(Basic, RejectsEmptyStop) {
    Oracle o(B("01"));
    EXPECT_THROW(strrecon::basic(o, B("0"), B(""), 2), strrecon::ContractViolation);
}
