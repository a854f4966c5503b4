#include <gtest/gtest.h>

#include <random>

#include "strrecon/suffix_automaton.hpp"
#include "support.hpp"

using strrecon::BitString;
using strrecon::CachedMatcher;
using strrecon::GrowingIndex;
using strrecon::SuffixAutomaton;

namespace {

BitString B(const std::string& s) { return BitString::parse(s); }

// Shortest m >= min_length with sibling(suffix_m(t)) absent from t.
std::size_t brute_shortest_absent(const std::string& t, std::size_t min_length) {
    for (std::size_t m = min_length; m <= t.size(); ++m) {
        std::string s = t.substr(t.size() - m);
        s.back() = s.back() == '0' ? '1' : '0';
        if (!support::naive_contains(t, s)) {
            return m;
        }
    }
    return 0;
}

}  // namespace

TEST(SuffixAutomaton, ContainsEverySubstringExhaustively) {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& text : support::all_strings(n)) {
            const SuffixAutomaton sam(B(text));
            for (std::size_t m = 0; m <= n + 1; ++m) {
                for (const auto& p : support::all_strings(m)) {
                    ASSERT_EQ(sam.contains(B(p)), support::naive_contains(text, p)) << text << " " << p;
                }
            }
        }
    }
}

TEST(SuffixAutomaton, OnlineGrowthAgreesWithRebuild) {
    std::mt19937_64 gen(3);
    const std::string text = support::random_bits(gen, 300);
    SuffixAutomaton online;
    for (std::size_t i = 0; i < text.size(); ++i) {
        online.push_back(text[i] == '1');
        if (i % 37 == 0) {
            const std::string grown = text.substr(0, i + 1);
            for (int rep = 0; rep < 50; ++rep) {
                const std::string p = support::random_bits(gen, 1 + gen() % 10);
                ASSERT_EQ(online.contains(B(p)), support::naive_contains(grown, p));
            }
        }
    }
    EXPECT_EQ(online.text_size(), text.size());
    EXPECT_EQ(online.length(online.prefix_state(text.size())), text.size());
}

TEST(GrowingIndex, ShortestAbsentSiblingMatchesBruteForce) {
    std::mt19937_64 gen(5);
    for (int rep = 0; rep < 200; ++rep) {
        const std::string text = support::random_bits(gen, 1 + gen() % 80);
        GrowingIndex index;
        for (char c : text) {
            index.push_back(c == '1');
        }
        for (std::size_t min_length = 1; min_length <= text.size(); min_length += 1 + text.size() / 7) {
            ASSERT_EQ(index.shortest_absent_sibling_suffix(min_length), brute_shortest_absent(text, min_length))
                << text << " min " << min_length;
        }
    }
}

TEST(GrowingIndex, PeriodicTextNeedsWholeLength) {
    // sibling(suffix_m) occurs in 0101...01 for every m < n.
    const std::string text = "0101010101";
    const GrowingIndex index(B(text));
    EXPECT_EQ(index.shortest_absent_sibling_suffix(1), brute_shortest_absent(text, 1));
    EXPECT_THROW((void)index.shortest_absent_sibling_suffix(11), strrecon::ContractViolation);
}

TEST(CachedMatcher, AgreesWithNaiveUnderExtensionWorkloads) {
    std::mt19937_64 gen(9);
    for (int rep = 0; rep < 30; ++rep) {
        const std::string text = support::random_bits(gen, 20 + gen() % 200);
        CachedMatcher matcher(B(text));
        // Left and right one-symbol growth, as the algorithms query.
        std::string cur = text.substr(gen() % text.size(), 1);
        for (int step = 0; step < 300; ++step) {
            const bool left = (gen() & 1U) != 0;
            const char c = (gen() & 1U) != 0 ? '1' : '0';
            const std::string probe = left ? c + cur : cur + c;
            const bool expect = support::naive_contains(text, probe);
            ASSERT_EQ(matcher.contains(B(probe)), expect) << text << " " << probe;
            if (expect) {
                cur = probe;
            } else if ((gen() % 4) == 0) {
                cur = text.substr(gen() % text.size(), 1);
            }
        }
        for (int q = 0; q < 100; ++q) {
            const std::string p = support::random_bits(gen, gen() % 12);
            ASSERT_EQ(matcher.contains(B(p)), support::naive_contains(text, p));
        }
    }
}

TEST(CachedMatcher, AbsentPrefixShortcutIsSound) {
    CachedMatcher matcher(B("0011"));
    EXPECT_FALSE(matcher.contains(B("10")));
    EXPECT_FALSE(matcher.contains(B("101")));
    EXPECT_FALSE(matcher.contains(B("010")));
    EXPECT_TRUE(matcher.contains(B("011")));
    EXPECT_TRUE(matcher.contains(B("")));
    EXPECT_FALSE(matcher.contains(B("00110")));
}
