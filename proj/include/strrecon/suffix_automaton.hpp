#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "strrecon/bitstring.hpp"

namespace strrecon {

/// Online suffix automaton over {0,1}.
///
/// Every substring of the text read so far corresponds to a path from the
/// root, so membership costs one transition per symbol and appending a
/// symbol is amortised O(1).
class SuffixAutomaton {
public:
    static constexpr int kNone = -1;
    static constexpr int kRoot = 0;

    SuffixAutomaton();
    explicit SuffixAutomaton(const BitString& text);

    void push_back(bool bit);

    [[nodiscard]] std::size_t text_size() const noexcept { return prefix_state_.size() - 1; }
    [[nodiscard]] int step(int state, bool bit) const noexcept {
        return state == kNone ? kNone : states_[static_cast<std::size_t>(state)].next[bit ? 1 : 0];
    }
    [[nodiscard]] int link(int state) const noexcept {
        return states_[static_cast<std::size_t>(state)].link;
    }
    [[nodiscard]] std::size_t length(int state) const noexcept {
        return states_[static_cast<std::size_t>(state)].len;
    }
    /// State reached by the whole prefix of the given length.
    [[nodiscard]] int prefix_state(std::size_t length) const noexcept {
        return prefix_state_[length];
    }

    /// Walks s[begin..end) forward from `state`; kNone if the path breaks.
    [[nodiscard]] int walk(int state, const BitString& s, std::size_t begin, std::size_t end) const noexcept;
    /// Walks s[begin..end) backward (s[end-1] first) from `state`.
    [[nodiscard]] int walk_reversed(int state, const BitString& s, std::size_t begin,
                                    std::size_t end) const noexcept;

    [[nodiscard]] bool contains(const BitString& s) const noexcept {
        return walk(kRoot, s, 0, s.size()) != kNone;
    }

private:
    struct State {
        std::size_t len = 0;
        int link = kNone;
        std::array<int, 2> next{kNone, kNone};
    };

    std::vector<State> states_;
    std::vector<int> prefix_state_;
    int last_ = kRoot;
};

/// Substring index over a string that only grows at one end.
///
/// Backs the query-free "is this an I-substring?" checks of the randomized
/// extension loop. For a rightward-growing text the index is fed symbols in
/// order; for a leftward-growing text it is fed the reversal, and callers
/// reverse their patterns accordingly.
class GrowingIndex {
public:
    GrowingIndex() = default;
    explicit GrowingIndex(const BitString& text) : automaton_(text), text_(text) {}

    void push_back(bool bit) {
        automaton_.push_back(bit);
        text_.push_back(bit);
    }
    [[nodiscard]] const BitString& text() const noexcept { return text_; }
    [[nodiscard]] std::size_t size() const noexcept { return automaton_.text_size(); }
    [[nodiscard]] bool contains(const BitString& s) const noexcept { return automaton_.contains(s); }

    /// Let T be the indexed text, k = |T| >= 1. Returns the smallest
    /// m >= min_length such that sibling(suffix_m(T)) is not a substring of T.
    /// Such an m <= k always exists when min_length <= k because
    /// sibling(T) != T.
    [[nodiscard]] std::size_t shortest_absent_sibling_suffix(std::size_t min_length) const;

private:
    SuffixAutomaton automaton_;
    BitString text_;
};

/// Membership oracle over a fixed text with a small cache of recent
/// patterns. A pattern that extends a cached present pattern on the right
/// (left) continues from its forward (reverse) automaton state, so the
/// one-symbol-at-a-time extension queries used by every reconstruction
/// algorithm cost O(|pattern| / 64) instead of O(|pattern|).
class CachedMatcher {
public:
    explicit CachedMatcher(const BitString& text);

    [[nodiscard]] bool contains(const BitString& pattern);
    [[nodiscard]] std::size_t text_size() const noexcept { return forward_.text_size(); }

private:
    struct Entry {
        BitString key;
        bool present = false;
        int forward_state = SuffixAutomaton::kNone;  // kNone: not yet computed
        int reverse_state = SuffixAutomaton::kNone;
        bool valid = false;
    };
    static constexpr std::size_t kCacheSize = 8;

    int forward_state_of(Entry& e) const;
    int reverse_state_of(Entry& e) const;
    void remember(Entry entry);

    SuffixAutomaton forward_;
    SuffixAutomaton reverse_;  // automaton of the reversed text
    std::array<Entry, kCacheSize> cache_{};
    std::size_t next_slot_ = 0;
};

}  // namespace strrecon
