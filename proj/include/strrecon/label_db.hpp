#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "strrecon/bitstring.hpp"

namespace strrecon {

/// Single-child database: maps a context V to the symbol t known to follow
/// it (entry V -> t records that V·flip(t) is absent from the hidden string).
///
/// Stored as a binary trie read from the anchored end, so the shortest
/// labelled context at the end (or start) of a working string is found in
/// one walk.
class LabelDB {
public:
    enum class Anchor {
        End,    // contexts are suffixes of the working string; labels name the next symbol
        Start,  // contexts are prefixes; labels name the preceding symbol
    };

    struct Match {
        std::size_t length = 0;
        bool symbol = false;
    };

    explicit LabelDB(Anchor anchor = Anchor::End);

    /// Records `context` -> `symbol`; an existing entry is left unchanged.
    /// Returns true if a new entry was added.
    bool insert(const BitString& context, bool symbol);
    [[nodiscard]] std::optional<bool> lookup(const BitString& context) const;
    /// Shortest labelled context of length >= min_length anchored at the
    /// configured end of `text`.
    [[nodiscard]] std::optional<Match> first_match(const BitString& text, std::size_t min_length) const;

    [[nodiscard]] std::size_t size() const noexcept { return entries_; }
    [[nodiscard]] Anchor anchor() const noexcept { return anchor_; }

private:
    struct Node {
        std::array<int, 2> child{-1, -1};
        signed char label = -1;
    };

    [[nodiscard]] bool symbol_at(const BitString& s, std::size_t depth) const noexcept {
        return anchor_ == Anchor::End ? s[s.size() - 1 - depth] : s[depth];
    }

    Anchor anchor_;
    std::vector<Node> nodes_;
    std::size_t entries_ = 0;
};

}  // namespace strrecon
