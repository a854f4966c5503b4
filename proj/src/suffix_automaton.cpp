#include "strrecon/suffix_automaton.hpp"

#include <algorithm>

namespace strrecon {

SuffixAutomaton::SuffixAutomaton() : states_(1), prefix_state_{kRoot} {}

SuffixAutomaton::SuffixAutomaton(const BitString& text) : SuffixAutomaton() {
    states_.reserve(2 * text.size() + 1);
    prefix_state_.reserve(text.size() + 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        push_back(text[i]);
    }
}

void SuffixAutomaton::push_back(bool bit) {
    const int c = bit ? 1 : 0;
    const int cur = static_cast<int>(states_.size());
    states_.push_back(State{states_[static_cast<std::size_t>(last_)].len + 1, kNone, {kNone, kNone}});

    int p = last_;
    while (p != kNone && states_[static_cast<std::size_t>(p)].next[c] == kNone) {
        states_[static_cast<std::size_t>(p)].next[c] = cur;
        p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == kNone) {
        states_[static_cast<std::size_t>(cur)].link = kRoot;
    } else {
        const int q = states_[static_cast<std::size_t>(p)].next[c];
        if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
            states_[static_cast<std::size_t>(cur)].link = q;
        } else {
            const int clone = static_cast<int>(states_.size());
            State copy = states_[static_cast<std::size_t>(q)];
            copy.len = states_[static_cast<std::size_t>(p)].len + 1;
            states_.push_back(copy);
            while (p != kNone && states_[static_cast<std::size_t>(p)].next[c] == q) {
                states_[static_cast<std::size_t>(p)].next[c] = clone;
                p = states_[static_cast<std::size_t>(p)].link;
            }
            states_[static_cast<std::size_t>(q)].link = clone;
            states_[static_cast<std::size_t>(cur)].link = clone;
        }
    }
    last_ = cur;
    prefix_state_.push_back(cur);
}

int SuffixAutomaton::walk(int state, const BitString& s, std::size_t begin,
                          std::size_t end) const noexcept {
    for (std::size_t i = begin; i < end && state != kNone; ++i) {
        state = step(state, s[i]);
    }
    return state;
}

int SuffixAutomaton::walk_reversed(int state, const BitString& s, std::size_t begin,
                                   std::size_t end) const noexcept {
    for (std::size_t i = end; i > begin && state != kNone; --i) {
        state = step(state, s[i - 1]);
    }
    return state;
}

std::size_t GrowingIndex::shortest_absent_sibling_suffix(std::size_t min_length) const {
    const std::size_t k = size();
    if (k == 0 || min_length > k) {
        throw ContractViolation("GrowingIndex: no sibling suffix of the requested length");
    }
    // Matching statistics of T[1..k-1]·flip(T[k]) against T: start from the
    // state of the whole prefix T[1..k-1] and fall back along suffix links
    // until the flipped symbol can be read.
    int state = automaton_.prefix_state(k - 1);
    std::size_t matched = k - 1;
    const bool bit = !text_.back();
    while (state != SuffixAutomaton::kNone && automaton_.step(state, bit) == SuffixAutomaton::kNone) {
        state = automaton_.link(state);
        if (state != SuffixAutomaton::kNone) {
            matched = automaton_.length(state);
        }
    }
    const std::size_t longest_present = state == SuffixAutomaton::kNone ? 0 : matched + 1;
    return std::max(min_length, longest_present + 1);
}

CachedMatcher::CachedMatcher(const BitString& text) : forward_(text) {
    for (std::size_t i = text.size(); i > 0; --i) {
        reverse_.push_back(text[i - 1]);
    }
}

int CachedMatcher::forward_state_of(Entry& e) const {
    if (e.forward_state == SuffixAutomaton::kNone) {
        e.forward_state = forward_.walk(SuffixAutomaton::kRoot, e.key, 0, e.key.size());
    }
    return e.forward_state;
}

int CachedMatcher::reverse_state_of(Entry& e) const {
    if (e.reverse_state == SuffixAutomaton::kNone) {
        e.reverse_state = reverse_.walk_reversed(SuffixAutomaton::kRoot, e.key, 0, e.key.size());
    }
    return e.reverse_state;
}

void CachedMatcher::remember(Entry entry) {
    entry.valid = true;
    cache_[next_slot_] = std::move(entry);
    next_slot_ = (next_slot_ + 1) % kCacheSize;
}

bool CachedMatcher::contains(const BitString& pattern) {
    const std::size_t m = pattern.size();
    if (m > text_size()) {
        return false;
    }
    if (m == 0) {
        return true;
    }

    Entry* best = nullptr;
    bool best_is_prefix = false;
    // Newest first: the previous query is usually one symbol shorter.
    for (std::size_t age = 1; age <= kCacheSize; ++age) {
        Entry& e = cache_[(next_slot_ + kCacheSize - age) % kCacheSize];
        if (best != nullptr && best->key.size() + 1 >= m) {
            break;
        }
        if (!e.valid || e.key.size() > m) {
            continue;
        }
        if (e.present) {
            if (best != nullptr && e.key.size() <= best->key.size()) {
                continue;
            }
            if (pattern.starts_with(e.key)) {
                best = &e;
                best_is_prefix = true;
            } else if (pattern.ends_with(e.key)) {
                best = &e;
                best_is_prefix = false;
            }
        } else if (pattern.starts_with(e.key) || pattern.ends_with(e.key)) {
            if (e.key.size() != m) {
                remember(Entry{pattern, false});
            }
            return false;
        }
    }

    Entry fresh{pattern, false};
    if (best == nullptr) {
        fresh.forward_state = forward_.walk(SuffixAutomaton::kRoot, pattern, 0, m);
        fresh.present = fresh.forward_state != SuffixAutomaton::kNone;
    } else if (best->key.size() == m) {
        return true;
    } else if (best_is_prefix) {
        fresh.forward_state = forward_.walk(forward_state_of(*best), pattern, best->key.size(), m);
        fresh.present = fresh.forward_state != SuffixAutomaton::kNone;
    } else {
        fresh.reverse_state =
            reverse_.walk_reversed(reverse_state_of(*best), pattern, 0, m - best->key.size());
        fresh.present = fresh.reverse_state != SuffixAutomaton::kNone;
    }
    const bool present = fresh.present;
    if (!present) {
        fresh.forward_state = SuffixAutomaton::kNone;
        fresh.reverse_state = SuffixAutomaton::kNone;
    }
    remember(std::move(fresh));
    return present;
}

}  // namespace strrecon
