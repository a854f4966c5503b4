#include "strrecon/label_db.hpp"

namespace strrecon {

LabelDB::LabelDB(Anchor anchor) : anchor_(anchor), nodes_(1) {}

bool LabelDB::insert(const BitString& context, bool symbol) {
    std::size_t node = 0;
    for (std::size_t depth = 0; depth < context.size(); ++depth) {
        const int c = symbol_at(context, depth) ? 1 : 0;
        if (nodes_[node].child[c] < 0) {
            nodes_[node].child[c] = static_cast<int>(nodes_.size());
            nodes_.emplace_back();
        }
        node = static_cast<std::size_t>(nodes_[node].child[c]);
    }
    if (nodes_[node].label >= 0) {
        return false;
    }
    nodes_[node].label = symbol ? 1 : 0;
    ++entries_;
    return true;
}

std::optional<bool> LabelDB::lookup(const BitString& context) const {
    std::size_t node = 0;
    for (std::size_t depth = 0; depth < context.size(); ++depth) {
        const int next = nodes_[node].child[symbol_at(context, depth) ? 1 : 0];
        if (next < 0) {
            return std::nullopt;
        }
        node = static_cast<std::size_t>(next);
    }
    if (nodes_[node].label < 0) {
        return std::nullopt;
    }
    return nodes_[node].label == 1;
}

std::optional<LabelDB::Match> LabelDB::first_match(const BitString& text,
                                                   std::size_t min_length) const {
    std::size_t node = 0;
    for (std::size_t depth = 0;; ++depth) {
        if (depth >= min_length && nodes_[node].label >= 0) {
            return Match{depth, nodes_[node].label == 1};
        }
        if (depth == text.size()) {
            return std::nullopt;
        }
        const int next = nodes_[node].child[symbol_at(text, depth) ? 1 : 0];
        if (next < 0) {
            return std::nullopt;
        }
        node = static_cast<std::size_t>(next);
    }
}

}  // namespace strrecon
