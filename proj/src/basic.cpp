#include "strrecon/basic.hpp"

#include <algorithm>

namespace strrecon {

BitString extend_left(Oracle& oracle, const BitString& s) {
    BitString with_one = s.prepended(true);
    if (oracle.query(with_one)) {
        return with_one;
    }
    return s.prepended(false);
}

BitString extend_right(Oracle& oracle, const BitString& s) {
    BitString with_one = s.appended(true);
    if (oracle.query(with_one)) {
        return with_one;
    }
    return s.appended(false);
}

BitString find_right_end(Oracle& oracle, const BitString& overshoot, const BitString& tail) {
    if (tail.size() > overshoot.size()) {
        throw ContractViolation("find_right_end: tail longer than overshoot");
    }
    BitString current = prefix(overshoot, overshoot.size() - tail.size());
    for (std::size_t j = 0; j < tail.size(); ++j) {
        BitString next = current.appended(tail[j]);
        if (!oracle.query(next)) {
            break;
        }
        current = std::move(next);
    }
    return current;
}

BitString find_left_end(Oracle& oracle, const BitString& overshoot, std::size_t /*d*/) {
    const std::size_t zeros = overshoot.leading_zeros();
    BitString current = suffix(overshoot, overshoot.size() - zeros);
    if (!current.empty() && !oracle.query(current)) {
        return current;
    }
    for (;;) {
        BitString next = current.prepended(false);
        if (!oracle.query(next)) {
            return current;
        }
        current = std::move(next);
    }
}

BitString fill(Oracle& oracle, const BitString& head, const BitString& tail, std::size_t n) {
    BitString current = tail;
    auto grow_to = [&](std::size_t target) {
        while (current.size() < target) {
            current = extend_left(oracle, current);
            oracle.whitebox_assert_suffix(current, "fill: left extension of the suffix");
        }
    };

    if (head.empty() || current.size() >= n) {
        grow_to(n);
        return current;
    }
    const BitString known_head = prefix(head, std::min(head.size(), n));
    if (known_head.size() + current.size() < n) {
        grow_to(n - known_head.size());
    }
    // The two pieces now meet or overlap; a consistent overlap leaves a
    // single candidate, confirmed by one query.
    const std::size_t overlap = known_head.size() + current.size() - n;
    if (suffix(known_head, overlap) == prefix(current, overlap)) {
        BitString merged = known_head.concat(suffix(current, n - known_head.size()));
        if (oracle.query(merged)) {
            return merged;
        }
    }
    grow_to(n);
    return current;
}

BitString basic_resume(Oracle& oracle, const BitString& seed, const BitString& stop,
                       std::size_t n, std::size_t first_probe) {
    if (stop.empty()) {
        throw ContractViolation("basic: the nonsubstring must be non-empty");
    }
    BitString s = seed;

    // Right extension: probe s·stop[1..i-1]·flip(stop[i]); a yes commits the
    // probe and restarts from i = 1.
    std::size_t i = std::max<std::size_t>(first_probe, 1);
    while (i <= stop.size()) {
        BitString probe = s.concat(prefix(stop, i - 1)).appended(!stop[i - 1]);
        if (oracle.query(probe)) {
            s = std::move(probe);
            i = 1;
        } else {
            ++i;
        }
    }

    // Every occurrence of s is followed by a proper prefix of `stop` and
    // then the end, so s occurs once; walk to the right end.
    for (std::size_t j = 0; j < stop.size(); ++j) {
        BitString next = s.appended(stop[j]);
        if (!oracle.query(next)) {
            break;
        }
        s = std::move(next);
    }
    oracle.whitebox_assert_suffix(s, "basic: right end");

    while (s.size() < n) {
        s = extend_left(oracle, s);
        oracle.whitebox_assert_suffix(s, "basic: left extension");
    }
    return s;
}

BitString basic(Oracle& oracle, const BitString& seed, const BitString& stop, std::size_t n) {
    return basic_resume(oracle, seed, stop, n, 1);
}

}  // namespace strrecon
