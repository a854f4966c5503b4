#pragma once

// Brute-force reference implementations over std::string, used as test
// oracles for the bit-packed code.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace support {

inline bool naive_contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

inline std::size_t naive_max_zero_run(const std::string& s) {
    std::size_t best = 0;
    std::size_t run = 0;
    for (char c : s) {
        run = c == '0' ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

inline std::string random_bits(std::mt19937_64& gen, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s.push_back((gen() & 1U) != 0 ? '1' : '0');
    }
    return s;
}

/// Every binary string of length n, in counting order.
inline std::vector<std::string> all_strings(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            if ((v >> (n - 1 - i)) & 1U) {
                s[i] = '1';
            }
        }
        out.push_back(s);
    }
    return out;
}

inline std::string zeros(std::size_t k) { return std::string(k, '0'); }
inline std::string ones(std::size_t k) { return std::string(k, '1'); }

}  // namespace support
