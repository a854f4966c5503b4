#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/rng.hpp"

namespace strrecon {

/// A test-string family. Text form: random, allzero, allone,
/// periodic(PATTERN,FLIPS), debruijn(ORDER), runlength(D), nearend(OFFSET).
struct Family {
    enum class Kind { Random, AllZero, AllOne, Periodic, DeBruijn, RunLength, NearEnd };

    Kind kind = Kind::Random;
    BitString pattern;        // periodic: the repeated block
    std::size_t value = 0;    // periodic: random flips; debruijn: order; runlength: d; nearend: offset

    static Family parse(const std::string& text);
    [[nodiscard]] std::string to_string() const;
};

/// Binary de Bruijn sequence of the given order (length 2^order, cyclic),
/// lexicographically least.
BitString de_bruijn(std::size_t order);

/// One member of `family` of length n, fully determined by `seed`.
BitString gen_string(const Family& family, std::size_t n, std::uint64_t seed);

/// `count` members; member i uses seed Rng::split(seed, i).
std::vector<BitString> gen_corpus(const Family& family, std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace strrecon
