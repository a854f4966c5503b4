#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strrecon {

/// Thrown when a structural operation is called outside its domain
/// (prefix longer than the string, parent of the empty string, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Immutable-by-convention binary string, bit-packed 64 symbols per word.
///
/// Symbol positions are 1-based in `symbol()` to line up with the usual
/// S[1]..S[m] notation; `operator[]` is the 0-based accessor. Bits past
/// `size()` in the last word are always zero, so equality and hashing can
/// work word-wise.
class BitString {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitString() = default;

    /// Parses ASCII '0'/'1'. Throws std::invalid_argument on any other byte.
    static BitString parse(std::string_view text);
    static BitString zeros(std::size_t count);
    static BitString ones(std::size_t count);
    static BitString repeat(bool bit, std::size_t count);
    /// Length-`length` string whose S[1] is the most significant of the low
    /// `length` bits of `value`. Used by exhaustive enumeration.
    static BitString from_uint(std::uint64_t value, std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool operator[](std::size_t index) const noexcept {
        return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
    }
    /// 1-based access, S[1]..S[m].
    [[nodiscard]] bool symbol(std::size_t position) const;
    [[nodiscard]] bool front() const { return symbol(1); }
    [[nodiscard]] bool back() const { return symbol(size_); }

    /// Substring of `length` symbols starting at 0-based `offset`.
    [[nodiscard]] BitString slice(std::size_t offset, std::size_t length) const;

    [[nodiscard]] BitString appended(bool bit) const;
    [[nodiscard]] BitString prepended(bool bit) const;
    [[nodiscard]] BitString concat(const BitString& tail) const;

    void push_back(bool bit);
    void append(const BitString& tail);

    /// Length of the maximal all-zero suffix / prefix.
    [[nodiscard]] std::size_t trailing_zeros() const noexcept;
    [[nodiscard]] std::size_t leading_zeros() const noexcept;
    [[nodiscard]] std::size_t count_ones() const noexcept;

    [[nodiscard]] bool starts_with(const BitString& head) const noexcept;
    [[nodiscard]] bool ends_with(const BitString& tail) const noexcept;
    /// True iff `needle` equals the `needle.size()` symbols at `offset`.
    [[nodiscard]] bool matches_at(const BitString& needle, std::size_t offset) const noexcept;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t hash() const noexcept;
    [[nodiscard]] const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const BitString& a, const BitString& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    // `count` bits starting at bit `offset`, count <= 64.
    [[nodiscard]] Word extract(std::size_t offset, std::size_t count) const noexcept;
    void set(std::size_t index, bool bit) noexcept;
    void resize(std::size_t new_size);

    std::vector<Word> words_;
    std::size_t size_ = 0;
};

// Structural operations. Lengths are symbol counts; all throw
// ContractViolation outside their stated domain.

BitString prefix(const BitString& s, std::size_t length);
BitString suffix(const BitString& s, std::size_t length);
/// S with its last symbol removed.
BitString parent(const BitString& s);
/// S with its last symbol complemented.
BitString sibling(const BitString& s);
/// S with its first symbol complemented.
BitString sibling_left(const BitString& s);
/// S with its first symbol removed.
BitString parent_left(const BitString& s);

/// True iff `needle` occurs contiguously in `haystack`; the empty needle
/// occurs everywhere. Word-at-a-time scan, no preprocessing.
bool contains(const BitString& haystack, const BitString& needle);

/// Longest run of zeros.
std::size_t max_zero_run(const BitString& s) noexcept;

inline BitString operator+(const BitString& a, const BitString& b) { return a.concat(b); }

}  // namespace strrecon

template <>
struct std::hash<strrecon::BitString> {
    std::size_t operator()(const strrecon::BitString& s) const noexcept { return s.hash(); }
};
