#include "strrecon/bitstring.hpp"

#include <algorithm>
#include <bit>

namespace strrecon {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + BitString::kWordBits - 1) / BitString::kWordBits;
}

constexpr BitString::Word low_mask(std::size_t count) {
    return count >= BitString::kWordBits ? ~BitString::Word{0}
                                         : ((BitString::Word{1} << count) - 1);
}

}  // namespace

BitString BitString::parse(std::string_view text) {
    BitString out;
    out.resize(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::parse: invalid character at offset " +
                                        std::to_string(i));
        }
        out.set(i, c == '1');
    }
    return out;
}

BitString BitString::repeat(bool bit, std::size_t count) {
    BitString out;
    out.resize(count);
    if (bit) {
        std::fill(out.words_.begin(), out.words_.end(), ~Word{0});
        if (count % kWordBits != 0) {
            out.words_.back() &= low_mask(count % kWordBits);
        }
    }
    return out;
}

BitString BitString::zeros(std::size_t count) { return repeat(false, count); }
BitString BitString::ones(std::size_t count) { return repeat(true, count); }

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
    if (length > 64) {
        throw ContractViolation("BitString::from_uint: length exceeds 64");
    }
    BitString out;
    out.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.set(i, (value >> (length - 1 - i)) & 1U);
    }
    return out;
}

bool BitString::symbol(std::size_t position) const {
    if (position == 0 || position > size_) {
        throw ContractViolation("BitString::symbol: position out of range");
    }
    return (*this)[position - 1];
}

BitString::Word BitString::extract(std::size_t offset, std::size_t count) const noexcept {
    if (count == 0) {
        return 0;
    }
    const std::size_t w = offset / kWordBits;
    const std::size_t b = offset % kWordBits;
    Word value = words_[w] >> b;
    if (b != 0 && b + count > kWordBits && w + 1 < words_.size()) {
        value |= words_[w + 1] << (kWordBits - b);
    }
    return value & low_mask(count);
}

void BitString::set(std::size_t index, bool bit) noexcept {
    const Word mask = Word{1} << (index % kWordBits);
    if (bit) {
        words_[index / kWordBits] |= mask;
    } else {
        words_[index / kWordBits] &= ~mask;
    }
}

void BitString::resize(std::size_t new_size) {
    words_.resize(words_for(new_size), 0);
    if (new_size < size_ && new_size % kWordBits != 0) {
        words_.back() &= low_mask(new_size % kWordBits);
    }
    size_ = new_size;
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
    if (offset > size_ || length > size_ - offset) {
        throw ContractViolation("BitString::slice: range out of bounds");
    }
    BitString out;
    out.resize(length);
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        const std::size_t start = w * kWordBits;
        out.words_[w] = extract(offset + start, std::min(kWordBits, length - start));
    }
    return out;
}

void BitString::push_back(bool bit) {
    resize(size_ + 1);
    set(size_ - 1, bit);
}

void BitString::append(const BitString& tail) {
    const std::size_t old = size_;
    resize(size_ + tail.size_);
    const std::size_t b = old % kWordBits;
    const std::size_t base = old / kWordBits;
    for (std::size_t w = 0; w < tail.words_.size(); ++w) {
        const Word v = tail.words_[w];
        words_[base + w] |= v << b;
        if (b != 0 && base + w + 1 < words_.size()) {
            words_[base + w + 1] |= v >> (kWordBits - b);
        }
    }
}

BitString BitString::appended(bool bit) const {
    BitString out = *this;
    out.push_back(bit);
    return out;
}

BitString BitString::prepended(bool bit) const {
    BitString out;
    out.resize(size_ + 1);
    Word carry = bit ? 1 : 0;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        const Word v = w < words_.size() ? words_[w] : 0;
        out.words_[w] = (v << 1) | carry;
        carry = v >> (kWordBits - 1);
    }
    return out;
}

BitString BitString::concat(const BitString& tail) const {
    BitString out = *this;
    out.append(tail);
    return out;
}

std::size_t BitString::trailing_zeros() const noexcept {
    std::size_t count = 0;
    std::size_t remaining = size_;
    for (std::size_t w = words_.size(); w-- > 0;) {
        const std::size_t valid = remaining - w * kWordBits;
        const Word v = words_[w] << (kWordBits - valid);  // top-align valid bits
        if (v != 0) {
            return count + static_cast<std::size_t>(std::countl_zero(v));
        }
        count += valid;
        remaining = w * kWordBits;
    }
    return count;
}

std::size_t BitString::leading_zeros() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return size_;
}

std::size_t BitString::count_ones() const noexcept {
    std::size_t total = 0;
    for (const Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitString::matches_at(const BitString& needle, std::size_t offset) const noexcept {
    if (offset > size_ || needle.size_ > size_ - offset) {
        return false;
    }
    for (std::size_t w = 0; w < needle.words_.size(); ++w) {
        const std::size_t start = w * kWordBits;
        if (extract(offset + start, std::min(kWordBits, needle.size_ - start)) != needle.words_[w]) {
            return false;
        }
    }
    return true;
}

bool BitString::starts_with(const BitString& head) const noexcept { return matches_at(head, 0); }

bool BitString::ends_with(const BitString& tail) const noexcept {
    return tail.size_ <= size_ && matches_at(tail, size_ - tail.size_);
}

std::string BitString::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::size_t BitString::hash() const noexcept {
    // splitmix64 finaliser folded over the words
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = mix(size_);
    for (const Word w : words_) {
        h = mix(h ^ w);
    }
    return static_cast<std::size_t>(h);
}

BitString prefix(const BitString& s, std::size_t length) {
    if (length > s.size()) {
        throw ContractViolation("prefix: length exceeds string");
    }
    return s.slice(0, length);
}

BitString suffix(const BitString& s, std::size_t length) {
    if (length > s.size()) {
        throw ContractViolation("suffix: length exceeds string");
    }
    return s.slice(s.size() - length, length);
}

BitString parent(const BitString& s) {
    if (s.empty()) {
        throw ContractViolation("parent: empty string");
    }
    return s.slice(0, s.size() - 1);
}

BitString sibling(const BitString& s) {
    if (s.empty()) {
        throw ContractViolation("sibling: empty string");
    }
    return parent(s).appended(!s.back());
}

BitString sibling_left(const BitString& s) {
    if (s.empty()) {
        throw ContractViolation("sibling_left: empty string");
    }
    return parent_left(s).prepended(!s.front());
}

BitString parent_left(const BitString& s) {
    if (s.empty()) {
        throw ContractViolation("parent_left: empty string");
    }
    return s.slice(1, s.size() - 1);
}

bool contains(const BitString& haystack, const BitString& needle) {
    if (needle.size() > haystack.size()) {
        return false;
    }
    for (std::size_t offset = 0; offset + needle.size() <= haystack.size(); ++offset) {
        if (haystack.matches_at(needle, offset)) {
            return true;
        }
    }
    return false;
}

std::size_t max_zero_run(const BitString& s) noexcept {
    std::size_t best = 0;
    std::size_t run = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        run = s[i] ? 0 : run + 1;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace strrecon
