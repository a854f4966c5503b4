#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/suffix_automaton.hpp"

namespace strrecon {

struct QueryRecord {
    std::uint64_t index = 0;  // 1-based
    BitString query;
    bool answer = false;
    std::string phase;
};

struct OracleOptions {
    bool record_transcript = false;
    /// Enables the whitebox_* hooks. Off, they are no-ops.
    bool whitebox = false;
};

/// Raised by a white-box hook when an algorithm commits something that is
/// false about the hidden string. The message carries the transcript.
class WhiteboxViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Black box holding the hidden string. The only information channel is
/// `query`, and every call is counted against the current phase.
class Oracle {
public:
    static constexpr std::string_view kDefaultPhase = "default";

    explicit Oracle(BitString hidden, OracleOptions options = {});

    /// Yes iff `s` occurs in the hidden string. Counts one query whatever
    /// the argument, including the empty string and over-long strings.
    bool query(const BitString& s);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t total_queries() const noexcept { return total_; }

    void set_phase(std::string_view tag);
    [[nodiscard]] const std::string& phase() const noexcept { return phases_[current_].name; }
    [[nodiscard]] std::map<std::string, std::uint64_t> phase_counts() const;
    [[nodiscard]] std::uint64_t phase_count(std::string_view tag) const noexcept;

    [[nodiscard]] bool transcript_enabled() const noexcept { return options_.record_transcript; }
    [[nodiscard]] const std::vector<QueryRecord>& transcript() const noexcept { return transcript_; }
    [[nodiscard]] bool whitebox_enabled() const noexcept { return options_.whitebox; }

    // White-box hooks for tests. None of them count as queries.
    void whitebox_assert_substring(const BitString& s, std::string_view what = {});
    void whitebox_assert_nonsubstring(const BitString& s, std::string_view what = {});
    void whitebox_assert_prefix(const BitString& s, std::string_view what = {});
    void whitebox_assert_suffix(const BitString& s, std::string_view what = {});
    /// Uncounted membership peek for composite white-box checks. Throws
    /// std::logic_error when white-box mode is off.
    [[nodiscard]] bool whitebox_peek_substring(const BitString& s);
    [[nodiscard]] bool whitebox_peek_suffix(const BitString& s) const;
    /// Fails with the transcript attached when `condition` is false.
    void whitebox_require(bool condition, std::string_view what, const BitString& subject);

private:
    struct PhaseCounter {
        std::string name;
        std::uint64_t count = 0;
    };

    [[noreturn]] void whitebox_fail(std::string_view check, const BitString& s,
                                    std::string_view what) const;

    BitString hidden_;
    std::size_t n_;
    OracleOptions options_;
    CachedMatcher matcher_;
    std::uint64_t total_ = 0;
    std::vector<PhaseCounter> phases_;
    std::size_t current_ = 0;
    std::vector<QueryRecord> transcript_;
};

Oracle make_oracle(const BitString& hidden, OracleOptions options = {});

/// One JSON object per line with fields index, query, answer, phase.
void write_transcript_jsonl(std::ostream& out, const std::vector<QueryRecord>& transcript);
std::vector<QueryRecord> read_transcript_jsonl(std::istream& in);

}  // namespace strrecon
