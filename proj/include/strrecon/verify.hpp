#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strrecon/bitstring.hpp"
#include "strrecon/oracle.hpp"

namespace strrecon {

/// Every length-n string still consistent with a sequence of answers.
/// Kept as a bitset over all 2^n strings up to n = 20; above that only the
/// answer list is kept and membership is checked against it.
class CandidateSet {
public:
    static constexpr std::size_t kMaterializeLimit = 20;

    explicit CandidateSet(std::size_t n);

    /// Drops every member whose substring relation to `query` differs from
    /// `answer`.
    void filter(const BitString& query, bool answer);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] bool materialized() const noexcept { return n_ <= kMaterializeLimit; }
    /// Member count; only for materialized sets.
    [[nodiscard]] std::uint64_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] bool contains(const BitString& s) const;
    [[nodiscard]] std::vector<BitString> members() const;
    [[nodiscard]] std::optional<BitString> singleton() const;

private:
    std::size_t n_;
    std::vector<std::uint64_t> bits_;
    std::uint64_t count_ = 0;
    std::vector<std::pair<BitString, bool>> answers_;
};

CandidateSet filter(CandidateSet cs, const BitString& query, bool answer);

struct Verdict {
    bool ok = true;
    /// 'a': a recorded answer is wrong; 'b': result differs from the hidden
    /// string; 'c': the result is not among the final candidates; 'i': fewer
    /// queries than the information bound allows.
    char failed_clause = 0;
    std::optional<QueryRecord> offending;
    std::string message;

    bool candidates_checked = false;
    std::uint64_t final_candidates = 0;
    bool forced = false;  // final candidate set is a singleton
    double information_bits = 0.0;  // log2(initial / final)
};

Verdict check_run(const std::vector<QueryRecord>& transcript, const BitString& result,
                  const BitString& hidden);

}  // namespace strrecon
