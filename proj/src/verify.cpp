#include "strrecon/verify.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace strrecon {

namespace {

std::uint64_t as_uint(const BitString& s) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        v = (v << 1) | (s[i] ? 1U : 0U);
    }
    return v;
}

bool occurs_in(std::uint64_t member, std::size_t n, std::uint64_t pattern, std::size_t m) {
    if (m == 0) {
        return true;
    }
    if (m > n) {
        return false;
    }
    const std::uint64_t mask = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    for (std::size_t shift = 0; shift + m <= n; ++shift) {
        if (((member >> shift) & mask) == pattern) {
            return true;
        }
    }
    return false;
}

}  // namespace

CandidateSet::CandidateSet(std::size_t n) : n_(n) {
    if (n == 0) {
        throw std::invalid_argument("CandidateSet: n must be positive");
    }
    if (materialized()) {
        const std::uint64_t total = std::uint64_t{1} << n;
        bits_.assign((total + 63) / 64, ~std::uint64_t{0});
        if (total % 64 != 0) {
            bits_.back() = (std::uint64_t{1} << (total % 64)) - 1;
        }
        count_ = total;
    }
}

void CandidateSet::filter(const BitString& query, bool answer) {
    answers_.emplace_back(query, answer);
    if (!materialized()) {
        return;
    }
    const std::uint64_t pattern = query.size() <= n_ ? as_uint(query) : 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            const std::uint64_t member = w * 64 + static_cast<std::uint64_t>(bit);
            if (occurs_in(member, n_, pattern, query.size()) != answer) {
                bits_[w] &= ~(std::uint64_t{1} << bit);
                --count_;
            }
        }
    }
}

std::uint64_t CandidateSet::size() const {
    if (!materialized()) {
        throw std::logic_error("CandidateSet::size: set is not materialized");
    }
    return count_;
}

bool CandidateSet::contains(const BitString& s) const {
    if (s.size() != n_) {
        return false;
    }
    if (materialized()) {
        const std::uint64_t v = as_uint(s);
        return ((bits_[v / 64] >> (v % 64)) & 1U) != 0;
    }
    for (const auto& [query, answer] : answers_) {
        if (strrecon::contains(s, query) != answer) {
            return false;
        }
    }
    return true;
}

std::vector<BitString> CandidateSet::members() const {
    if (!materialized()) {
        throw std::logic_error("CandidateSet::members: set is not materialized");
    }
    std::vector<BitString> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            out.push_back(BitString::from_uint(w * 64 + static_cast<std::uint64_t>(bit), n_));
        }
    }
    return out;
}

std::optional<BitString> CandidateSet::singleton() const {
    if (!materialized() || count_ != 1) {
        return std::nullopt;
    }
    return members().front();
}

CandidateSet filter(CandidateSet cs, const BitString& query, bool answer) {
    cs.filter(query, answer);
    return cs;
}

Verdict check_run(const std::vector<QueryRecord>& transcript, const BitString& result,
                  const BitString& hidden) {
    Verdict v;
    auto fail = [&](char clause, std::string message) {
        if (v.ok) {
            v.ok = false;
            v.failed_clause = clause;
            v.message = std::move(message);
        }
    };

    for (const auto& record : transcript) {
        if (contains(hidden, record.query) != record.answer) {
            v.offending = record;
            std::ostringstream msg;
            msg << "answer to query #" << record.index << " '" << record.query.to_string() << "' is wrong";
            fail('a', msg.str());
            break;
        }
    }
    if (result != hidden) {
        fail('b', "result '" + result.to_string() + "' differs from hidden '" + hidden.to_string() + "'");
    }

    if (hidden.size() <= CandidateSet::kMaterializeLimit) {
        CandidateSet cs(hidden.size());
        for (const auto& record : transcript) {
            cs.filter(record.query, record.answer);
        }
        v.candidates_checked = true;
        v.final_candidates = cs.size();
        v.forced = v.final_candidates == 1;
        if (!cs.contains(result)) {
            fail('c', "result '" + result.to_string() + "' is not consistent with the answers");
        }
        if (v.final_candidates > 0) {
            v.information_bits = static_cast<double>(hidden.size()) -
                                 std::log2(static_cast<double>(v.final_candidates));
            if (static_cast<double>(transcript.size()) + 1e-9 < v.information_bits) {
                fail('i', "fewer queries than bits of information gained");
            }
        }
    }
    return v;
}

}  // namespace strrecon
