#include "strrecon/oracle.hpp"

#include <sstream>

#include <json.hpp>

namespace strrecon {

Oracle::Oracle(BitString hidden, OracleOptions options)
    : hidden_(std::move(hidden)),
      n_(hidden_.size()),
      options_(options),
      matcher_(hidden_),
      phases_{PhaseCounter{std::string(kDefaultPhase), 0}} {
    if (n_ == 0) {
        throw std::invalid_argument("Oracle: hidden string must be non-empty");
    }
}

Oracle make_oracle(const BitString& hidden, OracleOptions options) {
    return Oracle(hidden, options);
}

bool Oracle::query(const BitString& s) {
    const bool answer = matcher_.contains(s);
    ++total_;
    ++phases_[current_].count;
    if (options_.record_transcript) {
        transcript_.push_back(QueryRecord{total_, s, answer, phases_[current_].name});
    }
    return answer;
}

void Oracle::set_phase(std::string_view tag) {
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        if (phases_[i].name == tag) {
            current_ = i;
            return;
        }
    }
    phases_.push_back(PhaseCounter{std::string(tag), 0});
    current_ = phases_.size() - 1;
}

std::map<std::string, std::uint64_t> Oracle::phase_counts() const {
    std::map<std::string, std::uint64_t> out;
    for (const auto& p : phases_) {
        if (p.count != 0) {
            out[p.name] = p.count;
        }
    }
    return out;
}

std::uint64_t Oracle::phase_count(std::string_view tag) const noexcept {
    for (const auto& p : phases_) {
        if (p.name == tag) {
            return p.count;
        }
    }
    return 0;
}

void Oracle::whitebox_fail(std::string_view check, const BitString& s, std::string_view what) const {
    std::ostringstream msg;
    msg << "white-box check failed: " << check << " for '" << s.to_string() << "'";
    if (!what.empty()) {
        msg << " (" << what << ")";
    }
    msg << "; hidden='" << hidden_.to_string() << "' after " << total_ << " queries";
    if (options_.record_transcript) {
        msg << "\ntranscript:\n";
        write_transcript_jsonl(msg, transcript_);
    }
    throw WhiteboxViolation(msg.str());
}

void Oracle::whitebox_assert_substring(const BitString& s, std::string_view what) {
    if (options_.whitebox && !matcher_.contains(s)) {
        whitebox_fail("substring", s, what);
    }
}

void Oracle::whitebox_assert_nonsubstring(const BitString& s, std::string_view what) {
    if (options_.whitebox && matcher_.contains(s)) {
        whitebox_fail("nonsubstring", s, what);
    }
}

void Oracle::whitebox_assert_prefix(const BitString& s, std::string_view what) {
    if (options_.whitebox && !hidden_.starts_with(s)) {
        whitebox_fail("prefix", s, what);
    }
}

void Oracle::whitebox_assert_suffix(const BitString& s, std::string_view what) {
    if (options_.whitebox && !hidden_.ends_with(s)) {
        whitebox_fail("suffix", s, what);
    }
}

bool Oracle::whitebox_peek_substring(const BitString& s) {
    if (!options_.whitebox) {
        throw std::logic_error("whitebox_peek_substring: white-box mode is off");
    }
    return matcher_.contains(s);
}

bool Oracle::whitebox_peek_suffix(const BitString& s) const {
    if (!options_.whitebox) {
        throw std::logic_error("whitebox_peek_suffix: white-box mode is off");
    }
    return hidden_.ends_with(s);
}

void Oracle::whitebox_require(bool condition, std::string_view what, const BitString& subject) {
    if (options_.whitebox && !condition) {
        whitebox_fail("invariant", subject, what);
    }
}

void write_transcript_jsonl(std::ostream& out, const std::vector<QueryRecord>& transcript) {
    for (const auto& r : transcript) {
        nlohmann::ordered_json row;
        row["index"] = r.index;
        row["query"] = r.query.to_string();
        row["answer"] = r.answer;
        row["phase"] = r.phase;
        out << row.dump() << '\n';
    }
}

std::vector<QueryRecord> read_transcript_jsonl(std::istream& in) {
    std::vector<QueryRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto row = nlohmann::json::parse(line);
        out.push_back(QueryRecord{row.at("index").get<std::uint64_t>(),
                                  BitString::parse(row.at("query").get<std::string>()),
                                  row.at("answer").get<bool>(), row.at("phase").get<std::string>()});
    }
    return out;
}

}  // namespace strrecon
