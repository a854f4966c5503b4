#include "strrecon/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "strrecon/average.hpp"
#include "strrecon/basic.hpp"
#include "strrecon/label_db.hpp"
#include "strrecon/suffix_automaton.hpp"

namespace strrecon {

namespace {

constexpr std::string_view kPhaseEasy = "easycase";
constexpr std::string_view kPhaseSeed = "seed";
constexpr std::string_view kPhaseMain = "mainloop";
constexpr std::string_view kPhaseSampling = "sampling";
constexpr std::string_view kPhaseSecond = "second_seed";
constexpr std::string_view kPhaseException = "exception";
constexpr std::string_view kPhaseFinish = "finish";

BitString pad_to_sentinel(BitString s, std::size_t d) {
    while (s.trailing_zeros() < d + 1) {
        s.push_back(false);
    }
    return s;
}

}  // namespace

void Params::set_seed(std::size_t seed_length, std::size_t seed_cost) {
    d = seed_length;
    d1 = seed_cost;
    ell = d + 2 * d1;
    if (r0_override) {
        r0 = *r0_override;
    } else {
        const double raw = q == 0 ? 1.0 : static_cast<double>(d1) / (2.0 * static_cast<double>(q));
        r0 = std::clamp(raw, 0x1.0p-53, 1.0);
    }
}

Params derive_params(std::size_t n, double delta, const ParamOverrides& overrides) {
    if (!(delta > 0.0 && delta <= 1.0)) {
        throw std::invalid_argument("derive_params: delta must lie in (0, 1]");
    }
    if (overrides.r0 && !(*overrides.r0 > 0.0 && *overrides.r0 <= 1.0)) {
        throw std::invalid_argument("derive_params: r0 must lie in (0, 1]");
    }
    if (overrides.c1 && *overrides.c1 == 0) {
        // Probes of length floor(log2 n) might all occur; the loop needs 2^|X| > n.
        throw std::invalid_argument("derive_params: C1 must be at least 1");
    }
    Params p;
    p.n = n;
    p.delta = delta;
    const auto c2 = static_cast<std::uint64_t>(std::ceil(8192.0 * std::log(3.0 / delta)));
    p.c2 = overrides.c2.value_or(c2);
    p.c1 = overrides.c1.value_or((p.c2 + 1) / 2);
    if (overrides.q) {
        p.q = *overrides.q;
    } else if (overrides.q_fraction) {
        p.q = static_cast<std::size_t>(std::ceil(*overrides.q_fraction * static_cast<double>(n)));
    } else {
        p.q = (n + 99) / 100;
    }
    p.q = std::max<std::size_t>(p.q, 1);
    p.r0_override = overrides.r0;
    p.guarantee_void = p.c1 < Params::kGuaranteeC1 || p.c2 < Params::kGuaranteeC2;
    return p;
}

RunSearch bs_run_search(Oracle& oracle, std::size_t lo, std::size_t hi) {
    if (lo >= hi) {
        throw ContractViolation("bs_run_search: need lo < hi");
    }
    RunSearch out;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        ++out.queries;
        if (oracle.query(BitString::zeros(mid))) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.d = lo;
    return out;
}

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::EasyCase: return "EasyCase";
        case Branch::Exception: return "Exception";
        case Branch::SecondSeed: return "SecondSeed";
        case Branch::BasicFinish: return "BasicFinish";
        case Branch::Fallback: return "Fallback";
    }
    return "?";
}

std::string_view to_string(SecondSeedExit e) {
    switch (e) {
        case SecondSeedExit::None: return "None";
        case SecondSeedExit::LeftHit: return "LeftHit";
        case SecondSeedExit::DisjointFill: return "DisjointFill";
        case SecondSeedExit::QueryRepair: return "QueryRepair";
        case SecondSeedExit::Overlap: return "Overlap";
        case SecondSeedExit::ScanFallthrough: return "ScanFallthrough";
    }
    return "?";
}

std::string_view to_string(EasyKind k) {
    switch (k) {
        case EasyKind::None: return "None";
        case EasyKind::RandomProbe: return "RandomProbe";
        case EasyKind::CheapSeed: return "CheapSeed";
        case EasyKind::OnesRun: return "OnesRun";
        case EasyKind::AllOnes: return "AllOnes";
    }
    return "?";
}

EasyResult try_easycase(Oracle& oracle, std::size_t n, const Params& params, Rng& rng) {
    const std::size_t log_n = floor_log2(n);
    if (params.c1 >= log_n) {
        throw ContractViolation("try_easycase: floor(log2 n) - C1 must be at least 1");
    }
    const std::size_t base = log_n - params.c1;
    const std::uint64_t start = oracle.total_queries();

    oracle.set_phase(kPhaseEasy);
    if (oracle.query(BitString::zeros(base))) {
        EasyDone done;
        done.kind = EasyKind::RandomProbe;
        BitString x;
        do {
            x = BitString();
            for (std::size_t i = 0; i < log_n + params.c1; ++i) {
                x.push_back(rng.coin());
            }
            ++done.probes;
        } while (oracle.query(x));
        oracle.set_phase(kPhaseFinish);
        done.result = basic(oracle, BitString::zeros(base), x, n);
        return done;
    }

    oracle.set_phase(kPhaseSeed);
    const std::size_t half = log_n / 2;
    std::size_t lo = 0;
    std::size_t hi = base;
    if (half > 0 && oracle.query(BitString::zeros(half))) {
        // 0^base is absent and 0^half present: step down from base.
        for (std::size_t step = 1;; step *= 2) {
            if (step >= base || base - step <= half) {
                lo = half;
                break;
            }
            const std::size_t c = base - step;
            if (oracle.query(BitString::zeros(c))) {
                lo = c;
                break;
            }
            hi = c;
        }
    } else {
        if (half > 0) {
            hi = half;
        }
        // Step up through 1, 2, 4, ... below the known absent length.
        for (std::size_t c = 1; c < hi; c *= 2) {
            if (!oracle.query(BitString::zeros(c))) {
                hi = c;
                break;
            }
            lo = c;
        }
    }
    const std::size_t d = bs_run_search(oracle, lo, hi).d;
    const auto d1 = static_cast<std::size_t>(oracle.total_queries() - start);

    if (d == 0) {
        oracle.set_phase(kPhaseFinish);
        return EasyDone{basic(oracle, BitString(), BitString::zeros(1), n), EasyKind::AllOnes, 0};
    }
    if (d1 <= params.c2) {
        oracle.set_phase(kPhaseFinish);
        return EasyDone{basic(oracle, BitString::zeros(d), BitString::zeros(d + 1), n),
                        EasyKind::CheapSeed, 0};
    }
    oracle.set_phase(kPhaseEasy);
    const BitString ones = BitString::ones(d + 2 * d1);
    if (oracle.query(ones)) {
        oracle.set_phase(kPhaseFinish);
        return EasyDone{basic(oracle, ones, BitString::zeros(d + 1), n), EasyKind::OnesRun, 0};
    }
    return EasySeed{d, d1};
}


namespace {

struct Extended {
    BitString text;
    std::size_t confirmed = 0;  // length of the prefix known to occur
};

Extended two_extension_impl(Oracle& oracle, const BitString& working, std::size_t confirmed, bool next,
                            std::size_t d, Rng& rng) {
    const bool s = rng.coin();
    const BitString with_t = working.appended(next);
    BitString probe = with_t.appended(s);
    if (oracle.query(probe)) {
        return {probe, probe.size()};
    }
    probe = with_t.appended(!s);
    if (oracle.query(probe)) {
        return {probe, probe.size()};
    }
    if (oracle.query(with_t)) {
        return {pad_to_sentinel(with_t, d), with_t.size()};
    }
    return {pad_to_sentinel(working, d), confirmed};
}

}  // namespace

BitString two_extension(Oracle& oracle, const BitString& working, bool next, std::size_t d, Rng& rng) {
    return two_extension_impl(oracle, working, working.size(), next, d, rng).text;
}

BitString two_extension_left(const BitString& working, bool previous) {
    return working.prepended(previous);
}

namespace {

struct SecondSeedReport {
    SecondSeedExit exit = SecondSeedExit::None;
    bool overlap_beyond_scan = false;
};

// `anchor` is the part of the first seed's extension after its leading
// 0^d·1; reaching 0^d·1·anchor from the left means S ran into it.
BitString second_seed_impl(Oracle& oracle, BitString working, BitString s, const BitString& anchor,
                           std::size_t d, std::size_t n, SecondSeedReport& report) {
    oracle.set_phase(kPhaseSecond);
    const std::size_t k = s.size();

    for (;;) {
        s = extend_right(oracle, s);
        const std::size_t tz = s.trailing_zeros();
        if (tz > d) {
            // S already ended in 0^d before this step: it ran off the right end.
            s = find_right_end(oracle, s, BitString::zeros(tz));
            break;
        }
        if (tz < d) {
            continue;
        }
        if (anchor.empty()) {
            const BitString one = s.appended(true);
            if (oracle.query(one)) {
                s = one;
                continue;
            }
            s = find_right_end(oracle, s, BitString::zeros(d));
            break;
        }
        const BitString with_one = s.appended(true);
        const BitString hit = with_one.appended(anchor.front());
        if (oracle.query(hit)) {
            const BitString joined = with_one.concat(anchor);
            if (oracle.query(joined)) {
                report.exit = SecondSeedExit::LeftHit;
                oracle.set_phase(kPhaseFinish);
                return basic(oracle, joined, BitString::zeros(d + 1), n);
            }
            s = hit;
            continue;
        }
        const BitString miss = with_one.appended(!anchor.front());
        if (!oracle.query(miss)) {
            if (oracle.query(with_one)) {
                s = with_one;
            } else {
                s = find_right_end(oracle, s, BitString::zeros(d));
            }
            break;
        }
        s = miss;
    }
    oracle.whitebox_assert_suffix(s, "second seed: right end");

    while (working.size() + s.size() <= n) {
        working = extend_left(oracle, working);
        if (working.leading_zeros() >= d + 1) {
            const BitString head = find_left_end(oracle, working, d);
            oracle.whitebox_assert_prefix(head, "second seed: left end");
            report.exit = SecondSeedExit::DisjointFill;
            oracle.set_phase(kPhaseFinish);
            return fill(oracle, head, s, n);
        }
    }
    if (!oracle.query(working)) {
        const BitString head = find_left_end(oracle, working, d);
        oracle.whitebox_assert_prefix(head, "second seed: repaired left end");
        report.exit = SecondSeedExit::QueryRepair;
        oracle.set_phase(kPhaseFinish);
        return fill(oracle, head, s, n);
    }
    for (std::size_t j = std::min({k, working.size(), s.size()}); j >= 1; --j) {
        if (suffix(working, j) == prefix(s, j)) {
            const BitString joined = working.concat(suffix(s, s.size() - j));
            if (oracle.query(joined)) {
                report.exit = SecondSeedExit::Overlap;
                oracle.set_phase(kPhaseFinish);
                return fill(oracle, BitString(), joined, n);
            }
        }
    }
    for (std::size_t j = k + 1; j <= std::min(working.size(), s.size()); ++j) {
        if (suffix(working, j) == prefix(s, j)) {
            report.overlap_beyond_scan = true;
            break;
        }
    }
    report.exit = SecondSeedExit::ScanFallthrough;
    oracle.set_phase(kPhaseFinish);
    return fill(oracle, BitString(), s, n);
}

}  // namespace

BitString second_seed(Oracle& oracle, const BitString& working, const BitString& seed2,
                      std::size_t d, std::size_t n) {
    const BitString anchor = working.size() > d + 1 ? suffix(working, working.size() - d - 1) : BitString();
    SecondSeedReport report;
    return second_seed_impl(oracle, working, seed2, anchor, d, n, report);
}

namespace {

struct RunStats {
    std::uint64_t rounds = 0;
    std::uint64_t samples = 0;
    std::uint64_t labels = 0;
    std::uint64_t free_extensions = 0;
    SecondSeedReport second;
};

BitString reversed(const BitString& s) {
    BitString out;
    for (std::size_t i = s.size(); i-- > 0;) {
        out.push_back(s[i]);
    }
    return out;
}

BitString exception_impl(Oracle& oracle, const BitString& working, const Params& params, Rng& rng,
                         RunStats& stats) {
    const std::size_t d = params.d;
    const std::size_t n = params.n;
    oracle.set_phase(kPhaseException);

    BitString current = find_right_end(oracle, working, BitString::zeros(d + 1));
    oracle.whitebox_assert_suffix(current, "exception: right end");
    const BitString anchor = current.size() > d + 1 ? suffix(current, current.size() - d - 1) : BitString();
    const std::size_t k = current.size();

    // The string grows leftward; index its reversal so prefixes of
    // `current` are suffixes of the indexed text.
    GrowingIndex index(reversed(current));
    LabelDB labels(LabelDB::Anchor::Start);
    auto sync = [&] {
        while (index.size() < current.size()) {
            index.push_back(current[current.size() - 1 - index.size()]);
        }
    };

    while (current.size() < params.q + k && current.size() < n) {
        ++stats.rounds;
        if (rng.uniform01() < params.r0) {
            ++stats.samples;
            if (current.size() >= params.ell) {
                const std::size_t m = index.shortest_absent_sibling_suffix(params.ell);
                const BitString head = prefix(current, m);
                const BitString other = sibling_left(head);
                oracle.set_phase(kPhaseSampling);
                if (!oracle.query(other)) {
                    oracle.whitebox_assert_nonsubstring(other, "exception: single-child sample");
                    if (labels.insert(parent_left(head), current.front())) {
                        ++stats.labels;
                    }
                } else {
                    return second_seed_impl(oracle, current, other, anchor, d, n, stats.second);
                }
                oracle.set_phase(kPhaseException);
            }
        }
        if (auto hit = labels.first_match(current, std::max<std::size_t>(1, params.ell - 1))) {
            current = two_extension_left(current, hit->symbol);
            ++stats.free_extensions;
            oracle.whitebox_assert_suffix(current, "exception: label extension");
        }
        if (current.size() < n) {
            current = extend_left(oracle, current);
            oracle.whitebox_assert_suffix(current, "exception: left extension");
        }
        sync();
    }
    oracle.set_phase(kPhaseFinish);
    return fill(oracle, BitString(), current, n);
}

}  // namespace

BitString exception(Oracle& oracle, const BitString& working, const Params& params, Rng& rng) {
    RunStats stats;
    return exception_impl(oracle, working, params, rng, stats);
}

Outcome double_seed(Oracle& oracle, std::size_t n, Params params, Rng& rng) {
    if (n != oracle.n()) {
        throw ContractViolation("double_seed: n does not match the oracle");
    }
    params.n = n;
    params.rng_seed = rng.seed();
    const std::uint64_t start = oracle.total_queries();
    const auto before = oracle.phase_counts();

    Outcome out;
    RunStats stats;
    auto finish = [&](BitString result, Branch branch) {
        out.result = std::move(result);
        out.branch = branch;
        out.params = params;
        out.queries = oracle.total_queries() - start;
        for (const auto& [phase, count] : oracle.phase_counts()) {
            const auto it = before.find(phase);
            const std::uint64_t spent = count - (it == before.end() ? 0 : it->second);
            if (spent != 0) {
                out.queries_by_phase[phase == "basic" ? std::string(kPhaseFinish) : phase] += spent;
            }
        }
        out.rounds = stats.rounds;
        out.samples = stats.samples;
        out.labels = stats.labels;
        out.free_extensions = stats.free_extensions;
        out.second_seed_exit = stats.second.exit;
        out.overlap_beyond_scan = stats.second.overlap_beyond_scan;
        return out;
    };

    if (params.c1 >= floor_log2(n)) {
        AverageRun run = reconstruct_average_run(oracle, n);
        params.set_seed(run.d, static_cast<std::size_t>(run.seed_queries));
        return finish(std::move(run.result), Branch::Fallback);
    }

    EasyResult easy = try_easycase(oracle, n, params, rng);
    if (auto* done = std::get_if<EasyDone>(&easy)) {
        out.easy_kind = done->kind;
        return finish(std::move(done->result), Branch::EasyCase);
    }
    const auto seed = std::get<EasySeed>(easy);
    params.set_seed(seed.d, seed.d1);
    const std::size_t d = params.d;

    if (params.q < params.ell + 2) {
        oracle.set_phase(kPhaseFinish);
        return finish(basic(oracle, BitString::zeros(d), BitString::zeros(d + 1), n), Branch::Fallback);
    }

    // Everything past `confirmed` is zeros appended on a no answer.
    BitString current = BitString::zeros(d);
    std::size_t confirmed = d;
    GrowingIndex index(current);
    LabelDB labels(LabelDB::Anchor::End);
    const std::size_t label_min = std::max<std::size_t>(1, params.ell - 1);

    for (;;) {
        if (current.trailing_zeros() >= d + 1) {
            return finish(exception_impl(oracle, current, params, rng, stats), Branch::Exception);
        }
        if (current.size() >= params.q) {
            break;
        }
        oracle.set_phase(kPhaseMain);
        ++stats.rounds;
        if (rng.uniform01() < params.r0) {
            ++stats.samples;
            if (current.size() >= params.ell) {
                const std::size_t m = index.shortest_absent_sibling_suffix(params.ell);
                const BitString tail = suffix(current, m);
                const BitString other = sibling(tail);
                oracle.set_phase(kPhaseSampling);
                const bool double_child = oracle.query(other);
                oracle.set_phase(kPhaseMain);
                if (!double_child) {
                    oracle.whitebox_assert_nonsubstring(other, "main loop: single-child sample");
                    if (labels.insert(parent(tail), current.back())) {
                        ++stats.labels;
                    }
                } else {
                    if (confirmed < current.size()) {
                        if (!oracle.query(current)) {
                            current = pad_to_sentinel(current, d);
                            continue;
                        }
                        confirmed = current.size();
                    }
                    oracle.whitebox_assert_substring(current, "main loop: first seed at second seed");
                    return finish(second_seed_impl(oracle, current, other, suffix(current, current.size() - d - 1),
                                                   d, n, stats.second),
                                  Branch::SecondSeed);
                }
            }
        }
        if (auto hit = labels.first_match(current, label_min)) {
            Extended next = two_extension_impl(oracle, current, confirmed, hit->symbol, d, rng);
            current = std::move(next.text);
            confirmed = next.confirmed;
            ++stats.free_extensions;
        } else {
            current = extend_right(oracle, current);
            if (current.back()) {
                confirmed = current.size();
            }
        }
        oracle.whitebox_assert_substring(prefix(current, confirmed), "main loop: confirmed part");
        while (index.size() < current.size()) {
            index.push_back(current[index.size()]);
        }
    }

    oracle.set_phase(kPhaseFinish);
    const std::size_t unconfirmed = current.size() - confirmed;
    return finish(basic_resume(oracle, prefix(current, confirmed), BitString::zeros(d + 1), n, unconfirmed + 1),
                  Branch::BasicFinish);
}

std::string to_json(const Outcome& outcome) {
    nlohmann::ordered_json j;
    j["result"] = outcome.result.to_string();
    j["branch"] = to_string(outcome.branch);
    j["queries_total"] = outcome.queries;
    nlohmann::ordered_json phases;
    for (std::string_view tag : {kPhaseSeed, kPhaseEasy, kPhaseMain, kPhaseSampling, kPhaseSecond,
                                 kPhaseException, kPhaseFinish}) {
        const auto it = outcome.queries_by_phase.find(std::string(tag));
        phases[std::string(tag)] = it == outcome.queries_by_phase.end() ? 0 : it->second;
    }
    j["queries_by_phase"] = phases;
    const Params& p = outcome.params;
    j["params"] = {{"n", p.n},   {"delta", p.delta}, {"C1", p.c1},   {"C2", p.c2},
                   {"q", p.q},   {"d", p.d},         {"d1", p.d1},   {"ell", p.ell},
                   {"r0", p.r0}, {"guarantee_void", p.guarantee_void}};
    j["rng_seed"] = p.rng_seed;
    j["easy_kind"] = to_string(outcome.easy_kind);
    j["second_seed_exit"] = to_string(outcome.second_seed_exit);
    return j.dump();
}

}  // namespace strrecon
