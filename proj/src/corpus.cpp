#include "strrecon/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "strrecon/average.hpp"

namespace strrecon {

namespace {

std::size_t parse_count(const std::string& text, const std::string& whole) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad family parameter in '" + whole + "'");
    }
    return static_cast<std::size_t>(std::stoull(text));
}

// Random string whose zero runs are all shorter than `cap` (cap >= 1).
BitString capped_random(std::size_t n, std::size_t cap, Rng& rng) {
    BitString s;
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool bit = rng.coin();
        if (!bit && run + 1 >= cap) {
            bit = true;
        }
        run = bit ? 0 : run + 1;
        s.push_back(bit);
    }
    return s;
}

// Overwrites s with 1·0^d·1 (clipped at the ends) so the zero run occupies
// positions [start, start + d).
BitString plant_run(const BitString& s, std::size_t start, std::size_t d) {
    BitString out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool bit = s[i];
        if (i >= start && i < start + d) {
            bit = false;
        } else if (i + 1 == start || i == start + d) {
            bit = true;
        }
        out.push_back(bit);
    }
    return out;
}

}  // namespace

Family Family::parse(const std::string& text) {
    Family f;
    const auto open = text.find('(');
    const std::string name = text.substr(0, open);
    std::vector<std::string> args;
    if (open != std::string::npos) {
        if (text.back() != ')') {
            throw std::invalid_argument("unterminated family parameters in '" + text + "'");
        }
        std::string inner = text.substr(open + 1, text.size() - open - 2);
        std::size_t pos = 0;
        for (;;) {
            const auto comma = inner.find(',', pos);
            args.push_back(inner.substr(pos, comma - pos));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    auto expect_args = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw std::invalid_argument("wrong number of parameters in '" + text + "'");
        }
    };

    if (name == "random" || name == "allzero" || name == "allone") {
        expect_args(0, 0);
        f.kind = name == "random" ? Kind::Random : name == "allzero" ? Kind::AllZero : Kind::AllOne;
    } else if (name == "periodic") {
        expect_args(1, 2);
        f.kind = Kind::Periodic;
        f.pattern = BitString::parse(args[0]);
        if (f.pattern.empty()) {
            throw std::invalid_argument("periodic family needs a non-empty block");
        }
        f.value = args.size() == 2 ? parse_count(args[1], text) : 0;
    } else if (name == "debruijn" || name == "runlength" || name == "nearend") {
        expect_args(1, 1);
        f.kind = name == "debruijn" ? Kind::DeBruijn : name == "runlength" ? Kind::RunLength : Kind::NearEnd;
        f.value = parse_count(args[0], text);
        if (f.kind == Kind::DeBruijn && (f.value < 1 || f.value > 24)) {
            throw std::invalid_argument("de Bruijn order must be in [1, 24]");
        }
    } else {
        throw std::invalid_argument("unknown family '" + text + "'");
    }
    return f;
}

std::string Family::to_string() const {
    switch (kind) {
        case Kind::Random: return "random";
        case Kind::AllZero: return "allzero";
        case Kind::AllOne: return "allone";
        case Kind::Periodic:
            return "periodic(" + pattern.to_string() + "," + std::to_string(value) + ")";
        case Kind::DeBruijn: return "debruijn(" + std::to_string(value) + ")";
        case Kind::RunLength: return "runlength(" + std::to_string(value) + ")";
        case Kind::NearEnd: return "nearend(" + std::to_string(value) + ")";
    }
    return "?";
}

BitString de_bruijn(std::size_t order) {
    // Prefer-lexicographic concatenation of Lyndon words (FKM algorithm).
    std::vector<int> a(order + 1, 0);
    BitString out;
    auto gen = [&](auto&& self, std::size_t t, std::size_t p) -> void {
        if (t > order) {
            if (order % p == 0) {
                for (std::size_t i = 1; i <= p; ++i) {
                    out.push_back(a[i] != 0);
                }
            }
            return;
        }
        a[t] = a[t - p];
        self(self, t + 1, p);
        if (a[t - p] == 0) {
            a[t] = 1;
            self(self, t + 1, t);
        }
    };
    gen(gen, 1, 1);
    return out;
}

BitString gen_string(const Family& family, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    switch (family.kind) {
        case Family::Kind::Random: {
            BitString s;
            for (std::size_t i = 0; i < n; ++i) {
                s.push_back(rng.coin());
            }
            return s;
        }
        case Family::Kind::AllZero: return BitString::zeros(n);
        case Family::Kind::AllOne: return BitString::ones(n);
        case Family::Kind::Periodic: {
            BitString s;
            for (std::size_t i = 0; i < n; ++i) {
                s.push_back(family.pattern[i % family.pattern.size()]);
            }
            if (n == 0) {
                return s;
            }
            BitString out;
            std::vector<bool> flip(n, false);
            for (std::size_t k = 0; k < family.value; ++k) {
                flip[rng.next() % n] = true;
            }
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(s[i] != flip[i]);
            }
            return out;
        }
        case Family::Kind::DeBruijn: {
            const BitString cycle = de_bruijn(family.value);
            const std::size_t rotation = rng.next() % cycle.size();
            BitString s;
            for (std::size_t i = 0; i < n; ++i) {
                s.push_back(cycle[(rotation + i) % cycle.size()]);
            }
            return s;
        }
        case Family::Kind::RunLength: {
            const std::size_t d = family.value;
            if (d > n) {
                throw std::invalid_argument("runlength: d exceeds n");
            }
            if (d == 0) {
                return BitString::ones(n);
            }
            const BitString base = capped_random(n, d + 1, rng);
            if (max_zero_run(base) == d) {
                return base;
            }
            return plant_run(base, rng.next() % (n - d + 1), d);
        }
        case Family::Kind::NearEnd: {
            // The unique longest zero run ends `offset` symbols before the
            // right end; elsewhere runs stay shorter.
            const std::size_t d = std::max<std::size_t>(2, n > 1 ? floor_log2(n) : 1);
            if (family.value + d > n) {
                throw std::invalid_argument("nearend: offset too large for n");
            }
            const BitString base = capped_random(n, d, rng);
            return plant_run(base, n - family.value - d, d);
        }
    }
    throw std::logic_error("gen_string: unknown family");
}

std::vector<BitString> gen_corpus(const Family& family, std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<BitString> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(gen_string(family, n, Rng::split(seed, i)));
    }
    return out;
}

}  // namespace strrecon
