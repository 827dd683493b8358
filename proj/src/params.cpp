#include "badderlocks/params.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "badderlocks/embedded_data.hpp"
#include "badderlocks/error.hpp"

namespace badderlocks {

std::size_t size_for_index(int index) {
    if (index < 1 || index > kRegistrySize) {
        throw ParameterError("size index must be in 1.." + std::to_string(kRegistrySize) + ", got " +
                             std::to_string(index));
    }
    // (i-2)(i-3) >= 0 for every integer i, so the floor is plain division.
    const long i = index;
    return static_cast<std::size_t>((2 * i + ((i - 2) * (i - 3)) / 10) * 32);
}

namespace {

std::size_t parse_size(std::string_view tok, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw RegistryError("registry line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::string entry_name(const GeneratorEntry& e) {
    return "entry " + std::to_string(e.index) + " (" + std::to_string(e.aligned_bits) + " bits)";
}

}  // namespace

std::vector<GeneratorEntry> parse_registry(std::string_view text) {
    std::vector<GeneratorEntry> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;

        const auto bar = line.find('|');
        if (bar == std::string_view::npos) {
            throw RegistryError("registry line " + std::to_string(line_no) + ": missing '|' before the generator");
        }
        const auto fields = split_ws(line.substr(0, bar));
        if (fields.size() != 8) {
            throw RegistryError("registry line " + std::to_string(line_no) + ": expected 8 fields before '|', got " +
                                std::to_string(fields.size()));
        }
        GeneratorEntry e;
        e.index = static_cast<int>(parse_size(fields[0], line_no));
        e.target_bits = parse_size(fields[1], line_no);
        e.aligned_bits = parse_size(fields[2], line_no);
        e.degree = parse_size(fields[3], line_no);
        e.w = parse_size(fields[4], line_no);
        e.n = parse_size(fields[5], line_no);
        e.m = parse_size(fields[6], line_no);
        try {
            e.phi = parse_hex(fields[7]);
            e.generator = parse_hex(line.substr(bar + 1));
        } catch (const ParseError& err) {
            throw RegistryError("registry line " + std::to_string(line_no) + ": " + err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_entry(const GeneratorEntry& e, VerifyLevel level) {
    VerificationReport report;
    report.index = e.index;
    report.aligned_bits = e.aligned_bits;
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    bool target_ok = false;
    std::string target_detail;
    try {
        const auto expected = size_for_index(e.index);
        target_ok = expected == e.target_bits;
        target_detail = "formula gives " + std::to_string(expected);
    } catch (const ParameterError& err) {
        target_detail = err.what();
    }
    check("target size formula", target_ok, target_detail);

    check("degree == w * n", e.degree == e.w * e.n,
          std::to_string(e.w) + " * " + std::to_string(e.n) + " = " + std::to_string(e.w * e.n));
    check("aligned == byte-rounded degree", e.aligned_bits == 8 * ((e.degree + 7) / 8));
    check("aligned <= target", e.aligned_bits <= e.target_bits);

    const auto gdeg = e.generator.degree();
    check("generator degree", gdeg && *gdeg == e.degree,
          gdeg ? "degree " + std::to_string(*gdeg) : std::string("zero polynomial"));
    const auto pdeg = e.phi.degree();
    check("phi degree == w", pdeg && *pdeg == e.w,
          pdeg ? "degree " + std::to_string(*pdeg) : std::string("zero polynomial"));

    bool compose_ok = false;
    std::string compose_detail;
    try {
        compose_ok = compose_tgfsr(e.phi, e.n, e.m) == e.generator;
        if (!compose_ok) compose_detail = "phi(x^N + x^M) differs from the listed generator";
    } catch (const ParameterError& err) {
        compose_detail = err.what();
    }
    check("generator == phi(x^N + x^M)", compose_ok, compose_detail);

    check("phi irreducible", pdeg && *pdeg >= 1 && is_irreducible(e.phi));

    if (level == VerifyLevel::full) {
        check("generator irreducible", gdeg && *gdeg >= 1 && is_irreducible(e.generator));

        bool bm_ok = false;
        std::string bm_detail;
        if (gdeg && *gdeg >= 1) {
            std::mt19937_64 rng(0xBADDE710CC5ull + static_cast<std::uint64_t>(e.index));
            BitSequence seed(*gdeg);
            for (auto& b : seed) b = static_cast<std::uint8_t>(rng() & 1);
            seed[0] = 1;
            const auto stream = lfsr_stream(e.generator, seed, 2 * *gdeg);
            const auto lc = berlekamp_massey(stream);
            bm_ok = lc.length == *gdeg && lc.polynomial == e.generator;
            bm_detail = "linear complexity " + std::to_string(lc.length);
        }
        check("Berlekamp-Massey recovers generator", bm_ok, bm_detail);
    }
    return report;
}

const std::vector<GeneratorEntry>& registry() {
    static const std::vector<GeneratorEntry> entries = [] {
        auto parsed = parse_registry(data::registry_txt());
        if (parsed.size() != static_cast<std::size_t>(kRegistrySize)) {
            throw RegistryError("embedded registry has " + std::to_string(parsed.size()) + " entries, expected " +
                                std::to_string(kRegistrySize));
        }
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            const auto& e = parsed[i];
            if (e.index != static_cast<int>(i + 1)) {
                throw RegistryError(entry_name(e) + ": out of order in the registry data");
            }
            if (i > 0 && parsed[i - 1].aligned_bits >= e.aligned_bits) {
                throw RegistryError(entry_name(e) + ": sizes are not increasing");
            }
            const auto report = verify_entry(e, VerifyLevel::quick);
            for (const auto& c : report.checks) {
                if (!c.passed) throw RegistryError(entry_name(e) + ": check '" + c.name + "' failed " + c.detail);
            }
        }
        return parsed;
    }();
    return entries;
}

const GeneratorEntry& select_generator(std::size_t max_bits) {
    const auto& reg = registry();
    const GeneratorEntry* best = nullptr;
    for (const auto& e : reg) {
        if (e.aligned_bits <= max_bits) best = &e;
    }
    if (best == nullptr) {
        throw ParameterError("no generator fits in " + std::to_string(max_bits) + " bits (smallest is " +
                             std::to_string(reg.front().aligned_bits) + ")");
    }
    return *best;
}

std::string valid_aligned_sizes() {
    std::ostringstream os;
    const auto& reg = registry();
    for (std::size_t i = 0; i < reg.size(); ++i) os << (i ? ", " : "") << reg[i].aligned_bits;
    return os.str();
}

const GeneratorEntry& entry_by_aligned_bits(std::size_t aligned_bits) {
    for (const auto& e : registry()) {
        if (e.aligned_bits == aligned_bits) return e;
    }
    throw ParameterError("no generator with " + std::to_string(aligned_bits) + " output bits; valid sizes: " +
                         valid_aligned_sizes());
}

}  // namespace badderlocks
