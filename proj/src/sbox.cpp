#include "badderlocks/sbox.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace badderlocks {

namespace {

struct Range {
    std::uint16_t first;
    std::uint16_t last;
};

// The 256 codewords, as published: inclusive ranges in increasing order.
constexpr Range kEnumeration[] = {
    {69, 70},   {73, 78},   {81, 94},   {98, 110},  {113, 118}, {120, 122}, {124, 124},
    {134, 134}, {138, 142}, {146, 158}, {162, 174}, {177, 186}, {188, 188}, {194, 206},
    {209, 220}, {225, 236}, {241, 242}, {244, 244}, {267, 267}, {269, 270}, {275, 286},
    {291, 302}, {305, 317}, {323, 323}, {325, 334}, {337, 349}, {353, 365}, {369, 373},
    {377, 377}, {387, 387}, {389, 391}, {393, 398}, {401, 413}, {417, 430}, {433, 438},
    {441, 442},
};

// Length of the run of bits equal to the bit at `from`, walking towards lower
// positions (step -1) or higher ones (step +1).
unsigned run_from(std::uint16_t v, int from, int step) {
    const unsigned bit = (v >> from) & 1;
    unsigned n = 0;
    for (int i = from; i >= 0 && i < static_cast<int>(kCodewordBits) && ((v >> i) & 1) == bit; i += step) ++n;
    return n;
}

unsigned longest_run(std::uint16_t v) {
    unsigned best = 0;
    for (int i = 0; i < static_cast<int>(kCodewordBits); ++i) best = std::max(best, run_from(v, i, 1));
    return best;
}

std::array<std::uint16_t, 256> enumerate_table() {
    std::array<std::uint16_t, 256> out{};
    std::size_t n = 0;
    for (const auto& r : kEnumeration) {
        for (unsigned v = r.first; v <= r.last; ++v) {
            if (n == out.size()) throw std::logic_error("codeword enumeration has more than 256 values");
            out[n++] = static_cast<std::uint16_t>(v);
        }
    }
    if (n != out.size()) {
        throw std::logic_error("codeword enumeration has " + std::to_string(n) + " values, expected 256");
    }
    return out;
}

}  // namespace

bool is_candidate_codeword(std::uint16_t v) noexcept {
    if (v >= (1u << kCodewordBits)) return false;
    const int weight = std::popcount(v);
    return weight >= 3 && weight <= 6 && longest_run(v) <= 5 &&
           run_from(v, kCodewordBits - 1, -1) <= 2 && run_from(v, 0, 1) <= 3;
}

std::vector<std::uint16_t> candidates_308() {
    std::vector<std::uint16_t> out;
    for (std::uint16_t v = 0; v < (1u << kCodewordBits); ++v) {
        if (is_candidate_codeword(v)) out.push_back(v);
    }
    return out;
}

CodewordTable::CodewordTable(const std::array<std::uint16_t, 256>& entries) : entries_(entries) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto v = entries_[i];
        if (!is_candidate_codeword(v)) {
            throw std::logic_error("codeword " + std::to_string(v) + " violates the candidate rules");
        }
        if (i > 0 && entries_[i - 1] >= v) {
            throw std::logic_error("codewords are not strictly increasing at byte " + std::to_string(i));
        }
        if (v == kFillerCodeword) throw std::logic_error("the filler codeword appears in the table");
    }
    if (!is_candidate_codeword(kFillerCodeword)) {
        throw std::logic_error("the filler codeword violates the candidate rules");
    }
}

const CodewordTable& codeword_table() {
    static const CodewordTable table(enumerate_table());
    return table;
}

BitPolynomial expand_message(std::span<const std::uint8_t> message) {
    const CodewordTable& table = codeword_table();
    const std::size_t codewords = std::max(message.size(), kMinCodewords);
    const std::size_t total_bits = codewords * kCodewordBits;
    std::vector<std::uint64_t> words((total_bits + 63) / 64, 0);

    auto put = [&](std::size_t index, std::uint64_t cw) {
        // Codeword `index` occupies bits [total - 9(index+1), total - 9 index).
        const std::size_t pos = total_bits - kCodewordBits * (index + 1);
        words[pos / 64] |= cw << (pos % 64);
        if (pos % 64 > 64 - kCodewordBits) words[pos / 64 + 1] |= cw >> (64 - pos % 64);
    };
    for (std::size_t i = 0; i < message.size(); ++i) put(i, table[message[i]]);
    for (std::size_t i = message.size(); i < codewords; ++i) put(i, kFillerCodeword);
    return BitPolynomial::from_words(std::move(words));
}

WindowWeightStats pair_window_weights() {
    std::vector<std::uint16_t> alphabet(codeword_table().entries().begin(), codeword_table().entries().end());
    alphabet.push_back(kFillerCodeword);

    WindowWeightStats stats;
    for (auto a : alphabet) {
        for (auto b : alphabet) {
            const std::uint32_t joined = (std::uint32_t{a} << kCodewordBits) | b;
            for (unsigned off = 0; off <= kCodewordBits; ++off) {
                const auto w = static_cast<unsigned>(std::popcount((joined >> off) & 0x1FFu));
                stats.min_weight = std::min(stats.min_weight, w);
                stats.max_weight = std::max(stats.max_weight, w);
                ++stats.windows_by_weight[w];
            }
        }
    }
    return stats;
}

}  // namespace badderlocks
