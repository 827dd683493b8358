#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "badderlocks/gf2poly.hpp"

namespace badderlocks {

/// Codeword appended to messages shorter than eight bytes. It is a valid
/// candidate but deliberately left out of the 256-entry alphabet.
inline constexpr std::uint16_t kFillerCodeword = 71;

/// Width of one codeword in bits.
inline constexpr unsigned kCodewordBits = 9;

/// Messages shorter than this are completed with filler codewords.
inline constexpr std::size_t kMinCodewords = 8;

/// The byte -> 9-bit codeword substitution. Entries are strictly increasing
/// in byte order.
class CodewordTable {
public:
    explicit CodewordTable(const std::array<std::uint16_t, 256>& entries);

    std::uint16_t operator[](std::uint8_t byte) const noexcept { return entries_[byte]; }
    std::uint16_t filler() const noexcept { return kFillerCodeword; }
    std::span<const std::uint16_t, 256> entries() const noexcept { return entries_; }

private:
    std::array<std::uint16_t, 256> entries_;
};

/// Does v satisfy the candidate rules: runs of at most 5 equal bits, at most 2
/// equal leading bits, at most 3 equal trailing bits, weight 3..6.
bool is_candidate_codeword(std::uint16_t v) noexcept;

/// All 9-bit candidate codewords in increasing order (308 of them).
std::vector<std::uint16_t> candidates_308();

/// The normative table, built from the embedded range list on first use. The
/// construction re-checks every table invariant and throws std::logic_error
/// if the transcription is inconsistent.
const CodewordTable& codeword_table();

/// Substitutes each byte by its codeword, first byte in the highest-order
/// position, then appends filler codewords on the low-order side until there
/// are at least eight codewords.
BitPolynomial expand_message(std::span<const std::uint8_t> message);

/// Smallest and largest Hamming weight seen in any 9-bit window inside the
/// 18-bit concatenation of two codewords, over every ordered pair drawn from
/// the alphabet plus the filler. Also counts windows at each weight.
struct WindowWeightStats {
    unsigned min_weight = 9;
    unsigned max_weight = 0;
    std::array<std::size_t, 10> windows_by_weight{};
};

WindowWeightStats pair_window_weights();

}  // namespace badderlocks
