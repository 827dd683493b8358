#pragma once

// Word-level helpers shared by the polynomial, shift-register and CRC code.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "badderlocks/gf2poly.hpp"

namespace badderlocks::detail {

/// 64x64 -> 128 carry-less product as (low, high).
inline std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t lo = 0, hi = 0;
    while (b != 0) {
        const int i = std::countr_zero(b);
        b &= b - 1;
        lo ^= a << i;
        if (i != 0) hi ^= a >> (64 - i);
    }
    return {lo, hi};
}

/// Moves bit k of x to bit 2k.
inline std::uint64_t spread32(std::uint32_t v) noexcept {
    std::uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

/// Up to 64 bits of a packed bit array starting at bit `pos`; bits past the end
/// read as zero.
inline std::uint64_t read_bits(const std::vector<std::uint64_t>& words, std::size_t pos,
                               unsigned count) noexcept {
    const std::size_t w = pos / 64;
    const unsigned b = pos % 64;
    std::uint64_t v = w < words.size() ? words[w] >> b : 0;
    if (b != 0 && w + 1 < words.size()) v |= words[w + 1] << (64 - b);
    return count == 64 ? v : v & ((std::uint64_t{1} << count) - 1);
}

/// Schoolbook reduction modulo a fixed divisor. Keeps the divisor pre-shifted
/// by every bit offset 0..63 so each reduction step is an aligned word XOR.
class Reducer {
public:
    explicit Reducer(const BitPolynomial& divisor)
        : degree_(*divisor.degree()), span_(divisor.words().size() + 1), shifted_(64 * span_, 0) {
        const auto dw = divisor.words();
        for (unsigned s = 0; s < 64; ++s) {
            std::uint64_t* row = &shifted_[s * span_];
            for (std::size_t i = 0; i < dw.size(); ++i) {
                row[i] |= dw[i] << s;
                if (s != 0) row[i + 1] |= dw[i] >> (64 - s);
            }
        }
    }

    std::size_t degree() const noexcept { return degree_; }

    /// Reduces the packed polynomial in place; the result may keep zero words
    /// above the divisor degree.
    void reduce(std::vector<std::uint64_t>& work) const noexcept {
        std::size_t top = work.size();
        while (top > 0) {
            const std::uint64_t word = work[top - 1];
            if (word == 0) {
                --top;
                continue;
            }
            const std::size_t i = (top - 1) * 64 + (63 - std::countl_zero(word));
            if (i < degree_) break;
            const std::size_t off = i - degree_;
            const std::uint64_t* row = &shifted_[(off % 64) * span_];
            const std::size_t base = off / 64;
            const std::size_t n = std::min(span_, work.size() - base);
            for (std::size_t j = 0; j < n; ++j) work[base + j] ^= row[j];
        }
        if (work.size() > degree_ / 64 + 1) work.resize(degree_ / 64 + 1);
    }

    BitPolynomial reduced(const BitPolynomial& p) const {
        std::vector<std::uint64_t> work(p.words().begin(), p.words().end());
        reduce(work);
        return BitPolynomial::from_words(std::move(work));
    }

private:
    std::size_t degree_;
    std::size_t span_;
    std::vector<std::uint64_t> shifted_;
};

}  // namespace badderlocks::detail
