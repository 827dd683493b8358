// LFSR output generation and Berlekamp-Massey synthesis over packed bits.

#include <bit>
#include <utility>

#include "badderlocks/error.hpp"
#include "badderlocks/gf2poly.hpp"
#include "word_ops.hpp"

namespace badderlocks {

namespace {

using detail::read_bits;

std::vector<std::uint64_t> pack(std::span<const std::uint8_t> bits, bool reversed) {
    std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::size_t pos = reversed ? bits.size() - 1 - i : i;
        if (bits[i] & 1) words[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
    return words;
}

void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    const std::size_t needed = src.size() + ws + 1;
    if (dst.size() < needed) dst.resize(needed, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (bs != 0) dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
}

}  // namespace

BitSequence bits_from_string(std::string_view text) {
    BitSequence out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw ParseError("bit string may only contain '0' and '1'", i);
        }
        out.push_back(text[i] == '1' ? 1 : 0);
    }
    return out;
}

BitSequence lfsr_stream(const BitPolynomial& f, std::span<const std::uint8_t> seed,
                        std::size_t count) {
    const auto deg = f.degree();
    if (!deg || *deg < 1) throw ParameterError("lfsr_stream: polynomial degree must be at least 1");
    const std::size_t d = *deg;
    if (seed.size() != d) {
        throw ParameterError("lfsr_stream: seed has " + std::to_string(seed.size()) +
                             " bits, polynomial degree is " + std::to_string(d));
    }
    bool nonzero = false;
    for (auto b : seed) nonzero |= (b & 1) != 0;
    if (!nonzero) throw ParameterError("lfsr_stream: seed must be nonzero");

    // Taps are the coefficients f_0..f_{d-1}.
    std::vector<std::uint64_t> taps(f.words().begin(), f.words().end());
    taps[d / 64] &= ~(std::uint64_t{1} << (d % 64));

    std::vector<std::uint64_t> seq = pack(seed, false);
    seq.resize((std::max(count, d) + 63) / 64, 0);
    for (std::size_t j = 0; j + d < count; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k * 64 < d; ++k) {
            const unsigned n = static_cast<unsigned>(std::min<std::size_t>(64, d - k * 64));
            acc ^= read_bits(seq, j + k * 64, n) & taps[k];
        }
        if (std::popcount(acc) & 1) seq[(j + d) / 64] |= std::uint64_t{1} << ((j + d) % 64);
    }

    BitSequence out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<std::uint8_t>((seq[i / 64] >> (i % 64)) & 1);
    return out;
}

LinearComplexity berlekamp_massey(std::span<const std::uint8_t> bits) {
    const std::size_t total = bits.size();
    // Stored back to front so the window s[n], s[n-1], ..., s[n-L] is a
    // contiguous ascending bit run starting at total-1-n.
    const std::vector<std::uint64_t> rev = pack(bits, true);

    std::vector<std::uint64_t> conn{1};  // C(x)
    std::vector<std::uint64_t> prev{1};  // B(x)
    std::size_t length = 0;
    std::size_t gap = 1;

    for (std::size_t n = 0; n < total; ++n) {
        std::uint64_t acc = 0;
        const std::size_t base = total - 1 - n;
        for (std::size_t k = 0; k * 64 <= length && k < conn.size(); ++k) {
            acc ^= read_bits(rev, base + k * 64, 64) & conn[k];
        }
        if ((std::popcount(acc) & 1) == 0) {
            ++gap;
        } else if (2 * length <= n) {
            auto saved = conn;
            xor_shifted(conn, prev, gap);
            length = n + 1 - length;
            prev = std::move(saved);
            gap = 1;
        } else {
            xor_shifted(conn, prev, gap);
            ++gap;
        }
    }

    // Reverse C over L+1 coefficients.
    std::vector<std::uint64_t> chr(length / 64 + 1, 0);
    for (std::size_t i = 0; i <= length; ++i) {
        const std::size_t w = i / 64;
        if (w < conn.size() && ((conn[w] >> (i % 64)) & 1)) {
            const std::size_t j = length - i;
            chr[j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    return {length, BitPolynomial::from_words(std::move(chr))};
}

}  // namespace badderlocks
